// Copyright 2026 The reslve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef RESLVE_TESTS_ORACLES_RANKING_ORACLE_H_
#define RESLVE_TESTS_ORACLES_RANKING_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "reslve/candidates.h"
#include "reslve/interest_model.h"
#include "reslve/knowledge_graph.h"
#include "reslve/similarity.h"

namespace reslve::oracle {

struct DenseScore {
  TopicId topic;
  double prior = 0.0;
  double content = 0.0;
  double category = 0.0;
  double combined = 0.0;
};

// All-pairs category distances by Floyd-Warshall. kFar marks unreachable.
inline constexpr int kFar = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> CategoryDistanceTable(const KnowledgeGraph& graph) {
  const std::size_t n = graph.category_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (const CategoryId& p : graph.FindCategory(graph.CategoryAt(i))->parents) {
      d[i][*graph.CategoryIndex(p)] = std::min(d[i][*graph.CategoryIndex(p)], 1);
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Topic-to-category path lengths (1 + category distance), capped.
inline std::vector<int> TopicDistances(const KnowledgeGraph& graph,
                                       const std::vector<std::vector<int>>& table,
                                       const TopicId& topic, int max_depth) {
  std::vector<int> out(graph.category_count(), kFar);
  const TopicNode* node = graph.FindTopic(topic);
  if (node == nullptr) return out;
  for (const CategoryId& c : node->categories) {
    std::size_t from = *graph.CategoryIndex(c);
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = std::min(out[j], 1 + table[from][j]);
    }
  }
  for (int& v : out) {
    if (v > max_depth) v = kFar;
  }
  return out;
}

inline double DenseCosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

// Recomputes the full ranking from the graph and the user's (already
// filtered) edits with dense vectors over the whole vocabulary and category
// set. Ties: higher combined, then higher prior, then smaller topic id.
inline std::vector<DenseScore> DenseRank(const KnowledgeGraph& graph,
                                         const std::vector<EditRecord>& edits,
                                         const std::string& user,
                                         const AmbiguousEntity& entity,
                                         const RankingOptions& options) {
  std::map<TopicId, int> edit_counts;
  for (const EditRecord& e : edits) {
    if (e.user == user) ++edit_counts[e.topic];
  }

  // Documents: edited articles, then candidate articles not already present.
  std::vector<std::vector<std::string>> corpus;
  std::vector<std::string> user_terms;
  for (const auto& [topic, count] : edit_counts) {
    std::vector<std::string> doc = ArticleDocument(graph, *graph.FindTopic(topic));
    user_terms.insert(user_terms.end(), doc.begin(), doc.end());
    corpus.push_back(std::move(doc));
  }
  std::set<TopicId> added;
  std::map<TopicId, std::vector<std::string>> candidate_doc;
  for (const CandidateMeaning& c : entity.candidates) {
    const TopicNode* node = graph.FindTopic(c.topic);
    candidate_doc[c.topic] = node ? ArticleDocument(graph, *node) : std::vector<std::string>{};
    if (node && !edit_counts.contains(c.topic) && added.insert(c.topic).second) {
      corpus.push_back(candidate_doc[c.topic]);
    }
  }

  std::map<std::string, std::size_t> df;
  for (const auto& doc : corpus) {
    for (const std::string& term : std::set<std::string>(doc.begin(), doc.end())) ++df[term];
  }
  const double n_docs = static_cast<double>(corpus.size());
  std::vector<std::string> vocabulary;
  std::vector<double> idf;
  for (const auto& [term, count] : df) {
    if (count < options.pruning.min_document_frequency) continue;
    if (static_cast<double>(count) > options.pruning.max_document_fraction * n_docs) continue;
    vocabulary.push_back(term);
    idf.push_back(std::log(n_docs / static_cast<double>(count)));
  }
  auto tfidf = [&](const std::vector<std::string>& terms) {
    std::vector<double> v(vocabulary.size(), 0.0);
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
      double tf = static_cast<double>(std::count(terms.begin(), terms.end(), vocabulary[i]));
      v[i] = tf * idf[i];
    }
    return v;
  };
  std::vector<double> user_content = tfidf(user_terms);

  auto table = CategoryDistanceTable(graph);
  const std::size_t n_cat = graph.category_count();
  std::vector<int> closest(n_cat, kFar);
  std::vector<double> freq(n_cat, 0.0);
  for (const auto& [topic, count] : edit_counts) {
    std::vector<int> d = TopicDistances(graph, table, topic, options.max_depth);
    for (std::size_t j = 0; j < n_cat; ++j) {
      if (d[j] == kFar) continue;
      closest[j] = std::min(closest[j], d[j]);
      freq[j] += options.frequency == FrequencyMode::kEdits ? count : 1;
    }
  }
  std::vector<double> user_category(n_cat, 0.0);
  for (std::size_t j = 0; j < n_cat; ++j) {
    if (closest[j] != kFar) user_category[j] = (1.0 / closest[j]) * freq[j];
  }

  std::vector<DenseScore> scores;
  for (const CandidateMeaning& c : entity.candidates) {
    DenseScore s{c.topic, c.prior};
    s.content = DenseCosine(user_content, tfidf(candidate_doc[c.topic]));
    std::vector<double> cand(n_cat, 0.0);
    if (graph.HasTopic(c.topic)) {
      std::vector<int> d = TopicDistances(graph, table, c.topic, options.max_depth);
      for (std::size_t j = 0; j < n_cat; ++j) {
        if (d[j] != kFar) cand[j] = 1.0 / d[j];
      }
    }
    s.category = DenseCosine(user_category, cand);
    s.combined = std::clamp(options.alpha * s.content + (1.0 - options.alpha) * s.category,
                            0.0, 1.0);
    scores.push_back(s);
  }

  // Selection sort: repeatedly pull the best remaining entry.
  std::vector<DenseScore> ranked;
  while (!scores.empty()) {
    auto best = scores.begin();
    for (auto it = scores.begin(); it != scores.end(); ++it) {
      bool better = it->combined > best->combined ||
                    (it->combined == best->combined &&
                     (it->prior > best->prior ||
                      (it->prior == best->prior && it->topic < best->topic)));
      if (better) best = it;
    }
    ranked.push_back(*best);
    scores.erase(best);
  }
  return ranked;
}

}  // namespace reslve::oracle

#endif  // RESLVE_TESTS_ORACLES_RANKING_ORACLE_H_
