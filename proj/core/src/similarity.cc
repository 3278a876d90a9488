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

#include "reslve/similarity.h"

#include <algorithm>
#include <set>

#include "reslve/errors.h"

namespace reslve {

template <typename Tag>
void SparseVector<Tag>::Add(std::string_view key, double weight) {
  if (!std::isfinite(weight) || weight < 0.0) {
    throw InvariantError("vector weights must be finite and non-negative");
  }
  if (weight == 0.0) return;
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::string(key), weight);
  } else {
    it->second += weight;
  }
}

template <typename Tag>
void SparseVector<Tag>::Set(std::string_view key, double weight) {
  if (!std::isfinite(weight) || weight < 0.0) {
    throw InvariantError("vector weights must be finite and non-negative");
  }
  auto it = entries_.find(key);
  if (weight == 0.0) {
    if (it != entries_.end()) entries_.erase(it);
    return;
  }
  if (it == entries_.end()) {
    entries_.emplace(std::string(key), weight);
  } else {
    it->second = weight;
  }
}

template <typename Tag>
double SparseVector<Tag>::Norm() const {
  double sum = 0.0;
  for (const auto& [key, w] : entries_) sum += w * w;
  return std::sqrt(sum);
}

template <typename Tag>
SparseVector<Tag> SparseVector<Tag>::Scaled(double factor) const {
  SparseVector scaled;
  for (const auto& [key, w] : entries_) scaled.Set(key, w * factor);
  return scaled;
}

template <typename Tag>
double CosineSimilarity(const SparseVector<Tag>& a, const SparseVector<Tag>& b) {
  double norm_a = a.Norm();
  double norm_b = b.Norm();
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  // Merge walk over the two sorted key sets.
  double dot = 0.0;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    int cmp = ia->first.compare(ib->first);
    if (cmp < 0) {
      ++ia;
    } else if (cmp > 0) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return std::clamp(dot / (norm_a * norm_b), 0.0, 1.0);
}

template class SparseVector<TermTag>;
template class SparseVector<CategoryTag>;
template double CosineSimilarity(const TermVector&, const TermVector&);
template double CosineSimilarity(const CategoryVector&, const CategoryVector&);

CorpusStatistics CorpusStatistics::Build(
    std::span<const std::vector<std::string>> documents,
    const PruningOptions& pruning) {
  if (documents.empty()) throw InputError("corpus statistics need at least one document");
  CorpusStatistics stats;
  stats.document_count_ = documents.size();
  for (const auto& doc : documents) {
    std::set<std::string_view> seen(doc.begin(), doc.end());
    for (std::string_view term : seen) {
      auto it = stats.document_frequency_.find(term);
      if (it == stats.document_frequency_.end()) {
        stats.document_frequency_.emplace(std::string(term), 1);
      } else {
        ++it->second;
      }
    }
  }
  const double max_df =
      pruning.max_document_fraction * static_cast<double>(stats.document_count_);
  std::erase_if(stats.document_frequency_, [&](const auto& entry) {
    return entry.second < pruning.min_document_frequency ||
           static_cast<double>(entry.second) > max_df;
  });
  return stats;
}

std::size_t CorpusStatistics::DocumentFrequency(std::string_view term) const {
  auto it = document_frequency_.find(term);
  return it == document_frequency_.end() ? 0 : it->second;
}

std::optional<double> CorpusStatistics::Idf(std::string_view term) const {
  std::size_t df = DocumentFrequency(term);
  if (df == 0) return std::nullopt;
  return std::log(static_cast<double>(document_count_) / static_cast<double>(df));
}

TermVector TfIdfVector(std::span<const std::vector<std::string>> subject_documents,
                       const CorpusStatistics& stats) {
  std::map<std::string_view, std::size_t> tf;
  for (const auto& doc : subject_documents) {
    for (const std::string& term : doc) ++tf[term];
  }
  TermVector vector;
  for (const auto& [term, count] : tf) {
    std::optional<double> idf = stats.Idf(term);
    if (!idf) continue;
    vector.Set(term, static_cast<double>(count) * *idf);
  }
  return vector;
}

CategoryVector UserCategoryVector(const UserInterestModel& model, FrequencyMode mode) {
  // dist(c): greatest edge weight over the user's topics; freq(c): linked
  // articles (optionally counted once per edit).
  std::map<std::string_view, PathWeight> dist;
  std::map<std::string_view, long long> freq;
  for (const auto& [key, weight] : model.aggregated.edges()) {
    const auto& [topic, category] = key;
    auto [it, inserted] = dist.try_emplace(category, weight);
    if (!inserted && weight > it->second) it->second = weight;
    long long contribution = 1;
    if (mode == FrequencyMode::kEdits) {
      auto edits = model.edited_topics.find(topic);
      contribution = edits == model.edited_topics.end() ? 1 : edits->second;
    }
    freq[category] += contribution;
  }
  CategoryVector vector;
  for (const auto& [category, weight] : dist) {
    vector.Set(category, weight.value() * static_cast<double>(freq.at(category)));
  }
  return vector;
}

CategoryVector CandidateCategoryVector(const KnowledgeGraph& graph,
                                       std::string_view candidate_topic,
                                       int max_depth) {
  CategoryVector vector;
  if (!graph.HasTopic(candidate_topic)) return vector;
  for (const auto& [category, weight] :
       BuildTopicInterestGraph(graph, candidate_topic, max_depth).edges) {
    vector.Set(category, weight.value());
  }
  return vector;
}

void ValidateAlpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("alpha must lie in [0,1], got " + std::to_string(alpha));
  }
}

double CombineScores(double content, double category, double alpha) {
  ValidateAlpha(alpha);
  return std::clamp(alpha * content + (1.0 - alpha) * category, 0.0, 1.0);
}

std::vector<ScoredCandidate> ScoreCandidates(const UserInterestModel& model,
                                             const AmbiguousEntity& entity,
                                             const KnowledgeGraph& graph,
                                             const RankingOptions& options) {
  // Corpus: the user's article documents plus each distinct candidate
  // article not already among them.
  std::vector<std::vector<std::string>> corpus;
  std::vector<std::vector<std::string>> user_docs;
  for (const auto& [topic, doc] : model.corpus) {
    corpus.push_back(doc);
    user_docs.push_back(doc);
  }
  std::map<TopicId, std::vector<std::string>> candidate_docs;
  for (const CandidateMeaning& c : entity.candidates) {
    if (candidate_docs.contains(c.topic)) continue;
    std::vector<std::string> doc;
    if (auto it = model.corpus.find(c.topic); it != model.corpus.end()) {
      doc = it->second;
    } else if (const TopicNode* topic = graph.FindTopic(c.topic)) {
      doc = ArticleDocument(graph, *topic);
      corpus.push_back(doc);
    }
    candidate_docs.emplace(c.topic, std::move(doc));
  }

  std::vector<ScoredCandidate> scored;
  scored.reserve(entity.candidates.size());
  if (corpus.empty()) {
    for (const CandidateMeaning& c : entity.candidates) scored.push_back({c, {}});
    return scored;
  }
  CorpusStatistics stats = CorpusStatistics::Build(corpus, options.pruning);
  TermVector user_terms = TfIdfVector(user_docs, stats);
  CategoryVector user_categories = UserCategoryVector(model, options.frequency);

  for (const CandidateMeaning& c : entity.candidates) {
    const std::vector<std::string>& doc = candidate_docs.at(c.topic);
    TermVector candidate_terms = TfIdfVector(std::span(&doc, 1), stats);
    CategoryVector candidate_categories =
        CandidateCategoryVector(graph, c.topic, options.max_depth);
    SimilarityScores scores;
    scores.content = CosineSimilarity(user_terms, candidate_terms);
    scores.category = CosineSimilarity(user_categories, candidate_categories);
    scored.push_back({c, scores});
  }
  return scored;
}

RankedResult RankAtAlpha(std::vector<ScoredCandidate> scored, double alpha) {
  ValidateAlpha(alpha);
  for (ScoredCandidate& s : scored) {
    s.scores.combined = CombineScores(s.scores.content, s.scores.category, alpha);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ScoredCandidate& a, const ScoredCandidate& b) {
                     if (a.scores.combined != b.scores.combined) {
                       return a.scores.combined > b.scores.combined;
                     }
                     if (a.candidate.prior != b.candidate.prior) {
                       return a.candidate.prior > b.candidate.prior;
                     }
                     return a.candidate.topic < b.candidate.topic;
                   });
  return RankedResult{std::move(scored)};
}

RankedResult RankCandidates(const UserInterestModel& model,
                            const AmbiguousEntity& entity,
                            const KnowledgeGraph& graph,
                            const RankingOptions& options) {
  ValidateAlpha(options.alpha);
  if (entity.candidates.empty()) {
    throw InputError("entity '" + entity.surface + "' has no candidates to rank");
  }
  return RankAtAlpha(ScoreCandidates(model, entity, graph, options), options.alpha);
}

SimilarityScores CombinedScore(const UserInterestModel& model,
                               const AmbiguousEntity& entity,
                               std::string_view candidate_topic,
                               const KnowledgeGraph& graph,
                               const RankingOptions& options) {
  ValidateAlpha(options.alpha);
  for (ScoredCandidate& s : ScoreCandidates(model, entity, graph, options)) {
    if (s.candidate.topic != candidate_topic) continue;
    s.scores.combined = CombineScores(s.scores.content, s.scores.category, options.alpha);
    return s.scores;
  }
  throw InputError("topic " + std::string(candidate_topic) +
                   " is not a candidate of '" + entity.surface + "'");
}

}  // namespace reslve
