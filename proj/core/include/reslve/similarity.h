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

#ifndef RESLVE_SIMILARITY_H_
#define RESLVE_SIMILARITY_H_

// Personal-relevance scoring of candidate meanings against a user interest
// model.
//
// Two cosine similarities are combined:
//   content:  TF-IDF term vectors over article titles, bodies and category
//             titles of the user's edited articles vs. the candidate article;
//   category: vectors over categories weighted dist(c) * freq(c), where
//             dist(c) is the topic-interest edge weight 1/p and freq(c) the
//             number of subject articles linked to c.
// The composite is alpha * content + (1 - alpha) * category.

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reslve/candidates.h"
#include "reslve/interest_model.h"
#include "reslve/knowledge_graph.h"

namespace reslve {

// Sparse non-negative vector keyed by string. Zero entries are never stored.
template <typename Tag>
class SparseVector {
 public:
  using Entries = std::map<std::string, double, std::less<>>;

  SparseVector() = default;

  // Adds to the weight of key. Throws InvariantError on negative or
  // non-finite input.
  void Add(std::string_view key, double weight);
  void Set(std::string_view key, double weight);
  double Get(std::string_view key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0.0 : it->second;
  }

  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double Norm() const;
  SparseVector Scaled(double factor) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Entries entries_;
};

struct TermTag {};
struct CategoryTag {};
using TermVector = SparseVector<TermTag>;
using CategoryVector = SparseVector<CategoryTag>;

// dot(a,b) / (|a| |b|), clamped to [0,1]; 0 when either vector is zero.
template <typename Tag>
double CosineSimilarity(const SparseVector<Tag>& a, const SparseVector<Tag>& b);

// High/low document-frequency cut applied to the vocabulary.
struct PruningOptions {
  std::size_t min_document_frequency = 2;
  double max_document_fraction = 0.9;  // drop df > fraction * N

  static PruningOptions None() { return {1, 1.0}; }
};

class CorpusStatistics {
 public:
  // Throws InputError for an empty corpus.
  static CorpusStatistics Build(std::span<const std::vector<std::string>> documents,
                                const PruningOptions& pruning = {});

  std::size_t document_count() const { return document_count_; }
  std::size_t vocabulary_size() const { return document_frequency_.size(); }
  // 0 for pruned or unseen terms.
  std::size_t DocumentFrequency(std::string_view term) const;
  // ln(N / df); absent for terms outside the vocabulary.
  std::optional<double> Idf(std::string_view term) const;

 private:
  std::size_t document_count_ = 0;
  std::map<std::string, std::size_t, std::less<>> document_frequency_;
};

// tf = raw count over all subject documents; weight = tf * idf.
TermVector TfIdfVector(std::span<const std::vector<std::string>> subject_documents,
                       const CorpusStatistics& stats);

// How freq(c) counts a user's articles.
enum class FrequencyMode {
  kArticles,  // each linked article once
  kEdits,     // each linked article once per surviving edit
};

CategoryVector UserCategoryVector(const UserInterestModel& model,
                                  FrequencyMode mode = FrequencyMode::kEdits);
// freq(c) is 1 for every category in the candidate's hierarchy. Unknown
// topics give an empty vector.
CategoryVector CandidateCategoryVector(const KnowledgeGraph& graph,
                                       std::string_view candidate_topic,
                                       int max_depth = kDefaultMaxDepth);

struct SimilarityScores {
  double content = 0.0;
  double category = 0.0;
  double combined = 0.0;

  friend bool operator==(const SimilarityScores&, const SimilarityScores&) = default;
};

// alpha * content + (1 - alpha) * category. Throws ConfigError for alpha
// outside [0,1].
double CombineScores(double content, double category, double alpha);
void ValidateAlpha(double alpha);

struct RankingOptions {
  double alpha = 0.5;
  int max_depth = kDefaultMaxDepth;
  PruningOptions pruning;
  FrequencyMode frequency = FrequencyMode::kEdits;
};

struct ScoredCandidate {
  CandidateMeaning candidate;
  SimilarityScores scores;
};

struct RankedResult {
  std::vector<ScoredCandidate> ranked;  // best first

  const ScoredCandidate& top() const { return ranked.front(); }
};

// Per-candidate content and category similarity, in candidate order. The
// combined field is left at 0; see RankAtAlpha.
std::vector<ScoredCandidate> ScoreCandidates(const UserInterestModel& model,
                                             const AmbiguousEntity& entity,
                                             const KnowledgeGraph& graph,
                                             const RankingOptions& options = {});

// Fills combined scores for alpha and sorts: combined descending, then prior
// descending, then topic id.
RankedResult RankAtAlpha(std::vector<ScoredCandidate> scored, double alpha);

// Throws InputError for an entity without candidates.
RankedResult RankCandidates(const UserInterestModel& model,
                            const AmbiguousEntity& entity,
                            const KnowledgeGraph& graph,
                            const RankingOptions& options = {});

// Scores for a single candidate topic.
SimilarityScores CombinedScore(const UserInterestModel& model,
                               const AmbiguousEntity& entity,
                               std::string_view candidate_topic,
                               const KnowledgeGraph& graph,
                               const RankingOptions& options = {});

}  // namespace reslve

#endif  // RESLVE_SIMILARITY_H_
