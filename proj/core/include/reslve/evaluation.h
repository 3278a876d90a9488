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

#ifndef RESLVE_EVALUATION_H_
#define RESLVE_EVALUATION_H_

// Evaluation against gold labels: precision at rank 1, the random-candidate,
// prior-frequency and random-user baselines, inter-annotator agreement, and
// corpus ambiguity statistics.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reslve/candidates.h"
#include "reslve/interest_model.h"
#include "reslve/knowledge_graph.h"
#include "reslve/similarity.h"
#include "reslve/text_pipeline.h"

namespace reslve {

// ---------------------------------------------------------------------------
// Deterministic randomness

// SplitMix64 step; used to derive independent per-item seeds.
std::uint64_t MixSeed(std::uint64_t seed, std::string_view salt);

// Uniform integer in [0, bound) from a 64-bit generator, without modulo bias.
class SeededRandom {
 public:
  explicit SeededRandom(std::uint64_t seed);
  std::uint64_t Next();
  std::uint64_t Below(std::uint64_t bound);

 private:
  std::array<std::uint64_t, 4> state_;
};

// ---------------------------------------------------------------------------
// Gold labels

inline constexpr std::string_view kNoSense = "none";

struct GoldLabel {
  std::string entity_id;
  std::string utterance_id;
  Platform platform = Platform::kGeneric;
  UtteranceKind kind = UtteranceKind::kTweet;
  std::string user;  // social username of the author
  AmbiguousEntity entity;
  std::vector<std::string> annotator_labels;  // topic id or "none"
  std::string gold_topic;                     // "none" when no consensus
  bool excluded = false;
  std::string exclusion_reason;
};

// Gold dataset file, one tab-separated record per line:
//   entity_id utterance_id platform kind user surface candidates labels gold
// candidates: space-separated <topic>=<prior>[,<confidence>]
// labels:     space-separated per-annotator topic ids or "none"
//
// Records without a unanimous, non-"none" annotator choice are kept but
// flagged excluded. Throws InputError when a gold topic is not a candidate.
std::vector<GoldLabel> LoadGoldDataset(const std::filesystem::path& path);
std::vector<GoldLabel> ParseGoldDataset(std::string_view text);

// ---------------------------------------------------------------------------
// Metrics and baselines

struct EntityRanking {
  std::string entity_id;
  std::vector<TopicId> order;  // best first
};

// Fraction of rankings whose first topic equals the gold topic. Throws
// InputError listing entities without a gold label. Empty input gives 0.
double PrecisionAtOne(std::span<const EntityRanking> rankings,
                      const std::map<std::string, TopicId>& gold);

// Uniform random permutation of the candidates, reproducible from seed.
std::vector<CandidateMeaning> RandomCandidateRank(const AmbiguousEntity& entity,
                                                  std::uint64_t seed);

// Same as PriorFrequencyRank.
std::vector<CandidateMeaning> PriorFrequencyBaseline(const AmbiguousEntity& entity);

// Ranking by the provider's own confidence (prior when absent); ties by
// topic id.
std::vector<CandidateMeaning> ProviderRank(const AmbiguousEntity& entity);

// Picks a user from the pool other than the author. Throws InputError when
// the pool holds fewer than two users or no user besides the author.
std::string SelectRandomUser(std::span<const std::string> pool,
                             std::string_view author, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Agreement

struct AgreementStats {
  std::size_t items = 0;
  std::size_t annotators = 0;
  double observed = 0.0;  // mean per-item agreement
  double expected = 0.0;  // chance agreement
  double kappa = 0.0;     // Fleiss kappa
};

// labels[item][annotator]. Throws InputError for fewer than two annotators,
// an empty matrix, or a ragged matrix.
AgreementStats ComputeAgreement(const std::vector<std::vector<std::string>>& labels);

// ---------------------------------------------------------------------------
// Corpus ambiguity statistics

struct AnnotatedText {
  Utterance utterance;                    // preprocessed
  std::vector<AmbiguousEntity> entities;  // detected, before filtering
};

struct AmbiguityGroup {
  std::size_t texts = 0;
  std::size_t texts_with_ambiguous = 0;
  std::size_t entities = 0;            // valid detected entities
  std::size_t ambiguous_entities = 0;  // of those, two or more candidates
  std::map<std::size_t, std::size_t> length_histogram;  // bin start -> texts
};

struct AmbiguityReport {
  std::map<std::pair<Platform, UtteranceKind>, AmbiguityGroup> groups;
  std::array<std::size_t, 10> top_confidence_histogram{};  // bins of 0.1
  CandidateCountStats candidate_counts;
  std::size_t non_english_texts = 0;
};

inline constexpr std::size_t kLengthBinWidth = 10;

AmbiguityReport ComputeAmbiguityStats(std::span<const AnnotatedText> corpus);
std::string FormatAmbiguityReport(const AmbiguityReport& report);

// ---------------------------------------------------------------------------
// Full evaluation

struct Tally {
  std::size_t hits = 0;
  std::size_t total = 0;
  double Precision() const {
    return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
  }
};

inline constexpr std::array<std::string_view, 5> kMethods = {
    "RESLVE", "RC", "PF", "RU", "PROVIDER"};

struct EntityEvaluation {
  std::string entity_id;
  Platform platform = Platform::kGeneric;
  TopicId gold;
  std::string random_user;
  std::map<std::string, std::vector<TopicId>> rankings;  // method -> order
  std::vector<ScoredCandidate> reslve_scores;            // ranked
};

struct AlphaSweepPoint {
  double alpha = 0.0;
  std::map<Platform, Tally> by_platform;
  Tally overall;
  bool consistent = true;  // reranking cached scores matches full recompute
};

struct EvaluationOptions {
  RankingOptions ranking;
  std::uint64_t rc_seed = 1;
  std::uint64_t ru_seed = 2;
  bool alpha_sweep = true;
};

struct EvalReport {
  std::map<std::string, std::map<Platform, Tally>> grid;  // method -> platform
  std::map<std::string, Tally> overall;
  std::vector<EntityEvaluation> entities;
  std::vector<AlphaSweepPoint> sweep;
  std::optional<AgreementStats> agreement;
  std::vector<std::string> skipped;  // entity ids with reasons
  std::size_t excluded = 0;
};

// models: author username -> that author's interest model. Entities whose
// author has no model are skipped and listed.
EvalReport EvaluateDataset(std::span<const GoldLabel> gold,
                           const std::map<std::string, UserInterestModel>& models,
                           const KnowledgeGraph& graph,
                           const EvaluationOptions& options);

// Method-by-platform P@1 table with a final "all" column.
std::string FormatPrecisionGrid(const EvalReport& report);
std::string FormatAlphaSweep(const EvalReport& report);
// Full report as JSON, stable key order.
std::string FormatEvalReportJson(const EvalReport& report);

}  // namespace reslve

#endif  // RESLVE_EVALUATION_H_
