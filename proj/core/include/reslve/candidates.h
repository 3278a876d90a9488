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

#ifndef RESLVE_CANDIDATES_H_
#define RESLVE_CANDIDATES_H_

// Ambiguous entity mentions and their candidate meanings, produced by a
// pluggable provider and screened by the validity filters.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reslve/knowledge_graph.h"
#include "reslve/text_pipeline.h"

namespace reslve {

enum class WordClass { kNoun, kNamedEntity, kOther };

std::string_view ToString(WordClass word_class);
WordClass ParseWordClass(std::string_view name);

struct CandidateMeaning {
  TopicId topic;
  double prior = 0.0;                     // commonness in [0,1]
  std::optional<double> confidence;       // provider score in [0,1]

  friend bool operator==(const CandidateMeaning&, const CandidateMeaning&) = default;
};

struct AmbiguousEntity {
  std::string surface;
  std::string utterance_id;
  WordClass word_class = WordClass::kNoun;
  std::vector<CandidateMeaning> candidates;
};

// A provider spots mentions in a token sequence and returns every candidate
// sense, not only confident ones. Implementations must be safe for
// concurrent calls.
struct Mention {
  std::size_t begin = 0;  // token span [begin, end)
  std::size_t end = 0;
  std::string surface;
  WordClass word_class = WordClass::kNoun;
  std::vector<CandidateMeaning> candidates;
};

class CandidateProvider {
 public:
  virtual ~CandidateProvider() = default;
  // Throws ServiceError when the backing service fails; an empty result
  // means no mentions were found.
  virtual std::vector<Mention> Spot(std::span<const std::string> tokens) const = 0;
};

// Reads mention -> candidates maps from a file:
//
//   <surface form>\t<word class>\t<topic>=<prior>[,<confidence>]\t...
//
// Surface forms are matched case-insensitively against token n-grams,
// longest match first, scanning left to right.
class FixtureCandidateProvider : public CandidateProvider {
 public:
  FixtureCandidateProvider() = default;

  static FixtureCandidateProvider Load(const std::filesystem::path& path);
  static FixtureCandidateProvider Parse(std::string_view text);

  void Add(std::string surface, WordClass word_class,
           std::vector<CandidateMeaning> candidates);

  std::vector<Mention> Spot(std::span<const std::string> tokens) const override;

  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    WordClass word_class;
    std::vector<CandidateMeaning> candidates;
  };
  std::map<std::string, Entry, std::less<>> entries_;
  std::size_t max_ngram_ = 1;
};

// Runs the provider over a preprocessed utterance. Mentions of the MENTION
// placeholder are never produced.
std::vector<AmbiguousEntity> DetectEntities(const Utterance& utterance,
                                            const CandidateProvider& provider);

// Drops non-English or too-short surface forms, words that are neither nouns
// nor named entities, and entities with fewer than two candidates.
std::vector<AmbiguousEntity> FilterEntities(std::vector<AmbiguousEntity> entities);

bool PassesEntityFilters(const AmbiguousEntity& entity);

// Candidates by descending prior; ties broken by topic id.
std::vector<CandidateMeaning> PriorFrequencyRank(const AmbiguousEntity& entity);

struct CandidateCountStats {
  std::size_t entities = 0;
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0.0;
  double median = 0.0;
};

CandidateCountStats ComputeCandidateCountStats(
    std::span<const AmbiguousEntity> entities);

}  // namespace reslve

#endif  // RESLVE_CANDIDATES_H_
