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

#ifndef RESLVE_INTEREST_MODEL_H_
#define RESLVE_INTEREST_MODEL_H_

// A user's interest model: the aggregated topic-interest graphs of every
// article the user edited non-trivially, plus the text of those articles.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reslve/candidates.h"
#include "reslve/knowledge_graph.h"

namespace reslve {

enum class EditKind { kNormal, kRevert, kMinor };

std::string_view ToString(EditKind kind);
EditKind ParseEditKind(std::string_view name);

struct EditRecord {
  std::string user;
  TopicId topic;
  std::string timestamp;  // ISO-8601, e.g. 2012-11-03T17:22:05Z
  EditKind kind = EditKind::kNormal;
  long long delta_size = 0;
  // Extension signals. Parsed and preserved but not used by the model.
  std::optional<double> article_popularity;
  std::optional<double> quality;

  friend bool operator==(const EditRecord&, const EditRecord&) = default;
};

// Edit-history file, one tab-separated record per line:
//   user  topic  timestamp  kind  delta  [popularity  [quality]]
std::vector<EditRecord> LoadEditHistory(const std::filesystem::path& path);
std::vector<EditRecord> ParseEditHistory(std::string_view text);
std::string FormatEditHistory(std::span<const EditRecord> edits);

// Classifies a raw edit from its comment and minor flag: revert markers in
// the comment win over the minor flag.
EditKind ClassifyEdit(std::string_view comment, bool minor_flag);

struct FilteredEdits {
  std::vector<EditRecord> kept;
  std::vector<std::string> warnings;  // unresolvable topics
};

// Drops reverts and minor edits and edits to articles whose body has fewer
// than min_nonstop_words non-stopword tokens. Unknown topics are skipped with
// a warning.
FilteredEdits FilterEdits(std::span<const EditRecord> edits,
                          const KnowledgeGraph& graph,
                          std::size_t min_nonstop_words = 100);

// Index terms of an article: its title, cleaned body, and the titles of its
// direct categories.
std::vector<std::string> ArticleDocument(const KnowledgeGraph& graph,
                                         const TopicNode& topic);

struct UserInterestModel {
  std::string user;
  int max_depth = kDefaultMaxDepth;
  AggregatedInterestGraph aggregated;
  std::map<TopicId, int> edited_topics;                   // edit counts >= 1
  std::map<TopicId, std::vector<std::string>> corpus;     // article documents

  friend bool operator==(const UserInterestModel&, const UserInterestModel&) = default;
};

// Builds the model from the user's already-filtered edits; records for other
// users are ignored. Throws InactiveUserError when nothing remains.
UserInterestModel BuildUserModel(std::string_view user,
                                 std::span<const EditRecord> edits,
                                 const KnowledgeGraph& graph,
                                 int max_depth = kDefaultMaxDepth);

// Stable JSON rendering (sorted keys, path lengths as integers).
std::string SerializeUserModel(const UserInterestModel& model);
UserInterestModel ParseUserModel(std::string_view text);

// Fraction of entities with a candidate whose direct category lies within d
// category edges of some edited topic. Absent for an empty entity list.
std::optional<double> CoverageAtDistance(const UserInterestModel& model,
                                         std::span<const AmbiguousEntity> entities,
                                         const KnowledgeGraph& graph, int d);

struct CoveragePoint {
  int distance = 0;
  std::size_t covered = 0;
  std::size_t total = 0;
};

// Coverage counts for d = 1..max_distance.
std::vector<CoveragePoint> CoverageProfile(const UserInterestModel& model,
                                           std::span<const AmbiguousEntity> entities,
                                           const KnowledgeGraph& graph,
                                           int max_distance);

}  // namespace reslve

#endif  // RESLVE_INTEREST_MODEL_H_
