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

#include "reslve/interest_model.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "reslve/errors.h"
#include "reslve/text_pipeline.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

bool LooksLikeIsoTimestamp(std::string_view ts) {
  // YYYY-MM-DD, optionally followed by a time part.
  if (ts.size() < 10) return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (!std::isdigit(static_cast<unsigned char>(ts[i]))) return false;
  }
  return ts[4] == '-' && ts[7] == '-' && (ts.size() == 10 || ts[10] == 'T');
}

std::set<CategoryId> ReachableCategories(const UserInterestModel& model,
                                         const KnowledgeGraph& graph, int d) {
  std::set<CategoryId> reachable;
  for (const auto& [topic, count] : model.edited_topics) {
    if (!graph.HasTopic(topic)) continue;
    for (const auto& [category, weight] : BuildTopicInterestGraph(graph, topic, d).edges) {
      reachable.insert(category);
    }
  }
  return reachable;
}

bool Covered(const AmbiguousEntity& entity, const std::set<CategoryId>& reachable,
             const KnowledgeGraph& graph) {
  for (const CandidateMeaning& candidate : entity.candidates) {
    const TopicNode* topic = graph.FindTopic(candidate.topic);
    if (topic == nullptr) continue;
    for (const CategoryId& c : topic->categories) {
      if (reachable.contains(c)) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view ToString(EditKind kind) {
  switch (kind) {
    case EditKind::kNormal: return "normal";
    case EditKind::kRevert: return "revert";
    case EditKind::kMinor: return "minor";
  }
  return "normal";
}

EditKind ParseEditKind(std::string_view name) {
  std::string lower = ToLower(name);
  if (lower == "normal") return EditKind::kNormal;
  if (lower == "revert") return EditKind::kRevert;
  if (lower == "minor" || lower == "typo") return EditKind::kMinor;
  throw InputError("unknown edit kind: " + std::string(name));
}

EditKind ClassifyEdit(std::string_view comment, bool minor_flag) {
  std::string lower = ToLower(comment);
  std::string padded = " " + lower + " ";
  for (std::string_view marker :
       {"revert", "undid revision", "vandalism", " rv ", " rvv ", " rv:", "rollback"}) {
    if (padded.find(marker) != std::string::npos) return EditKind::kRevert;
  }
  if (minor_flag) return EditKind::kMinor;
  for (std::string_view marker : {"typo", "spelling", "sp."}) {
    if (padded.find(marker) != std::string::npos) return EditKind::kMinor;
  }
  return EditKind::kNormal;
}

std::vector<EditRecord> ParseEditHistory(std::string_view text) {
  std::vector<EditRecord> edits;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::string context = "edit history line " + std::to_string(number);
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() < 5 || f.size() > 7) {
      throw InputError(context + ": expected 5 to 7 tab-separated fields");
    }
    EditRecord record;
    record.user = f[0];
    record.topic = f[1];
    record.timestamp = f[2];
    if (record.user.empty() || record.topic.empty()) {
      throw InputError(context + ": empty user or topic");
    }
    if (!LooksLikeIsoTimestamp(record.timestamp)) {
      throw InputError(context + ": bad timestamp '" + record.timestamp + "'");
    }
    record.kind = ParseEditKind(f[3]);
    record.delta_size = ParseInt(f[4], context);
    if (f.size() > 5 && !f[5].empty()) record.article_popularity = ParseDouble(f[5], context);
    if (f.size() > 6 && !f[6].empty()) record.quality = ParseDouble(f[6], context);
    edits.push_back(std::move(record));
  }
  return edits;
}

std::vector<EditRecord> LoadEditHistory(const std::filesystem::path& path) {
  return ParseEditHistory(ReadFile(path));
}

std::string FormatEditHistory(std::span<const EditRecord> edits) {
  std::ostringstream out;
  for (const EditRecord& e : edits) {
    out << e.user << '\t' << e.topic << '\t' << e.timestamp << '\t'
        << ToString(e.kind) << '\t' << e.delta_size;
    if (e.article_popularity || e.quality) {
      out << '\t';
      if (e.article_popularity) out << FormatDouble(*e.article_popularity);
    }
    if (e.quality) out << '\t' << FormatDouble(*e.quality);
    out << '\n';
  }
  return out.str();
}

FilteredEdits FilterEdits(std::span<const EditRecord> edits,
                          const KnowledgeGraph& graph,
                          std::size_t min_nonstop_words) {
  FilteredEdits result;
  std::map<TopicId, bool> substantive;  // per-article cache
  for (const EditRecord& edit : edits) {
    const TopicNode* topic = graph.FindTopic(edit.topic);
    if (topic == nullptr) {
      result.warnings.push_back("skipping edit by " + edit.user +
                                " to unknown topic " + edit.topic);
      continue;
    }
    if (edit.kind != EditKind::kNormal) continue;
    auto [it, inserted] = substantive.try_emplace(edit.topic, false);
    if (inserted) {
      it->second = CountNonStopwordTokens(topic->description) >= min_nonstop_words;
    }
    if (it->second) result.kept.push_back(edit);
  }
  return result;
}

std::vector<std::string> ArticleDocument(const KnowledgeGraph& graph,
                                         const TopicNode& topic) {
  std::vector<std::string> terms = CleanArticleText(TitleFromId(topic.id));
  std::vector<std::string> body = CleanArticleText(topic.description);
  terms.insert(terms.end(), body.begin(), body.end());
  for (const CategoryId& c : topic.categories) {
    if (!graph.HasCategory(c)) continue;
    std::vector<std::string> title = CleanArticleText(TitleFromId(c));
    terms.insert(terms.end(), title.begin(), title.end());
  }
  return terms;
}

UserInterestModel BuildUserModel(std::string_view user,
                                 std::span<const EditRecord> edits,
                                 const KnowledgeGraph& graph, int max_depth) {
  UserInterestModel model;
  model.user = std::string(user);
  model.max_depth = max_depth;
  for (const EditRecord& e : edits) {
    if (e.user != user) continue;
    if (!graph.HasTopic(e.topic)) {
      throw InputError("edit references unknown topic " + e.topic);
    }
    ++model.edited_topics[e.topic];
  }
  if (model.edited_topics.empty()) {
    throw InactiveUserError("inactive user " + std::string(user) +
                            ": no edits survive filtering");
  }
  std::vector<TopicInterestGraph> graphs;
  graphs.reserve(model.edited_topics.size());
  for (const auto& [topic, count] : model.edited_topics) {
    graphs.push_back(BuildTopicInterestGraph(graph, topic, max_depth));
    model.corpus.emplace(topic, ArticleDocument(graph, *graph.FindTopic(topic)));
  }
  model.aggregated = Aggregate(graphs);
  return model;
}

std::string SerializeUserModel(const UserInterestModel& model) {
  nlohmann::json j;
  j["user"] = model.user;
  j["max_depth"] = model.max_depth;
  j["edited_topics"] = model.edited_topics;
  nlohmann::json graph = nlohmann::json::object();
  for (const TopicId& topic : model.aggregated.topics()) graph[topic] = nlohmann::json::object();
  for (const auto& [key, weight] : model.aggregated.edges()) {
    graph[key.first][key.second] = weight.path_length();
  }
  j["interest_graph"] = std::move(graph);
  j["corpus"] = model.corpus;
  return j.dump(1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

UserInterestModel ParseUserModel(std::string_view text) {
  UserInterestModel model;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    model.user = j.at("user").get<std::string>();
    model.max_depth = j.at("max_depth").get<int>();
    model.edited_topics = j.at("edited_topics").get<std::map<TopicId, int>>();
    for (const auto& [topic, edges] : j.at("interest_graph").items()) {
      model.aggregated.AddTopic(topic);
      for (const auto& [category, length] : edges.items()) {
        model.aggregated.AddEdge(topic, category, PathWeight(length.get<int>()));
      }
    }
    model.corpus =
        j.at("corpus").get<std::map<TopicId, std::vector<std::string>>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed user model: ") + e.what());
  } catch (const InvariantError& e) {
    throw InputError(std::string("malformed user model: ") + e.what());
  }
  for (const auto& [topic, count] : model.edited_topics) {
    if (count < 1) throw InputError("malformed user model: edit count < 1 for " + topic);
    if (!model.aggregated.topics().contains(topic)) {
      throw InputError("malformed user model: no interest graph row for " + topic);
    }
  }
  if (model.edited_topics.empty()) throw InputError("malformed user model: no edited topics");
  return model;
}

std::optional<double> CoverageAtDistance(const UserInterestModel& model,
                                         std::span<const AmbiguousEntity> entities,
                                         const KnowledgeGraph& graph, int d) {
  if (d < 1) throw InputError("coverage distance must be at least 1");
  if (entities.empty()) return std::nullopt;
  std::set<CategoryId> reachable = ReachableCategories(model, graph, d);
  std::size_t covered = 0;
  for (const AmbiguousEntity& e : entities) {
    if (Covered(e, reachable, graph)) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(entities.size());
}

std::vector<CoveragePoint> CoverageProfile(const UserInterestModel& model,
                                           std::span<const AmbiguousEntity> entities,
                                           const KnowledgeGraph& graph,
                                           int max_distance) {
  std::vector<CoveragePoint> profile;
  for (int d = 1; d <= max_distance; ++d) {
    std::set<CategoryId> reachable = ReachableCategories(model, graph, d);
    CoveragePoint point{d, 0, entities.size()};
    for (const AmbiguousEntity& e : entities) {
      if (Covered(e, reachable, graph)) ++point.covered;
    }
    profile.push_back(point);
  }
  return profile;
}

}  // namespace reslve
