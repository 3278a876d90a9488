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

#include "reslve/graph_io.h"

#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "reslve/errors.h"
#include "reslve/tsv.h"

namespace reslve {
namespace {

struct PendingRecord {
  std::size_t line;
  std::string id;
  std::vector<std::string> targets;
};

std::string LineError(std::size_t line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

KnowledgeGraph ParseGraphSnapshot(std::string_view graph_text,
                                  std::string_view descriptions_jsonl) {
  std::vector<PendingRecord> topics;
  std::vector<PendingRecord> categories;
  std::map<std::string, std::size_t> topic_lines;
  std::map<std::string, std::size_t> category_lines;

  ForEachLine(graph_text, [&](std::size_t number, std::string_view line) {
    std::vector<std::string> fields = SplitWhitespace(line);
    if (fields.size() < 2) {
      throw InputError(LineError(number, "expected '<T|C> <id> ...'"));
    }
    PendingRecord record{number, fields[1],
                         {fields.begin() + 2, fields.end()}};
    if (fields[0] == "T") {
      if (!topic_lines.emplace(record.id, number).second) {
        throw InputError(LineError(number, "duplicate topic " + record.id));
      }
      topics.push_back(std::move(record));
    } else if (fields[0] == "C") {
      if (!category_lines.emplace(record.id, number).second) {
        throw InputError(LineError(number, "duplicate category " + record.id));
      }
      categories.push_back(std::move(record));
    } else {
      throw InputError(LineError(number, "unknown record type '" + fields[0] + "'"));
    }
  });

  auto check_targets = [&](const PendingRecord& record) {
    for (const std::string& target : record.targets) {
      if (!category_lines.contains(target)) {
        throw InputError(LineError(
            record.line, "dangling reference from " + record.id + " to " + target));
      }
    }
  };

  KnowledgeGraph::Builder builder;
  for (PendingRecord& c : categories) {
    check_targets(c);
    builder.AddCategory(c.id, std::move(c.targets));
  }
  for (PendingRecord& t : topics) {
    check_targets(t);
    builder.AddTopic(t.id, std::move(t.targets));
  }

  ForEachLine(descriptions_jsonl, [&](std::size_t number, std::string_view line) {
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw InputError("descriptions " + LineError(number, e.what()));
    }
    if (!record.is_object() || !record.contains("id") || !record["id"].is_string() ||
        !record.contains("text") || !record["text"].is_string()) {
      throw InputError("descriptions " + LineError(number, "expected {\"id\",\"text\"}"));
    }
    std::string id = record["id"].get<std::string>();
    if (!topic_lines.contains(id)) {
      throw InputError("descriptions " + LineError(number, "unknown topic " + id));
    }
    builder.SetDescription(id, record["text"].get<std::string>());
  });

  return std::move(builder).Build();
}

KnowledgeGraph LoadGraphSnapshot(
    const std::filesystem::path& graph_path,
    const std::optional<std::filesystem::path>& descriptions_path) {
  std::string graph_text = ReadFile(graph_path);
  std::string descriptions;
  if (descriptions_path) descriptions = ReadFile(*descriptions_path);
  try {
    return ParseGraphSnapshot(graph_text, descriptions);
  } catch (const InputError& e) {
    throw InputError(graph_path.filename().string() + ": " + e.what());
  }
}

std::string FormatGraphSnapshot(const KnowledgeGraph& graph) {
  std::ostringstream out;
  for (const auto& [id, category] : graph.categories()) {
    out << "C " << id;
    for (const CategoryId& parent : category.parents) out << ' ' << parent;
    out << '\n';
  }
  for (const auto& [id, topic] : graph.topics()) {
    out << "T " << id;
    for (const CategoryId& c : topic.categories) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

std::string FormatDescriptions(const KnowledgeGraph& graph) {
  std::string out;
  for (const auto& [id, topic] : graph.topics()) {
    if (topic.description.empty()) continue;
    nlohmann::ordered_json record;
    record["id"] = id;
    record["text"] = topic.description;
    out += record.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

}  // namespace reslve
