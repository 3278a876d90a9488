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

#ifndef RESLVE_GRAPH_IO_H_
#define RESLVE_GRAPH_IO_H_

// Graph snapshot files.
//
//   graph file, one record per line, whitespace separated:
//     T <topic-id> <category-id>*
//     C <category-id> <parent-category-id>*
//   '#' starts a comment line. Ids contain no whitespace.
//
//   description sidecar, JSON Lines:
//     {"id":"<topic-id>","text":"<article body>"}

#include <filesystem>
#include <optional>
#include <string>

#include "reslve/knowledge_graph.h"

namespace reslve {

// Throws InputError with the offending line number on malformed records or
// dangling references.
KnowledgeGraph LoadGraphSnapshot(
    const std::filesystem::path& graph_path,
    const std::optional<std::filesystem::path>& descriptions_path = {});

KnowledgeGraph ParseGraphSnapshot(std::string_view graph_text,
                                  std::string_view descriptions_jsonl = {});

// Canonical serializations: records sorted by id, categories before topics.
std::string FormatGraphSnapshot(const KnowledgeGraph& graph);
std::string FormatDescriptions(const KnowledgeGraph& graph);

}  // namespace reslve

#endif  // RESLVE_GRAPH_IO_H_
