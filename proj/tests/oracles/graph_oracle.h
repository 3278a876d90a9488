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


// Reference implementations used only by tests. Each one recomputes a
// result from first principles with a different algorithm than the library
// so agreement is meaningful.

#ifndef RESLVE_TESTS_ORACLES_GRAPH_ORACLE_H_
#define RESLVE_TESTS_ORACLES_GRAPH_ORACLE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "reslve/knowledge_graph.h"

namespace reslve::oracle {

// Enumerates every simple path from the root topic through category parent
// edges, up to max_depth edges, and keeps the shortest length per category.
// Exponential in depth; fine for the sizes used in tests.
inline std::map<CategoryId, int> AllSimplePathLengths(const KnowledgeGraph& graph,
                                                      const TopicId& root,
                                                      int max_depth) {
  std::map<CategoryId, int> best;
  std::set<CategoryId> on_path;
  auto walk = [&](auto&& self, const CategoryId& at, int length) -> void {
    auto [it, inserted] = best.try_emplace(at, length);
    if (!inserted && length < it->second) it->second = length;
    if (length == max_depth) return;
    on_path.insert(at);
    for (const CategoryId& parent : graph.FindCategory(at)->parents) {
      if (!on_path.contains(parent)) self(self, parent, length + 1);
    }
    on_path.erase(at);
  };
  for (const CategoryId& c : graph.FindTopic(root)->categories) walk(walk, c, 1);
  return best;
}

// Weight of every (root, category) pair as 1/len, max over all simple paths.
inline std::map<CategoryId, double> OracleWeights(const KnowledgeGraph& graph,
                                                  const TopicId& root,
                                                  int max_depth) {
  std::map<CategoryId, double> weights;
  for (const auto& [category, length] : AllSimplePathLengths(graph, root, max_depth)) {
    weights[category] = 1.0 / static_cast<double>(length);
  }
  return weights;
}

}  // namespace reslve::oracle

#endif  // RESLVE_TESTS_ORACLES_GRAPH_ORACLE_H_
