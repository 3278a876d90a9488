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


#include <random>

#include <benchmark/benchmark.h>

#include "reslve/knowledge_graph.h"
#include "support/random_instances.h"

namespace {

using namespace reslve;

void BM_TopicInterestGraph(benchmark::State& state) {
  std::mt19937_64 rng(1);
  KnowledgeGraph g = testing::RandomGraph(rng, static_cast<int>(state.range(0)), 50);
  for (auto _ : state) {
    for (const auto& [id, t] : g.topics()) {
      benchmark::DoNotOptimize(BuildTopicInterestGraph(g, id, kDefaultMaxDepth));
    }
  }
  state.SetItemsProcessed(state.iterations() * 50);
}
BENCHMARK(BM_TopicInterestGraph)->Arg(100)->Arg(1000)->Arg(10000);

void BM_AggregateToMatrix(benchmark::State& state) {
  std::mt19937_64 rng(2);
  KnowledgeGraph g = testing::RandomGraph(rng, 2000, static_cast<int>(state.range(0)));
  std::vector<TopicInterestGraph> graphs;
  for (const auto& [id, t] : g.topics()) graphs.push_back(BuildTopicInterestGraph(g, id));
  for (auto _ : state) benchmark::DoNotOptimize(ToMatrix(Aggregate(graphs)));
}
BENCHMARK(BM_AggregateToMatrix)->Arg(10)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
