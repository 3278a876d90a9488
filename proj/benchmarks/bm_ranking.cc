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
#include <vector>

#include <benchmark/benchmark.h>

#include "reslve/similarity.h"
#include "support/random_instances.h"

namespace {

using namespace reslve;

// Scores and orders candidates for a batch of random users and entities.
void BM_RankCandidates(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::vector<testing::RankingInstance> instances;
  std::vector<UserInterestModel> models;
  for (int i = 0; i < 64; ++i) {
    instances.push_back(testing::RandomRankingInstance(rng));
    const auto& inst = instances.back();
    models.push_back(BuildUserModel(inst.user, inst.edits, inst.graph, inst.options.max_depth));
  }
  for (auto _ : state) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& inst = instances[i];
      benchmark::DoNotOptimize(RankCandidates(models[i], inst.entity, inst.graph, inst.options));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(instances.size()));
}
BENCHMARK(BM_RankCandidates);

}  // namespace

BENCHMARK_MAIN();
