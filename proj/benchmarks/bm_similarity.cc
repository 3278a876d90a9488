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
#include <string>

#include <benchmark/benchmark.h>

#include "reslve/similarity.h"

namespace {

using namespace reslve;

TermVector RandomVector(std::mt19937_64& rng, int vocabulary, int size) {
  std::uniform_int_distribution<int> term(0, vocabulary - 1);
  std::uniform_real_distribution<double> weight(0.0, 4.0);
  TermVector v;
  for (int i = 0; i < size; ++i) v.Set("w" + std::to_string(term(rng)), weight(rng));
  return v;
}

void BM_Cosine(benchmark::State& state) {
  std::mt19937_64 rng(3);
  int size = static_cast<int>(state.range(0));
  TermVector a = RandomVector(rng, size * 4, size);
  TermVector b = RandomVector(rng, size * 4, size);
  for (auto _ : state) benchmark::DoNotOptimize(CosineSimilarity(a, b));
}
BENCHMARK(BM_Cosine)->Range(16, 16384);

}  // namespace

BENCHMARK_MAIN();
