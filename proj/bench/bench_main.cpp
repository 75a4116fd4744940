// Copyright 2026 The cagegen Authors
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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>
#include <random>

#include "cagegen/constructions.hpp"
#include "cagegen/covers.hpp"
#include "cagegen/fixtures.hpp"
#include "cagegen/generator.hpp"
#include "cagegen/groups.hpp"

namespace {

using namespace cagegen;

// Random simple cubic graph by stub pairing, retried until no loop or double edge.
Graph random_cubic(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
      ok = stubs[i] != stubs[i + 1] && g.add_edge(stubs[i], stubs[i + 1]);
    }
    if (ok) return g;
  }
}

void BM_GirthSerial(benchmark::State& state) {
  const Graph g = random_cubic(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(girth_serial(g));
}
BENCHMARK(BM_GirthSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_GirthParallel(benchmark::State& state) {
  const Graph g = random_cubic(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(girth(g));
  state.counters["threads"] = omp_get_max_threads();
}
BENCHMARK(BM_GirthParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  GeneratorOptions o;
  o.workers = static_cast<int>(state.range(0));
  o.enforce_lower_bound = false;
  for (auto _ : state) benchmark::DoNotOptimize(generate_all(18, 3, 5, o).graphs.size());
}
BENCHMARK(BM_Generate)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GenerateNoDedup(benchmark::State& state) {
  GeneratorOptions o;
  o.workers = static_cast<int>(state.range(0));
  o.enforce_lower_bound = false;
  o.dedup = false;
  for (auto _ : state) benchmark::DoNotOptimize(generate_all(18, 3, 5, o).graphs.size());
}
BENCHMARK(BM_GenerateNoDedup)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LiftSearch(benchmark::State& state) {
  const auto groups = groups_from_source("builtin:40");
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_k13loop_lifts(9, groups, 0, static_cast<int>(state.range(0))).order);
  }
}
BENCHMARK(BM_LiftSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ReduceAllChoices(benchmark::State& state) {
  const Graph g = fixtures::cage_378();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_all_choices(g, 3, 7, static_cast<int>(state.range(0))).size());
  }
}
BENCHMARK(BM_ReduceAllChoices)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
