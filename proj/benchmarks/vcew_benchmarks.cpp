// Copyright 2026 The vcew Authors
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


#include <benchmark/benchmark.h>

#include "vcew/classifiers.hpp"
#include "vcew/constructors.hpp"
#include "vcew/families.hpp"
#include "vcew/graph.hpp"
#include "vcew/oracle.hpp"
#include "vcew/weighting.hpp"

namespace {

using namespace vcew;

// Single-threaded so timings do not depend on the host core count.
constexpr SearchOptions kSerial{false, 1};

void BM_MuExactCycle(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mu_exact(g, kDefaultMuCap, kSerial));
}
BENCHMARK(BM_MuExactCycle)->Arg(10)->Arg(14)->Arg(18);

void BM_MuExactClique(benchmark::State& state) {
  const Graph g = clique(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mu_exact(g, kDefaultMuCap, kSerial));
}
BENCHMARK(BM_MuExactClique)->Arg(4)->Arg(5)->Arg(6);

void BM_FindWeightingHypercube(benchmark::State& state) {
  const Graph g = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_weighting(g, 2, {}, kSerial));
}
BENCHMARK(BM_FindWeightingHypercube)->Arg(3)->Arg(4);

void BM_IsProper(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 3 * static_cast<int>(state.range(0)), 7);
  const EdgeWeighting w{2, std::vector<Weight>(static_cast<std::size_t>(g.edge_count()), 1)};
  for (auto _ : state) benchmark::DoNotOptimize(is_proper(g, w));
}
BENCHMARK(BM_IsProper)->Arg(100)->Arg(1000);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(7)->Arg(9);

void BM_BipartiteProductK2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_connected_bipartite(n, 2 * n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(bipartite_product_k2(g));
}
BENCHMARK(BM_BipartiteProductK2)->Arg(50)->Arg(200);

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(4)->Arg(6);

void BM_MuUpperBound(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(mu_upper_bound(g));
}
BENCHMARK(BM_MuUpperBound)->Arg(12)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
