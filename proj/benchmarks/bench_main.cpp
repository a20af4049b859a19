// Copyright 2026 The pstruct Authors.
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

#include <memory>

#include "pstruct/decomp.hpp"
#include "pstruct/engine.hpp"
#include "pstruct/generate.hpp"
#include "pstruct/planar.hpp"

namespace pstruct {
namespace {

void BM_HeuristicTdGrid(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = grid(k, k).graph;
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_td(g));
  state.SetComplexityN(k * k);
}
BENCHMARK(BM_HeuristicTdGrid)->Arg(8)->Arg(16)->Arg(32)->Complexity();

void BM_MainEngineGrid(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = grid(k, k).graph;
  const auto td = std::make_shared<const TreeDecomposition>(heuristic_td(g));
  const TDView view = make_view(td, g.num_vertices());
  for (auto _ : state) benchmark::DoNotOptimize(partition_rooted_main(g, view, {{0}}, 3, 2));
}
BENCHMARK(BM_MainEngineGrid)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SqrtEngineGrid(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Graph g = grid(k, k).graph;
  const double m = sqrt_width_bound(3, 2, g.num_vertices()).m;
  for (auto _ : state) benchmark::DoNotOptimize(partition_rooted_sqrt(g, {{0}}, 3, 2, m));
}
BENCHMARK(BM_SqrtEngineGrid)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_EppsteinApollonian(benchmark::State& state) {
  const Generated a = apollonian(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(eppstein_ltw3(a.graph, *a.rot));
}
BENCHMARK(BM_EppsteinApollonian)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_PlanarProduct(benchmark::State& state) {
  const Generated a = apollonian(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(planar_product_structure(a.graph, *a.rot));
}
BENCHMARK(BM_PlanarProduct)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pstruct

BENCHMARK_MAIN();
