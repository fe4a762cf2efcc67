// Copyright 2026 The vgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <vector>

#include "vgame/dynamics.hpp"
#include "vgame/equilibria.hpp"
#include "vgame/reductions.hpp"

namespace vgame {
namespace {

StrategyProfile spread(std::size_t n, std::size_t k) {
  StrategyProfile out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(static_cast<Vertex>(i * n / k));
  return out;
}

void BM_KernelPayoffs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Game game(random_connected_instance(n, 4, 1));
  const PayoffKernel kernel(game, GameMode::shared);
  const StrategyProfile f = spread(n, 4);
  std::vector<std::int64_t> out(4);
  for (auto _ : state) {
    kernel.payoffs(f, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_KernelPayoffs)->Arg(16)->Arg(64)->Arg(256);

void BM_IsNash(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Game game(cycle_instance(n, 3));
  const StrategyProfile f = spread(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_nash(game, f, GameMode::shared));
}
BENCHMARK(BM_IsNash)->Arg(12)->Arg(48)->Arg(192);

void BM_EnumerateEquilibria(benchmark::State& state) {
  Game game(random_connected_instance(static_cast<std::size_t>(state.range(0)), 3, 7));
  EnumerationOptions options;
  options.threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_equilibria(game, GameMode::shared, options));
  }
}
BENCHMARK(BM_EnumerateEquilibria)
    ->Args({12, 1})
    ->Args({20, 1})
    ->Args({20, 4})
    ->Unit(benchmark::kMillisecond);

void BM_MoveGraph(benchmark::State& state) {
  Game game(cycle_instance(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_move_graph(game, GameMode::shared));
  }
}
BENCHMARK(BM_MoveGraph)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_GadgetSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gadget_search(1, static_cast<std::uint64_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_GadgetSearch)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace vgame

BENCHMARK_MAIN();
