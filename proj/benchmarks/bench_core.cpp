// Copyright 2026 The covplan Authors
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

#include <random>
#include <string>

#include "covplan/cost.hpp"
#include "covplan/qaoa.hpp"
#include "covplan/sbf.hpp"
#include "covplan/scenario_io.hpp"
#include "covplan/solvers.hpp"

namespace {

using namespace covplan;

GridScenario load(const std::string& name) {
  return GridScenario(load_scenario(std::string(COVPLAN_SCENARIO_DIR) + "/" + name));
}

GridScenario square(int n) {
  ScenarioConfig c;
  c.rows = c.cols = n;
  c.endpoints = {{{0, 0}, {n - 1, n - 1}}};
  return GridScenario(c);
}

void BM_EnumeratePaths(benchmark::State& state) {
  const auto sc = square(static_cast<int>(state.range(0)));
  std::size_t n = 0;
  for (auto _ : state) {
    const auto paths = enumerate_simple_paths(sc.grid(), {0, 0}, sc.endpoints(0).dest, 10'000'000);
    n = paths.size();
    benchmark::DoNotOptimize(paths.data());
  }
  state.counters["paths"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumeratePaths)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CostTrackerFlip(benchmark::State& state) {
  const auto sc = load("grid5x5_two.json");
  CostTracker tracker(sc, initial_state(sc));
  std::mt19937_64 rng(1);
  const std::size_t edges = sc.edge_count();
  for (auto _ : state) {
    const auto robot = rng() % sc.robots();
    const auto edge = static_cast<EdgeIndex>(rng() % edges);
    benchmark::DoNotOptimize(tracker.flip_delta(robot, edge));
  }
}
BENCHMARK(BM_CostTrackerFlip);

void BM_FullCost(benchmark::State& state) {
  const auto sc = load("grid5x5_two.json");
  const auto st = initial_state(sc);
  for (auto _ : state) benchmark::DoNotOptimize(cost_total(st, sc));
}
BENCHMARK(BM_FullCost);

void BM_Anneal(benchmark::State& state) {
  const auto sc = load("grid4x4_two.json");
  const auto schedule = default_schedule(sc);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sa_solve(sc, schedule, seed++).best_cost);
}
BENCHMARK(BM_Anneal)->Unit(benchmark::kMillisecond);

void BM_MixerLayer(benchmark::State& state) {
  const auto sc = load("grid3x3_single.json");
  const QaoaSimulator sim(sc);
  auto psi = sim.initial_state();
  for (auto _ : state) {
    sim.apply_phase_separator(psi, 0.1);
    sim.apply_full_mixer(psi, 0.7);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.dimension()));
}
BENCHMARK(BM_MixerLayer)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
