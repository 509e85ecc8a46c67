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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "covplan/cost.hpp"
#include "covplan/errors.hpp"
#include "covplan/scenario.hpp"

namespace covplan {

struct HistorySample {
  std::size_t iteration = 0;
  double cost = 0.0;

  friend bool operator==(const HistorySample&, const HistorySample&) = default;
};

struct SolverResult {
  std::string solver;
  PathState best_state;
  CostBreakdown best_cost;
  /// Best-so-far total per sample.
  std::vector<HistorySample> history;
  /// Cost of the state held at each sample (equals `history` for DFS).
  std::vector<HistorySample> raw_history;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
};

struct DfsOptions {
  std::size_t max_paths_per_robot = 5'000'000;
  std::uint64_t max_combinations = 4'000'000'000ULL;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Every simple path from source to dest by backtracking, sorted ascending
/// (EdgeSet order). Throws BudgetExceeded past `max_paths`.
[[nodiscard]] std::vector<EdgeSet> enumerate_simple_paths(const Grid& grid, Node source,
                                                          Node dest,
                                                          std::size_t max_paths);

/// Exhaustive optimum over the Cartesian product of every robot's simple
/// paths. Ties go to the lexicographically smallest joint bit matrix.
[[nodiscard]] SolverResult dfs_solve(const GridScenario& scenario,
                                     const DfsOptions& options = {});

struct AnnealSchedule {
  double t_initial = 10.0;
  double t_final = 0.01;
  double decay = 0.95;
  std::size_t steps_per_temperature = 0;

  /// Throws std::invalid_argument on a malformed schedule.
  void validate() const;
};

/// t = 10 -> 0.01, decay 0.95, 50 * (sub-grid count) * robots steps per level.
[[nodiscard]] AnnealSchedule default_schedule(const GridScenario& scenario);

/// Metropolis rule: accept when delta <= 0 or uniform01 < exp(-delta / T).
[[nodiscard]] bool metropolis_accept(double delta, double temperature,
                                     double uniform01) noexcept;

[[nodiscard]] SolverResult sa_solve(const GridScenario& scenario,
                                    const AnnealSchedule& schedule, std::uint64_t seed);

/// Independent runs with seeds seed, seed+1, ...; executed concurrently and
/// reduced in seed order (lowest total, then lowest seed).
[[nodiscard]] SolverResult sa_solve_restarts(const GridScenario& scenario,
                                             const AnnealSchedule& schedule,
                                             std::uint64_t seed, std::size_t restarts);

/// Mutation-only GA: each generation adds every allowed single-move offspring
/// of every individual, then keeps the `population_size` cheapest (ties by
/// joint bit order).
[[nodiscard]] SolverResult ga_solve(const GridScenario& scenario,
                                    std::size_t population_size,
                                    std::size_t generations, std::uint64_t seed);

}  // namespace covplan
