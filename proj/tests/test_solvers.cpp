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

#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "covplan/cost.hpp"
#include "covplan/sbf.hpp"
#include "covplan/solvers.hpp"
#include "test_util.hpp"

namespace covplan {
namespace {

using testing::make_scenario;

// Brute-force optimum over oracle-enumerated path tuples.
double oracle_optimum(const GridScenario& sc) {
  const auto raw = testing::to_raw(sc);
  std::vector<std::vector<std::uint64_t>> per_robot;
  for (const auto& [s, t] : raw.ends) {
    const auto paths = oracle::all_paths(raw.grid, s, t);
    per_robot.emplace_back(paths.begin(), paths.end());
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(per_robot.size(), 0);
  while (true) {
    std::vector<std::uint64_t> masks;
    for (std::size_t r = 0; r < idx.size(); ++r) masks.push_back(per_robot[r][idx[r]]);
    best = std::min(best, oracle::raw_cost(raw, masks));
    std::size_t r = idx.size();
    while (r > 0 && ++idx[r - 1] == per_robot[r - 1].size()) idx[--r] = 0;
    if (r == 0) break;
  }
  return best;
}

TEST(Paths, EnumerationMatchesOracle) {
  const oracle::RawGrid raw{3, 4};
  const Grid g(3, 4);
  const auto paths = enumerate_simple_paths(g, {0, 1}, {2, 2}, 100000);
  std::set<std::uint64_t> got;
  for (const auto& p : paths) got.insert(p.to_u64());
  EXPECT_EQ(got.size(), paths.size());
  EXPECT_EQ(got, oracle::all_paths(raw, raw.node(0, 1), raw.node(2, 2)));
  EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
  EXPECT_THROW((void)enumerate_simple_paths(g, {0, 0}, {2, 3}, 5), BudgetExceeded);
}

// Property: path enumeration and SBF reachability have equal cardinality.
TEST(PathsProperty, CountEqualsReachable) {
  for (auto [n, m] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 4}}) {
    const Grid g(n, m);
    const Node s{0, 0};
    for (const Node t : {Node{n - 1, m - 1}, Node{0, m - 1}, Node{n - 1, 1}}) {
      EXPECT_EQ(enumerate_simple_paths(g, s, t, 1'000'000).size(),
                reachable_states(g, s, t).size());
    }
  }
}

TEST(Dfs, TwoByTwo) {
  const auto sc = make_scenario(2, 2, {{{0, 0}, {1, 1}}});
  const auto r = dfs_solve(sc);
  EXPECT_DOUBLE_EQ(r.best_cost.c1, -2.0);
  EXPECT_DOUBLE_EQ(r.best_cost.c2, 0.0);
  EXPECT_EQ(r.evaluations, 2U);
  // Both L-paths tie; the lexicographically smaller bit row wins.
  EXPECT_EQ(r.best_state.robot(0).to_string(), "0110");
}

TEST(Dfs, MatchesBruteForce) {
  const std::vector<GridScenario> cases = {
      make_scenario(3, 3, {{{0, 0}, {2, 2}}}, {{0, 2}, {1, 1}}),
      make_scenario(3, 3, {{{0, 0}, {2, 2}}, {{2, 0}, {0, 2}}}, {{1, 1}}),
      make_scenario(2, 4, {{{0, 0}, {1, 3}}, {{1, 0}, {0, 3}}, {{0, 1}, {1, 2}}}),
      testing::load("grid3x3_single.json"),
  };
  for (const auto& sc : cases) {
    const auto r = dfs_solve(sc);
    EXPECT_DOUBLE_EQ(r.best_cost.total, oracle_optimum(sc));
    EXPECT_TRUE(is_feasible(sc, r.best_state));
    EXPECT_DOUBLE_EQ(r.best_cost.total, cost_total(r.best_state, sc).total);
    if (sc.robots() == 1) {
      EXPECT_DOUBLE_EQ(r.best_cost.c2, 0.0);
    }
    for (std::size_t i = 1; i < r.history.size(); ++i) {
      EXPECT_LT(r.history[i].cost, r.history[i - 1].cost);
      EXPECT_GT(r.history[i].iteration, r.history[i - 1].iteration);
    }
  }
}

TEST(Dfs, ThreadCountDoesNotChangeResult) {
  const auto sc = make_scenario(4, 4, {{{0, 0}, {3, 3}}, {{3, 0}, {0, 3}}}, {{1, 2}, {2, 1}});
  DfsOptions one;
  one.threads = 1;
  DfsOptions many;
  many.threads = 7;
  const auto a = dfs_solve(sc, one);
  const auto b = dfs_solve(sc, many);
  EXPECT_EQ(a.best_state, b.best_state);
  EXPECT_EQ(a.history, b.history);
  EXPECT_EQ(a.evaluations, b.evaluations);
}

TEST(Dfs, TieBreakIsLexicographicMinimum) {
  // All weights equal and no obstacles: many optimal tuples tie.
  const auto sc = make_scenario(3, 3, {{{0, 0}, {2, 2}}, {{2, 0}, {0, 2}}});
  const auto r = dfs_solve(sc);
  const auto p0 = enumerate_simple_paths(sc.grid(), {0, 0}, {2, 2}, 1000);
  const auto p1 = enumerate_simple_paths(sc.grid(), {2, 0}, {0, 2}, 1000);
  for (const auto& a : p0) {
    for (const auto& b : p1) {
      const PathState st({a, b});
      if (cost_total(st, sc).total == r.best_cost.total) {
        EXPECT_LE(r.best_state, st);
      }
    }
  }
}

TEST(Dfs, CombinationBudget) {
  const auto sc = make_scenario(4, 4, {{{0, 0}, {3, 3}}, {{3, 0}, {0, 3}}});
  DfsOptions tiny;
  tiny.max_combinations = 100;
  EXPECT_THROW((void)dfs_solve(sc, tiny), BudgetExceeded);
}

TEST(Anneal, Metropolis) {
  EXPECT_TRUE(metropolis_accept(-1.0, 1e-12, 0.999999));
  EXPECT_TRUE(metropolis_accept(0.0, 1.0, 0.999999));
  EXPECT_FALSE(metropolis_accept(5.0, 1.0, 0.5));
  EXPECT_TRUE(metropolis_accept(5.0, 1.0, 0.001));
}

TEST(Anneal, DefaultSchedule) {
  const auto sc = make_scenario(4, 4, {{{0, 0}, {3, 3}}, {{3, 0}, {0, 3}}});
  const auto s = default_schedule(sc);
  EXPECT_DOUBLE_EQ(s.t_initial, 10.0);
  EXPECT_DOUBLE_EQ(s.t_final, 0.01);
  EXPECT_DOUBLE_EQ(s.decay, 0.95);
  EXPECT_EQ(s.steps_per_temperature, 50U * 9U * 2U);
  AnnealSchedule bad = s;
  bad.decay = 1.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = s;
  bad.t_final = 20.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Anneal, ReachesOptimumAndIsDeterministic) {
  const auto sc = testing::load("grid3x3_single.json");
  const auto best = dfs_solve(sc).best_cost.total;
  const auto a = sa_solve(sc, default_schedule(sc), 42);
  const auto b = sa_solve(sc, default_schedule(sc), 42);
  EXPECT_DOUBLE_EQ(a.best_cost.total, best);
  EXPECT_EQ(a.best_state, b.best_state);
  EXPECT_EQ(a.history, b.history);
  EXPECT_EQ(a.raw_history, b.raw_history);
  EXPECT_EQ(a.seed, 42U);
  EXPECT_TRUE(is_feasible(sc, a.best_state));
  EXPECT_DOUBLE_EQ(a.best_cost.total, cost_total(a.best_state, sc).total);
  for (std::size_t i = 1; i < a.history.size(); ++i) {
    EXPECT_LE(a.history[i].cost, a.history[i - 1].cost);
  }
}

TEST(Anneal, RestartsPickLowestTotal) {
  const auto sc = make_scenario(4, 4, {{{0, 0}, {3, 3}}, {{3, 0}, {0, 3}}}, {{1, 2}});
  AnnealSchedule quick = default_schedule(sc);
  quick.steps_per_temperature = 5;
  const auto multi = sa_solve_restarts(sc, quick, 9, 4);
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
  for (std::uint64_t k = 0; k < 4; ++k) {
    const auto r = sa_solve(sc, quick, 9 + k);
    if (r.best_cost.total < best) {
      best = r.best_cost.total;
      seed = 9 + k;
    }
  }
  EXPECT_DOUBLE_EQ(multi.best_cost.total, best);
  EXPECT_EQ(multi.seed, seed);
}

TEST(Genetic, GenerationsZero) {
  const auto sc = testing::load("grid3x3_single.json");
  const auto r = ga_solve(sc, 8, 0, 1);
  EXPECT_EQ(r.best_state, initial_state(sc));
  EXPECT_EQ(r.history.size(), 1U);
  EXPECT_THROW((void)ga_solve(sc, 0, 3, 1), std::invalid_argument);
}

TEST(Genetic, TwoByTwoConvergesInOneGeneration) {
  const auto sc = make_scenario(2, 2, {{{0, 0}, {1, 1}}});
  const auto r = ga_solve(sc, 4, 1, 0);
  EXPECT_DOUBLE_EQ(r.best_cost.total, dfs_solve(sc).best_cost.total);
}

TEST(Genetic, ElitismAndOptimum) {
  const auto sc = make_scenario(4, 4, {{{0, 0}, {3, 3}}, {{3, 0}, {0, 3}}}, {{1, 2}, {2, 1}});
  const auto r = ga_solve(sc, 16, 40, 3);
  for (std::size_t i = 1; i < r.history.size(); ++i) {
    EXPECT_LE(r.history[i].cost, r.history[i - 1].cost);
  }
  EXPECT_TRUE(is_feasible(sc, r.best_state));
  EXPECT_DOUBLE_EQ(r.best_cost.total, dfs_solve(sc).best_cost.total);
  const auto again = ga_solve(sc, 16, 40, 3);
  EXPECT_EQ(r.best_state, again.best_state);
  EXPECT_EQ(r.history, again.history);
}

}  // namespace
}  // namespace covplan
