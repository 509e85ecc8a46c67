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

// Acceptance checks 1-8. One PASS/FAIL line each; exit status is the number
// of failures.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "covplan/cost.hpp"
#include "covplan/qaoa.hpp"
#include "covplan/resources.hpp"
#include "covplan/sbf.hpp"
#include "covplan/solvers.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace covplan;
namespace fs = std::filesystem;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

GridScenario single(int rows, int cols, Node s, Node d) {
  return testing::make_scenario(rows, cols, {{s, d}});
}

Check explorability() {
  Check c;
  const std::vector<std::tuple<int, Node, Node>> cases{
      {2, {0, 0}, {1, 1}}, {2, {0, 0}, {0, 1}}, {2, {1, 0}, {1, 1}},
      {3, {0, 0}, {2, 2}}, {3, {0, 1}, {2, 1}}, {3, {1, 0}, {1, 2}},
      {3, {1, 1}, {0, 0}}, {3, {0, 2}, {2, 0}}};
  std::size_t total = 0;
  for (const auto& [n, s, d] : cases) {
    const auto sc = single(n, n, s, d);
    std::set<std::uint64_t> reach;
    for (const auto& e : reachable_states(sc, 0)) reach.insert(e.to_u64());
    const oracle::RawGrid g{n, n};
    const auto expected = oracle::all_paths(g, g.node(s.row, s.col), g.node(d.row, d.col));
    total += expected.size();
    c.require(reach == expected, std::to_string(n) + "x" + std::to_string(n) + " " +
                                     std::to_string(reach.size()) + " vs " +
                                     std::to_string(expected.size()));
  }
  c.detail << " " << cases.size() << " endpoint pairs, " << total << " paths";
  return c;
}

Check feasibility_closure() {
  Check c;
  std::mt19937_64 rng(2026);
  std::size_t moves = 0;
  for (const auto& sc : {single(2, 2, {0, 0}, {1, 1}), single(3, 3, {0, 0}, {2, 2}),
                         single(3, 3, {0, 1}, {2, 1})}) {
    const auto subs = enumerate_subgrids(sc);
    const auto& ep = sc.endpoints(0);
    for (int seq = 0; seq < 1000; ++seq) {
      EdgeSet bits = initial_path(sc, 0);
      for (int step = 0; step < 30; ++step) {
        std::vector<const SubGrid*> allowed;
        for (const auto& s : subs) {
          if (sbf_allowed(bits, s)) allowed.push_back(&s);
        }
        if (allowed.empty()) break;
        bits = apply_sbf(bits, *allowed[rng() % allowed.size()]);
        ++moves;
        if (!is_valid_path(sc.grid(), bits, ep.source, ep.dest)) {
          c.require(false, "invalid state " + bits.to_string());
          return c;
        }
      }
    }
  }
  std::uniform_real_distribution<double> ang(-3.2, 3.2);
  double worst = 0;
  for (const auto& sc : {single(2, 2, {0, 0}, {1, 1}), single(3, 3, {0, 0}, {2, 2})}) {
    const QaoaSimulator sim(sc);
    auto state = sim.initial_state();
    for (int layer = 0; layer < 20; ++layer) {
      sim.apply_phase_separator(state, ang(rng));
      sim.apply_full_mixer(state, ang(rng));
      worst = std::max(worst, sim.infeasible_mass(state));
    }
  }
  c.require(worst <= 1e-9, "leakage " + std::to_string(worst));
  c.detail << " " << moves << " random moves, max leakage " << worst;
  return c;
}

oracle::Matrix materialize(std::size_t qubits, const std::function<void(QuantumState&)>& op) {
  const std::size_t dim = std::size_t{1} << qubits;
  oracle::Matrix u(dim, std::vector<Amplitude>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    QuantumState s(qubits);
    s.amplitudes()[0] = 0;
    s.amplitudes()[j] = 1;
    op(s);
    for (std::size_t i = 0; i < dim; ++i) u[i][j] = s[i];
  }
  return u;
}

Check unitarity() {
  Check c;
  const auto sc = single(2, 2, {0, 0}, {1, 1});
  const QaoaSimulator sim(sc);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ang(-2 * std::numbers::pi, 2 * std::numbers::pi);
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    const double beta = ang(rng);
    worst = std::max(worst, oracle::max_deviation_from_identity(materialize(4, [&](auto& s) {
                       sim.apply_sbf_mixer(s, sim.subgrids()[0], 0, beta);
                     })));
    worst = std::max(worst, oracle::max_deviation_from_identity(
                                materialize(4, [&](auto& s) { sim.apply_full_mixer(s, beta); })));
  }
  c.require(worst <= 1e-9, "deviation " + std::to_string(worst));
  c.detail << " 20 angles, max |U'U - I| " << worst;
  return c;
}

Check qaoa_optimality() {
  Check c;
  const auto sc = testing::load("grid3x3_single.json");
  const double optimum = dfs_solve(sc).best_cost.total;
  const QaoaSimulator sim(sc);
  OptimizerConfig cfg;
  cfg.step_size = 0.1;
  const auto res = optimize(sim, 1, {initial_state(sc)}, cfg, sc.config().seed);
  const auto run = sim.run(res.params);
  const std::uint64_t best = argmax_probability(run.state);
  const double cost = sim.diagonal()[best];
  c.require(cost == optimum, "argmax cost " + std::to_string(cost));
  c.detail << " argmax cost " << cost << ", DFS optimum " << optimum << ", p(argmax) "
           << std::norm(run.state[best]);
  return c;
}

Check solver_agreement() {
  Check c;
  for (const char* name : {"grid4x4_two.json", "grid5x5_two.json"}) {
    const auto sc = testing::load(name);
    const double exact = dfs_solve(sc).best_cost.total;
    const auto sa = sa_solve_restarts(sc, default_schedule(sc), sc.config().seed, 5);
    c.require(sa.best_cost.total == exact, std::string(name) + " sa " +
                                               std::to_string(sa.best_cost.total));
    c.detail << " " << name << " dfs " << exact << " sa " << sa.best_cost.total << ";";
  }
  return c;
}

Check resource_formulas() {
  Check c;
  const auto q = qubit_count(3, 3, 1);
  c.require(q.decision == 12 && q.ancilla == 8 && q.total() == 20, "qubits");
  c.require(toffoli_decomposition(5) == ToffoliSplit{8, 2}, "5-qubit toffoli");
  c.require(toffoli_decomposition(7) == ToffoliSplit{16, 4}, "7-qubit toffoli");
  c.require(phase_separator_counts(12) == PhaseCounts{12, 156, 78}, "phase counts");
  c.detail << " qubits " << q.decision << "+" << q.ancilla << "=" << q.total();
  return c;
}

Check gradient_sanity() {
  Check c;
  const auto sc = testing::load("grid3x3_single.json");
  const QaoaSimulator sim(sc);
  const std::vector<PathState> pop{initial_state(sc)};
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> beta(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> gamma(0, 0.5);
  double worst = 0;
  for (int k = 0; k < 10; ++k) {
    const QaoaParams p{{beta(rng)}, {gamma(rng)}};
    const auto a = gradient(sim, p, pop, 1e-4);
    const auto b = gradient(sim, p, pop, 1e-5);
    for (std::size_t i = 0; i < a.size(); ++i) {
      worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(a[i])));
    }
  }
  c.require(worst <= 1e-4, "relative error " + std::to_string(worst));
  c.detail << " 10 points, max relative difference " << worst;
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Check determinism() {
  Check c;
  const fs::path root = fs::temp_directory_path() / "covplan_acceptance";
  fs::remove_all(root);
  const std::vector<std::pair<std::string, std::string>> runs{
      {"sa", "grid4x4_two.json"}, {"ga", "grid4x4_two.json"}, {"qaoa", "grid3x3_single.json"}};
  for (const auto& [solver, file] : runs) {
    std::string csv[2];
    for (int k = 0; k < 2; ++k) {
      cli::SolveOptions o;
      o.scenario = testing::scenario_path(file);
      o.solver = solver;
      o.seed = 1234;
      o.out = root / (solver + std::to_string(k));
      std::ostringstream out, err;
      const int code = cli::run_solve(o, out, err);
      c.require(code == 0, solver + " exit " + std::to_string(code) + " " + err.str());
      csv[k] = slurp(o.out / "convergence.csv");
    }
    c.require(!csv[0].empty() && csv[0] == csv[1], solver + " csv differs");
    c.detail << " " << solver;
  }
  fs::remove_all(root);
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"explorability", explorability},
      {"feasibility closure", feasibility_closure},
      {"mixer unitarity", unitarity},
      {"qaoa p=1 optimality", qaoa_optimality},
      {"sa/dfs agreement", solver_agreement},
      {"resource formulas", resource_formulas},
      {"gradient sanity", gradient_sanity},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ":"
              << c.detail.str() << " (" << secs << " s)" << std::endl;
    failures += c.ok ? 0 : 1;
  }
  return failures;
}
