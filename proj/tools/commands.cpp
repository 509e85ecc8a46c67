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

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <vector>

#include "covplan/cost.hpp"
#include "covplan/errors.hpp"
#include "covplan/qaoa.hpp"
#include "covplan/render.hpp"
#include "covplan/resources.hpp"
#include "covplan/sbf.hpp"
#include "covplan/scenario_io.hpp"
#include "covplan/solvers.hpp"
#include "json.hpp"

namespace covplan::cli {

namespace {

using nlohmann::ordered_json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << text;
}

std::string convergence_csv(const std::vector<HistorySample>& samples) {
  std::string csv = "iteration,cost\n";
  for (const auto& s : samples) csv += std::to_string(s.iteration) + "," + num(s.cost) + "\n";
  return csv;
}

ordered_json breakdown_json(const CostBreakdown& c) {
  return {{"c1", c.c1}, {"c2", c.c2}, {"c3", c.c3}, {"total", c.total}};
}

struct Outcome {
  SolverResult result;
  ordered_json extra = ordered_json::object();
  std::vector<std::pair<std::string, std::string>> files;  // name, contents
};

Outcome solve_qaoa(const GridScenario& scenario, const SolveOptions& o, std::uint64_t seed) {
  const QaoaSimulator sim(scenario, o.max_qubits);
  const std::vector<PathState> population{initial_state(scenario)};
  OptimizerConfig cfg;
  cfg.iterations = o.iterations;
  cfg.restarts = o.qaoa_restarts;
  const OptimizeResult opt = optimize(sim, o.layers, population, cfg, seed);
  const QaoaRun run = sim.run(opt.params, population);
  const std::uint64_t best = argmax_probability(run.state);

  Outcome out;
  SolverResult& r = out.result;
  r.solver = "qaoa";
  r.seed = seed;
  r.best_state = PathState::from_basis_index(best, scenario.robots(), scenario.edge_count());
  r.best_cost = cost_total(r.best_state, scenario);
  double running = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < opt.history.size(); ++i) {
    running = std::min(running, opt.history[i]);
    r.history.push_back({i + 1, running});
    r.raw_history.push_back({i + 1, opt.history[i]});
  }
  r.evaluations = cfg.restarts * cfg.iterations * (4 * o.layers + 1);

  const auto counts = sample(run.state, o.shots, seed);
  std::string hist = "basis_index,bits,count,probability\n";
  for (const auto& [x, n] : counts) {
    const PathState s = PathState::from_basis_index(x, scenario.robots(), scenario.edge_count());
    hist += std::to_string(x) + "," + s.to_string() + "," + std::to_string(n) + "," +
            num(std::norm(run.state[x])) + "\n";
  }
  out.files.emplace_back("samples.csv", hist);
  out.files.emplace_back("resources.json", to_json(full_report(scenario, o.layers)));
  out.extra = {{"betas", opt.params.betas},
               {"gammas", opt.params.gammas},
               {"expectation", run.expectation},
               {"argmax_probability", std::norm(run.state[best])},
               {"infeasible_mass", sim.infeasible_mass(run.state)},
               {"winning_restart", opt.restart}};
  return out;
}

Outcome wrap(SolverResult result) {
  Outcome out;
  out.result = std::move(result);
  return out;
}

Outcome dispatch(const GridScenario& scenario, const SolveOptions& o, std::uint64_t seed) {
  if (o.solver == "dfs") return wrap(dfs_solve(scenario));
  if (o.solver == "sa") {
    return wrap(sa_solve_restarts(scenario, default_schedule(scenario), seed, o.restarts));
  }
  if (o.solver == "ga") return wrap(ga_solve(scenario, o.population, o.generations, seed));
  if (o.solver == "qaoa") return solve_qaoa(scenario, o, seed);
  throw std::invalid_argument("unknown solver \"" + o.solver + "\"");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ScenarioParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const InfeasibleScenario& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace

int run_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ScenarioConfig config = load_scenario(o.scenario);
    const GridScenario scenario(config);
    const std::uint64_t seed = o.seed.value_or(config.seed);

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = dispatch(scenario, o, seed);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const SolverResult& r = outcome.result;

    std::filesystem::create_directories(o.out);
    outcome.files.emplace_back("path.txt", render_ascii(r.best_state, scenario));
    outcome.files.emplace_back("path.svg", render_svg(r.best_state, scenario));
    outcome.files.emplace_back("convergence.csv", convergence_csv(r.history));
    if (o.log_raw) outcome.files.emplace_back("convergence_raw.csv", convergence_csv(r.raw_history));

    ordered_json record;
    record["scenario"] = o.scenario.string();
    record["scenario_digest"] = scenario_digest(config);
    record["solver"] = o.solver;
    record["config"] = {{"seed", seed},
                        {"layers", o.layers},
                        {"restarts", o.restarts},
                        {"shots", o.shots},
                        {"iterations", o.iterations},
                        {"qaoa_restarts", o.qaoa_restarts},
                        {"population", o.population},
                        {"generations", o.generations},
                        {"log_raw", o.log_raw}};
    std::vector<std::string> rows;
    for (const auto& p : r.best_state.paths()) rows.push_back(p.to_string());
    record["result"] = {{"best_state", rows},
                        {"best_cost", breakdown_json(r.best_cost)},
                        {"evaluations", r.evaluations},
                        {"history_length", r.history.size()}};
    if (!outcome.extra.empty()) record["qaoa"] = outcome.extra;
    record["wall_seconds"] = seconds;
    std::vector<std::string> artifacts;
    for (const auto& [name, _] : outcome.files) artifacts.push_back((o.out / name).string());
    artifacts.push_back((o.out / "run_record.json").string());
    record["artifacts"] = artifacts;
    outcome.files.emplace_back("run_record.json", record.dump(2) + "\n");

    for (const auto& [name, text] : outcome.files) write_file(o.out / name, text);

    out << "solver " << o.solver << "  seed " << seed << "\n"
        << "best total " << num(r.best_cost.total) << "  (c1 " << num(r.best_cost.c1) << ", c2 "
        << num(r.best_cost.c2) << ", c3 " << num(r.best_cost.c3) << ")\n"
        << render_ascii(r.best_state, scenario);
    for (const auto& a : artifacts) out << "wrote " << a << "\n";
    return static_cast<int>(kOk);
  });
}

int run_resources(const ResourcesOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GridScenario scenario(load_scenario(o.scenario));
    const ResourceReport report = full_report(scenario, o.layers);
    out << to_table(report);
    if (o.out) {
      if (o.out->has_parent_path()) std::filesystem::create_directories(o.out->parent_path());
      write_file(*o.out, to_json(report));
      out << "wrote " << o.out->string() << "\n";
    } else {
      out << to_json(report);
    }
    return static_cast<int>(kOk);
  });
}

int run_explore(const ExploreOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GridScenario scenario(load_scenario(o.scenario));
    if (o.robot >= scenario.robots()) {
      throw std::invalid_argument("robot " + std::to_string(o.robot) + " out of range (" +
                                  std::to_string(scenario.robots()) + " robots)");
    }
    const auto& ep = scenario.endpoints(o.robot);
    const auto reachable = reachable_states(scenario, o.robot, o.max_states);
    const auto oracle = enumerate_simple_paths(scenario.grid(), ep.source, ep.dest, o.max_states);
    const bool pass = reachable == oracle;
    out << "robot " << o.robot << " " << to_string(ep.source) << " -> " << to_string(ep.dest)
        << "\n"
        << "reachable states:   " << reachable.size() << "\n"
        << "enumerated paths:   " << oracle.size() << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
    return static_cast<int>(pass ? kOk : kCheckFailed);
  });
}

}  // namespace covplan::cli
