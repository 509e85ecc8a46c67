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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace covplan::cli;
  CLI::App app{"covplan: multi-robot coverage path planning with SBF moves"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Run a solver and write path, convergence and record files");
  s->add_option("--scenario", solve.scenario, "Scenario JSON")->required()->check(CLI::ExistingFile);
  s->add_option("--solver", solve.solver, "dfs | sa | ga | qaoa")
      ->check(CLI::IsMember({"dfs", "sa", "ga", "qaoa"}));
  s->add_option("--seed", solve.seed, "RNG seed (default: scenario seed)");
  s->add_option("--layers", solve.layers, "QAOA layers p")->check(CLI::PositiveNumber);
  s->add_option("--out", solve.out, "Output directory");
  s->add_option("--restarts", solve.restarts, "SA restarts, run concurrently")
      ->check(CLI::PositiveNumber);
  s->add_flag("--log-raw", solve.log_raw, "Also write per-sample raw cost");
  s->add_option("--shots", solve.shots, "QAOA measurement shots");
  s->add_option("--iterations", solve.iterations, "QAOA optimizer iterations");
  s->add_option("--qaoa-restarts", solve.qaoa_restarts, "QAOA optimizer starts")
      ->check(CLI::PositiveNumber);
  s->add_option("--population", solve.population, "GA population size")
      ->check(CLI::PositiveNumber);
  s->add_option("--generations", solve.generations, "GA generations");
  s->add_option("--max-qubits", solve.max_qubits, "QAOA statevector qubit limit");

  ResourcesOptions res;
  auto* r = app.add_subcommand("resources", "Print qubit and gate estimates");
  r->add_option("--scenario", res.scenario, "Scenario JSON")->required()->check(CLI::ExistingFile);
  r->add_option("--layers", res.layers, "QAOA layers p")->check(CLI::PositiveNumber);
  r->add_option("--out", res.out, "Write the JSON report here");

  ExploreOptions exp;
  auto* e = app.add_subcommand("explore", "Compare SBF reachability with path enumeration");
  e->add_option("--scenario", exp.scenario, "Scenario JSON")->required()->check(CLI::ExistingFile);
  e->add_option("--robot", exp.robot, "Robot index");
  e->add_option("--max-states", exp.max_states, "Search guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kParseError;
  }

  if (*s) return run_solve(solve, std::cout, std::cerr);
  if (*r) return run_resources(res, std::cout, std::cerr);
  return run_explore(exp, std::cout, std::cerr);
}
