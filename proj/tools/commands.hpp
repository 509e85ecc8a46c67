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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace covplan::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kInfeasible = 2,
  kBudgetExceeded = 3,
  kCheckFailed = 4,
};

struct SolveOptions {
  std::filesystem::path scenario;
  std::string solver = "sa";
  std::optional<std::uint64_t> seed;  // falls back to the scenario's seed
  std::uint64_t layers = 1;
  std::filesystem::path out = "out";
  std::size_t restarts = 1;
  bool log_raw = false;
  std::uint64_t shots = 1000;
  std::size_t iterations = 100;
  std::size_t qaoa_restarts = 8;
  std::size_t population = 32;
  std::size_t generations = 50;
  std::size_t max_qubits = 24;
};

struct ResourcesOptions {
  std::filesystem::path scenario;
  std::uint64_t layers = 1;
  std::optional<std::filesystem::path> out;  // JSON report path
};

struct ExploreOptions {
  std::filesystem::path scenario;
  std::size_t robot = 0;
  std::size_t max_states = 2'000'000;
};

/// Each command reports to `out`, diagnostics to `err`, and returns an ExitCode.
int run_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int run_resources(const ResourcesOptions& options, std::ostream& out, std::ostream& err);
int run_explore(const ExploreOptions& options, std::ostream& out, std::ostream& err);

}  // namespace covplan::cli
