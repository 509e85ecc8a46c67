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

/// Scenario files (JSON).
///
///   {
///     "rows": 3, "cols": 3, "robots": 1,
///     "endpoints": [{"source": [0, 0], "dest": [2, 2]}],
///     "obstacles": [[0, 2], [1, 1]],
///     "weights": {"obstacle_edge": 10, "normal_edge": -1,
///                 "overrides": [{"from": [0, 0], "to": [0, 1], "weight": -2}]},
///     "lengths": [1, 1, ...],          // optional, one per edge
///     "alphas": [1, 1, 1],
///     "seed": 7,
///     "description": "free text"       // optional
///   }
///
/// Unknown keys are rejected. Errors carry the 1-based line of the offending
/// key: "file:LINE: field: message".
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "covplan/scenario.hpp"

namespace covplan {

class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(std::string source, std::size_t line, std::string field,
                     const std::string& message);

  [[nodiscard]] const std::string& source() const noexcept { return source_; }
  /// 1-based; 0 when unknown.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string field_;
};

/// Parses and validates; `source` names the document in error messages.
[[nodiscard]] ScenarioConfig parse_scenario(std::string_view text,
                                            const std::string& source = "<input>");
[[nodiscard]] ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Pretty JSON with a fixed key order; parse_scenario(to_json(c)) == c.
[[nodiscard]] std::string scenario_to_json(const ScenarioConfig& config);

/// FNV-1a 64 of the canonical (compact, key-sorted) JSON form, as 16 hex digits.
[[nodiscard]] std::string scenario_digest(const ScenarioConfig& config);

}  // namespace covplan
