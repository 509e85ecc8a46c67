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
#include <span>
#include <vector>

#include "covplan/scenario.hpp"

namespace covplan {

struct CostBreakdown {
  double c1 = 0.0;  // sum_r sum_e w_e x_{r,e}
  double c2 = 0.0;  // sum_r (L_r - L_{r+1})^2 over consecutive robots
  double c3 = 0.0;  // sum_i (deg(i) - target(i))^2
  double total = 0.0;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

// Cost terms are defined on arbitrary bit matrices, not only valid paths.
// All throw std::invalid_argument when the state shape does not match.

[[nodiscard]] double cost_c1(const PathState& state, const GridScenario& scenario);
[[nodiscard]] double cost_c2(const PathState& state, const GridScenario& scenario);
[[nodiscard]] double cost_c3(const PathState& state, const GridScenario& scenario);
[[nodiscard]] CostBreakdown cost_total(const PathState& state,
                                       const GridScenario& scenario);

/// Weighted sum alpha0*c1 + alpha1*c2 + alpha2*c3.
[[nodiscard]] double weighted_total(const GridScenario& scenario, double c1,
                                    double c2, double c3) noexcept;

/// Cost of a packed basis index (bit r*E+e = x_{r,e}); requires r*E <= 64.
[[nodiscard]] double basis_cost(const GridScenario& scenario, std::uint64_t index);

/// Keeps node degrees, per-robot lengths and the three cost terms current
/// under single-bit flips, so a flip costs O(1) instead of a full pass.
class CostTracker {
 public:
  CostTracker(const GridScenario& scenario, PathState state);

  [[nodiscard]] const PathState& state() const noexcept { return state_; }
  [[nodiscard]] CostBreakdown breakdown() const noexcept;
  [[nodiscard]] double total() const noexcept { return breakdown().total; }

  /// Change in total cost if x_{robot,edge} were flipped.
  [[nodiscard]] double flip_delta(std::size_t robot, EdgeIndex edge) const;

  void flip(std::size_t robot, EdgeIndex edge);
  void flip_all(std::size_t robot, std::span<const EdgeIndex> edges);

 private:
  double node_term(std::size_t node, int degree) const noexcept;
  double pair_term(double a, double b) const noexcept { return (a - b) * (a - b); }
  double c2_neighbourhood(std::size_t robot, double length) const noexcept;

  const GridScenario* scenario_;
  PathState state_;
  std::vector<std::pair<std::size_t, std::size_t>> edge_nodes_;
  std::vector<int> degree_;
  std::vector<double> length_;
  double c1_ = 0.0;
  double c2_ = 0.0;
  double c3_ = 0.0;
};

}  // namespace covplan
