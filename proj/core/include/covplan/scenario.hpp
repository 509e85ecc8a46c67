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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covplan/edge_set.hpp"
#include "covplan/grid.hpp"

namespace covplan {

/// Invalid scenario content. `field` names the offending entry
/// (e.g. "obstacles[2]") so loaders can point at the source location.
class ScenarioError : public std::invalid_argument {
 public:
  ScenarioError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct RobotEndpoints {
  Node source;
  Node dest;

  friend bool operator==(const RobotEndpoints&, const RobotEndpoints&) = default;
};

struct WeightConfig {
  double obstacle_edge = 10.0;
  double normal_edge = -1.0;
  std::map<EdgeIndex, double> overrides;

  friend bool operator==(const WeightConfig&, const WeightConfig&) = default;
};

/// Raw scenario description as written in a scenario file.
struct ScenarioConfig {
  int rows = 0;
  int cols = 0;
  std::vector<RobotEndpoints> endpoints;
  std::vector<Node> obstacles;
  WeightConfig weights;
  std::optional<std::vector<double>> lengths;
  std::array<double, 3> alphas{1.0, 1.0, 1.0};
  std::uint64_t seed = 0;
  std::string description;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Validated grid, robots, obstacles, per-edge weights w_e and lengths d_e,
/// and cost coefficients. Immutable after construction.
class GridScenario {
 public:
  /// Validates and resolves `config`; throws ScenarioError.
  explicit GridScenario(ScenarioConfig config);

  [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
  [[nodiscard]] std::size_t robots() const noexcept { return config_.endpoints.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return grid_.edge_count(); }
  [[nodiscard]] const RobotEndpoints& endpoints(std::size_t robot) const;
  [[nodiscard]] const std::vector<Node>& obstacles() const noexcept {
    return config_.obstacles;
  }
  [[nodiscard]] bool is_obstacle(Node node) const;

  [[nodiscard]] double weight(EdgeIndex edge) const { return weights_.at(edge); }
  [[nodiscard]] double length(EdgeIndex edge) const { return lengths_.at(edge); }
  [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }
  [[nodiscard]] const std::vector<double>& lengths() const noexcept { return lengths_; }
  [[nodiscard]] const std::array<double, 3>& alphas() const noexcept {
    return config_.alphas;
  }

  /// Degree the c3 term asks of a node: k when the node is an endpoint of k
  /// robot paths (robots with source == dest do not count), else 2.
  [[nodiscard]] int target_degree(std::size_t node_id) const {
    return target_degree_.at(node_id);
  }

  [[nodiscard]] const ScenarioConfig& config() const noexcept { return config_; }

 private:
  ScenarioConfig config_;
  Grid grid_;
  std::vector<bool> obstacle_mask_;
  std::vector<double> weights_;
  std::vector<double> lengths_;
  std::vector<int> target_degree_;
};

/// Joint assignment x_{r,e}: one EdgeSet per robot.
class PathState {
 public:
  PathState() = default;
  PathState(std::size_t robots, std::size_t edges);
  explicit PathState(std::vector<EdgeSet> paths);

  [[nodiscard]] std::size_t robots() const noexcept { return paths_.size(); }
  [[nodiscard]] std::size_t edges() const noexcept { return edges_; }

  [[nodiscard]] const EdgeSet& robot(std::size_t r) const { return paths_.at(r); }
  [[nodiscard]] EdgeSet& robot(std::size_t r) { return paths_.at(r); }
  [[nodiscard]] const std::vector<EdgeSet>& paths() const noexcept { return paths_; }

  [[nodiscard]] bool test(std::size_t r, EdgeIndex e) const { return paths_.at(r).test(e); }
  void set(std::size_t r, EdgeIndex e, bool value = true) { paths_.at(r).set(e, value); }
  void flip(std::size_t r, EdgeIndex e) { paths_.at(r).flip(e); }

  /// Computational-basis index: bit (r * edges + e) holds x_{r,e}.
  /// Requires robots * edges <= 64.
  [[nodiscard]] std::uint64_t to_basis_index() const;
  static PathState from_basis_index(std::uint64_t index, std::size_t robots,
                                    std::size_t edges);

  /// Robot rows joined with '|'.
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] bool matches(const GridScenario& scenario) const noexcept {
    return robots() == scenario.robots() && edges() == scenario.edge_count();
  }

  friend bool operator==(const PathState&, const PathState&) = default;
  /// Lexicographic over robot 0's bits first, then robot 1, ...
  friend std::strong_ordering operator<=>(const PathState& lhs,
                                          const PathState& rhs) noexcept;

 private:
  std::size_t edges_ = 0;
  std::vector<EdgeSet> paths_;
};

/// True iff every robot's bits form a valid path between its endpoints.
[[nodiscard]] bool is_feasible(const GridScenario& scenario, const PathState& state);

}  // namespace covplan
