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

#include "covplan/scenario.hpp"

#include <cmath>

namespace covplan {

namespace {

Grid make_grid(const ScenarioConfig& config) {
  if (config.rows < 1) throw ScenarioError("rows", "must be a positive integer");
  if (config.cols < 1) throw ScenarioError("cols", "must be a positive integer");
  return Grid(config.rows, config.cols);
}

void require_inside(const Grid& grid, Node node, const std::string& field) {
  if (!grid.contains(node)) {
    throw ScenarioError(field, "coordinate " + to_string(node) + " outside the " +
                                   std::to_string(grid.rows()) + "x" +
                                   std::to_string(grid.cols()) + " grid");
  }
}

}  // namespace

GridScenario::GridScenario(ScenarioConfig config)
    : config_(std::move(config)), grid_(make_grid(config_)) {
  if (config_.endpoints.empty()) {
    throw ScenarioError("endpoints", "at least one robot is required");
  }

  obstacle_mask_.assign(grid_.node_count(), false);
  for (std::size_t i = 0; i < config_.obstacles.size(); ++i) {
    const std::string field = "obstacles[" + std::to_string(i) + "]";
    require_inside(grid_, config_.obstacles[i], field);
    obstacle_mask_[grid_.node_id(config_.obstacles[i])] = true;
  }

  target_degree_.assign(grid_.node_count(), 0);
  std::vector<int> endpoint_roles(grid_.node_count(), 0);
  for (std::size_t r = 0; r < config_.endpoints.size(); ++r) {
    const auto& ep = config_.endpoints[r];
    const std::string field = "endpoints[" + std::to_string(r) + "]";
    require_inside(grid_, ep.source, field + ".source");
    require_inside(grid_, ep.dest, field + ".dest");
    if (obstacle_mask_[grid_.node_id(ep.source)]) {
      throw ScenarioError(field + ".source", "endpoint coincides with an obstacle");
    }
    if (obstacle_mask_[grid_.node_id(ep.dest)]) {
      throw ScenarioError(field + ".dest", "endpoint coincides with an obstacle");
    }
    if (ep.source != ep.dest) {
      ++endpoint_roles[grid_.node_id(ep.source)];
      ++endpoint_roles[grid_.node_id(ep.dest)];
    }
  }
  for (std::size_t id = 0; id < grid_.node_count(); ++id) {
    target_degree_[id] = endpoint_roles[id] > 0 ? endpoint_roles[id] : 2;
  }

  const auto& wc = config_.weights;
  if (!(wc.obstacle_edge > 0.0) || !std::isfinite(wc.obstacle_edge)) {
    throw ScenarioError("weights.obstacle_edge", "must be a finite positive number");
  }
  if (!(wc.normal_edge < 0.0) || !std::isfinite(wc.normal_edge)) {
    throw ScenarioError("weights.normal_edge", "must be a finite negative number");
  }
  const std::size_t edges = grid_.edge_count();
  weights_.assign(edges, wc.normal_edge);
  for (EdgeIndex e = 0; e < edges; ++e) {
    auto [a, b] = grid_.edge_nodes(e);
    if (obstacle_mask_[grid_.node_id(a)] || obstacle_mask_[grid_.node_id(b)]) {
      weights_[e] = wc.obstacle_edge;
    }
  }
  for (const auto& [edge, w] : wc.overrides) {
    const std::string field = "weights.overrides[edge " + std::to_string(edge) + "]";
    if (edge >= edges) throw ScenarioError(field, "edge index out of range");
    if (!std::isfinite(w)) throw ScenarioError(field, "weight must be finite");
    auto [a, b] = grid_.edge_nodes(edge);
    const bool obstacle_edge =
        obstacle_mask_[grid_.node_id(a)] || obstacle_mask_[grid_.node_id(b)];
    if (obstacle_edge && !(w > 0.0)) {
      throw ScenarioError(field, "edges touching an obstacle need a positive weight");
    }
    if (!obstacle_edge && !(w < 0.0)) {
      throw ScenarioError(field, "edges away from obstacles need a negative weight");
    }
    weights_[edge] = w;
  }

  if (config_.lengths) {
    if (config_.lengths->size() != edges) {
      throw ScenarioError("lengths", "expected " + std::to_string(edges) +
                                         " entries, got " +
                                         std::to_string(config_.lengths->size()));
    }
    for (std::size_t e = 0; e < edges; ++e) {
      const double d = (*config_.lengths)[e];
      if (!(d >= 0.0) || !std::isfinite(d)) {
        throw ScenarioError("lengths[" + std::to_string(e) + "]",
                            "must be a finite nonnegative number");
      }
    }
    lengths_ = *config_.lengths;
  } else {
    lengths_.assign(edges, 1.0);
  }

  for (std::size_t k = 0; k < 3; ++k) {
    const double a = config_.alphas[k];
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw ScenarioError("alphas[" + std::to_string(k) + "]",
                          "must be a finite nonnegative number");
    }
  }
}

const RobotEndpoints& GridScenario::endpoints(std::size_t robot) const {
  return config_.endpoints.at(robot);
}

bool GridScenario::is_obstacle(Node node) const {
  return obstacle_mask_[grid_.node_id(node)];
}

PathState::PathState(std::size_t robots, std::size_t edges)
    : edges_(edges), paths_(robots, EdgeSet(edges)) {}

PathState::PathState(std::vector<EdgeSet> paths) : paths_(std::move(paths)) {
  if (!paths_.empty()) edges_ = paths_.front().size();
  for (const auto& p : paths_) {
    if (p.size() != edges_) {
      throw std::invalid_argument("PathState: robots disagree on edge count");
    }
  }
}

std::uint64_t PathState::to_basis_index() const {
  if (robots() * edges_ > 64) {
    throw std::length_error("PathState::to_basis_index: more than 64 decision bits");
  }
  std::uint64_t index = 0;
  for (std::size_t r = 0; r < robots(); ++r) {
    index |= paths_[r].to_u64() << (r * edges_);
  }
  return index;
}

PathState PathState::from_basis_index(std::uint64_t index, std::size_t robots,
                                      std::size_t edges) {
  if (robots * edges > 64) {
    throw std::length_error("PathState::from_basis_index: more than 64 decision bits");
  }
  std::vector<EdgeSet> paths;
  paths.reserve(robots);
  for (std::size_t r = 0; r < robots; ++r) {
    paths.push_back(EdgeSet::from_u64(index >> (r * edges), edges));
  }
  PathState out(std::move(paths));
  out.edges_ = edges;
  return out;
}

std::string PathState::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < paths_.size(); ++r) {
    if (r > 0) out += '|';
    out += paths_[r].to_string();
  }
  return out;
}

std::strong_ordering operator<=>(const PathState& lhs, const PathState& rhs) noexcept {
  const std::size_t common = std::min(lhs.paths_.size(), rhs.paths_.size());
  for (std::size_t r = 0; r < common; ++r) {
    if (auto c = lhs.paths_[r] <=> rhs.paths_[r]; c != 0) return c;
  }
  return lhs.paths_.size() <=> rhs.paths_.size();
}

bool is_feasible(const GridScenario& scenario, const PathState& state) {
  if (!state.matches(scenario)) return false;
  for (std::size_t r = 0; r < state.robots(); ++r) {
    const auto& ep = scenario.endpoints(r);
    if (!is_valid_path(scenario.grid(), state.robot(r), ep.source, ep.dest)) {
      return false;
    }
  }
  return true;
}

}  // namespace covplan
