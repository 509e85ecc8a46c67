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

#include "covplan/cost.hpp"

#include <stdexcept>

namespace covplan {

namespace {

void require_shape(const PathState& state, const GridScenario& scenario) {
  if (!state.matches(scenario)) {
    throw std::invalid_argument(
        "cost: state is " + std::to_string(state.robots()) + "x" +
        std::to_string(state.edges()) + ", scenario expects " +
        std::to_string(scenario.robots()) + "x" +
        std::to_string(scenario.edge_count()));
  }
}

double robot_length(const EdgeSet& bits, const GridScenario& scenario) {
  double length = 0.0;
  for (EdgeIndex e : bits.active()) length += scenario.length(e);
  return length;
}

}  // namespace

double weighted_total(const GridScenario& scenario, double c1, double c2,
                      double c3) noexcept {
  const auto& a = scenario.alphas();
  return a[0] * c1 + a[1] * c2 + a[2] * c3;
}

double cost_c1(const PathState& state, const GridScenario& scenario) {
  require_shape(state, scenario);
  double c1 = 0.0;
  for (const auto& bits : state.paths()) {
    for (EdgeIndex e : bits.active()) c1 += scenario.weight(e);
  }
  return c1;
}

double cost_c2(const PathState& state, const GridScenario& scenario) {
  require_shape(state, scenario);
  double c2 = 0.0;
  for (std::size_t r = 0; r + 1 < state.robots(); ++r) {
    const double diff = robot_length(state.robot(r), scenario) -
                        robot_length(state.robot(r + 1), scenario);
    c2 += diff * diff;
  }
  return c2;
}

double cost_c3(const PathState& state, const GridScenario& scenario) {
  require_shape(state, scenario);
  const Grid& grid = scenario.grid();
  std::vector<int> degree(grid.node_count(), 0);
  for (const auto& bits : state.paths()) {
    for (EdgeIndex e : bits.active()) {
      auto [a, b] = grid.edge_nodes(e);
      ++degree[grid.node_id(a)];
      ++degree[grid.node_id(b)];
    }
  }
  double c3 = 0.0;
  for (std::size_t id = 0; id < degree.size(); ++id) {
    const double diff = degree[id] - scenario.target_degree(id);
    c3 += diff * diff;
  }
  return c3;
}

CostBreakdown cost_total(const PathState& state, const GridScenario& scenario) {
  CostBreakdown out;
  out.c1 = cost_c1(state, scenario);
  out.c2 = cost_c2(state, scenario);
  out.c3 = cost_c3(state, scenario);
  out.total = weighted_total(scenario, out.c1, out.c2, out.c3);
  return out;
}

double basis_cost(const GridScenario& scenario, std::uint64_t index) {
  return cost_total(PathState::from_basis_index(index, scenario.robots(),
                                                scenario.edge_count()),
                    scenario)
      .total;
}

CostTracker::CostTracker(const GridScenario& scenario, PathState state)
    : scenario_(&scenario), state_(std::move(state)) {
  require_shape(state_, scenario);
  const Grid& grid = scenario.grid();
  edge_nodes_.reserve(grid.edge_count());
  for (EdgeIndex e = 0; e < grid.edge_count(); ++e) {
    auto [a, b] = grid.edge_nodes(e);
    edge_nodes_.emplace_back(grid.node_id(a), grid.node_id(b));
  }
  degree_.assign(grid.node_count(), 0);
  length_.assign(state_.robots(), 0.0);
  for (std::size_t r = 0; r < state_.robots(); ++r) {
    for (EdgeIndex e : state_.robot(r).active()) {
      ++degree_[edge_nodes_[e].first];
      ++degree_[edge_nodes_[e].second];
      length_[r] += scenario.length(e);
      c1_ += scenario.weight(e);
    }
  }
  for (std::size_t r = 0; r + 1 < length_.size(); ++r) {
    c2_ += pair_term(length_[r], length_[r + 1]);
  }
  for (std::size_t id = 0; id < degree_.size(); ++id) c3_ += node_term(id, degree_[id]);
}

CostBreakdown CostTracker::breakdown() const noexcept {
  return CostBreakdown{c1_, c2_, c3_, weighted_total(*scenario_, c1_, c2_, c3_)};
}

double CostTracker::node_term(std::size_t node, int degree) const noexcept {
  const double diff = degree - scenario_->target_degree(node);
  return diff * diff;
}

double CostTracker::c2_neighbourhood(std::size_t robot, double length) const noexcept {
  double sum = 0.0;
  if (robot > 0) sum += pair_term(length_[robot - 1], length);
  if (robot + 1 < length_.size()) sum += pair_term(length, length_[robot + 1]);
  return sum;
}

double CostTracker::flip_delta(std::size_t robot, EdgeIndex edge) const {
  const bool on = state_.test(robot, edge);
  const int step = on ? -1 : 1;
  const auto [u, v] = edge_nodes_[edge];
  const double d1 = step * scenario_->weight(edge);
  const double new_len = length_[robot] + step * scenario_->length(edge);
  const double d2 = c2_neighbourhood(robot, new_len) -
                    c2_neighbourhood(robot, length_[robot]);
  const double d3 = node_term(u, degree_[u] + step) - node_term(u, degree_[u]) +
                    node_term(v, degree_[v] + step) - node_term(v, degree_[v]);
  return weighted_total(*scenario_, d1, d2, d3);
}

void CostTracker::flip(std::size_t robot, EdgeIndex edge) {
  const bool on = state_.test(robot, edge);
  const int step = on ? -1 : 1;
  const auto [u, v] = edge_nodes_[edge];
  c1_ += step * scenario_->weight(edge);
  const double new_len = length_[robot] + step * scenario_->length(edge);
  c2_ += c2_neighbourhood(robot, new_len) - c2_neighbourhood(robot, length_[robot]);
  length_[robot] = new_len;
  c3_ += node_term(u, degree_[u] + step) - node_term(u, degree_[u]);
  degree_[u] += step;
  c3_ += node_term(v, degree_[v] + step) - node_term(v, degree_[v]);
  degree_[v] += step;
  state_.flip(robot, edge);
}

void CostTracker::flip_all(std::size_t robot, std::span<const EdgeIndex> edges) {
  for (EdgeIndex e : edges) flip(robot, e);
}

}  // namespace covplan
