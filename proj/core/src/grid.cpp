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

#include "covplan/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace covplan {

std::string to_string(Node node) {
  return "(" + std::to_string(node.row) + "," + std::to_string(node.col) + ")";
}

int manhattan_distance(Node a, Node b) noexcept {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

Grid::Grid(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("Grid: rows and cols must be positive");
  }
  const auto n = static_cast<std::size_t>(rows);
  const auto m = static_cast<std::size_t>(cols);
  horizontal_ = n * (m - 1);
  edge_count_ = m * (n - 1) + n * (m - 1);
}

bool Grid::contains(Node node) const noexcept {
  return node.row >= 0 && node.row < rows_ && node.col >= 0 && node.col < cols_;
}

std::size_t Grid::node_id(Node node) const {
  if (!contains(node)) {
    throw std::invalid_argument("node " + to_string(node) + " outside grid");
  }
  return static_cast<std::size_t>(node.row) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(node.col);
}

Node Grid::node_at(std::size_t id) const {
  if (id >= node_count()) throw std::out_of_range("Grid::node_at: bad node id");
  const auto m = static_cast<std::size_t>(cols_);
  return Node{static_cast<int>(id / m), static_cast<int>(id % m)};
}

std::optional<EdgeIndex> Grid::find_edge(Node a, Node b) const noexcept {
  if (!contains(a) || !contains(b) || manhattan_distance(a, b) != 1) {
    return std::nullopt;
  }
  if (b < a) std::swap(a, b);
  const auto r = static_cast<std::size_t>(a.row);
  const auto c = static_cast<std::size_t>(a.col);
  const auto m = static_cast<std::size_t>(cols_);
  if (a.row == b.row) return r * (m - 1) + c;
  return horizontal_ + r * m + c;
}

EdgeIndex Grid::edge_index(Node a, Node b) const {
  if (auto e = find_edge(a, b)) return *e;
  throw std::invalid_argument("nodes " + to_string(a) + " and " + to_string(b) +
                              " are not adjacent grid nodes");
}

std::pair<Node, Node> Grid::edge_nodes(EdgeIndex edge) const {
  if (edge >= edge_count_) throw std::out_of_range("Grid::edge_nodes: bad edge");
  const auto m = static_cast<std::size_t>(cols_);
  if (edge < horizontal_) {
    const int r = static_cast<int>(edge / (m - 1));
    const int c = static_cast<int>(edge % (m - 1));
    return {Node{r, c}, Node{r, c + 1}};
  }
  const std::size_t v = edge - horizontal_;
  const int r = static_cast<int>(v / m);
  const int c = static_cast<int>(v % m);
  return {Node{r, c}, Node{r + 1, c}};
}

std::vector<EdgeIndex> Grid::incident_edges(Node node) const {
  if (!contains(node)) {
    throw std::invalid_argument("node " + to_string(node) + " outside grid");
  }
  std::vector<EdgeIndex> out;
  out.reserve(4);
  const Node neighbours[] = {{node.row - 1, node.col},
                             {node.row, node.col + 1},
                             {node.row + 1, node.col},
                             {node.row, node.col - 1}};
  for (const Node& nb : neighbours) {
    if (auto e = find_edge(node, nb)) out.push_back(*e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Grid::active_degree(const EdgeSet& bits, Node node) const {
  int deg = 0;
  for (EdgeIndex e : incident_edges(node)) deg += bits.test(e) ? 1 : 0;
  return deg;
}

std::optional<std::vector<Node>> trace_path(const Grid& grid, const EdgeSet& bits,
                                            Node source, Node dest) {
  if (bits.size() != grid.edge_count()) {
    throw std::invalid_argument("trace_path: bit-vector length != edge count");
  }
  if (!grid.contains(source) || !grid.contains(dest)) {
    throw std::invalid_argument("trace_path: endpoint outside grid");
  }
  const std::vector<std::size_t> active = bits.active();
  if (source == dest) {
    if (active.empty()) return std::vector<Node>{source};
    return std::nullopt;
  }
  if (active.empty()) return std::nullopt;

  std::vector<int> degree(grid.node_count(), 0);
  for (EdgeIndex e : active) {
    auto [a, b] = grid.edge_nodes(e);
    ++degree[grid.node_id(a)];
    ++degree[grid.node_id(b)];
  }
  const std::size_t sid = grid.node_id(source);
  const std::size_t did = grid.node_id(dest);
  for (std::size_t id = 0; id < degree.size(); ++id) {
    const int want = (id == sid || id == did) ? 1 : 2;
    if (degree[id] != 0 && degree[id] != want) return std::nullopt;
  }
  if (degree[sid] != 1 || degree[did] != 1) return std::nullopt;

  // Degree pattern admits one path plus possibly disjoint cycles; walking
  // from the source and consuming every active edge rules the cycles out.
  std::vector<Node> nodes{source};
  Node current = source;
  std::optional<EdgeIndex> came_from;
  while (current != dest) {
    std::optional<EdgeIndex> next;
    for (EdgeIndex e : grid.incident_edges(current)) {
      if (bits.test(e) && e != came_from) {
        next = e;
        break;
      }
    }
    if (!next) return std::nullopt;
    auto [a, b] = grid.edge_nodes(*next);
    current = (a == current) ? b : a;
    came_from = next;
    nodes.push_back(current);
    if (nodes.size() > active.size() + 1) return std::nullopt;
  }
  if (nodes.size() != active.size() + 1) return std::nullopt;
  return nodes;
}

bool is_valid_path(const Grid& grid, const EdgeSet& bits, Node source, Node dest) {
  return trace_path(grid, bits, source, dest).has_value();
}

}  // namespace covplan
