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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covplan/edge_set.hpp"

namespace covplan {

using EdgeIndex = std::size_t;

/// Grid node, zero-based (row, col) with row 0 at the top.
struct Node {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Node&, const Node&) = default;
};

std::string to_string(Node node);

/// Rectangular rows x cols grid graph with 4-neighbour connectivity.
///
/// Edges are numbered canonically: every horizontal edge in row-major order
/// (row 0 left to right, then row 1, ...), followed by every vertical edge in
/// row-major order of its upper node. Horizontal edge (r,c)-(r,c+1) has index
/// r*(cols-1)+c; vertical edge (r,c)-(r+1,c) has index
/// rows*(cols-1) + r*cols + c.
class Grid {
 public:
  Grid(int rows, int cols);

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t node_count() const noexcept {
    return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_);
  }
  /// m(n-1) + n(m-1).
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
  [[nodiscard]] std::size_t horizontal_edge_count() const noexcept {
    return horizontal_;
  }

  [[nodiscard]] bool contains(Node node) const noexcept;

  /// Row-major node id.
  [[nodiscard]] std::size_t node_id(Node node) const;
  [[nodiscard]] Node node_at(std::size_t id) const;

  /// Canonical index of the edge joining two grid-adjacent nodes; symmetric
  /// in argument order. Throws std::invalid_argument otherwise.
  [[nodiscard]] EdgeIndex edge_index(Node a, Node b) const;
  [[nodiscard]] std::optional<EdgeIndex> find_edge(Node a, Node b) const noexcept;

  /// Endpoints of an edge, (left, right) or (upper, lower).
  [[nodiscard]] std::pair<Node, Node> edge_nodes(EdgeIndex edge) const;

  /// Edges touching `node`, ascending: 2 at corners, 3 on borders, 4 inside.
  [[nodiscard]] std::vector<EdgeIndex> incident_edges(Node node) const;

  /// Number of active edges in `bits` incident to `node`.
  [[nodiscard]] int active_degree(const EdgeSet& bits, Node node) const;

  [[nodiscard]] EdgeSet empty_edge_set() const { return EdgeSet(edge_count_); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int rows_;
  int cols_;
  std::size_t horizontal_;
  std::size_t edge_count_;
};

/// True iff the active edges of `bits` form exactly one simple path from
/// `source` to `dest`: both endpoints have degree 1, every other touched node
/// degree 2, the active set is connected and acyclic. With source == dest the
/// only valid state is the empty edge set.
[[nodiscard]] bool is_valid_path(const Grid& grid, const EdgeSet& bits,
                                 Node source, Node dest);

/// Node sequence of a valid path from source to dest, or nullopt when the
/// bits are not a valid path.
[[nodiscard]] std::optional<std::vector<Node>> trace_path(const Grid& grid,
                                                          const EdgeSet& bits,
                                                          Node source, Node dest);

[[nodiscard]] int manhattan_distance(Node a, Node b) noexcept;

}  // namespace covplan
