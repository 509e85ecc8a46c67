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

/// Simultaneous Bit Flip (SBF) move on four-node sub-grids.
///
/// A sub-grid is the unit square a=(i,j), b=(i,j+1), c=(i+1,j+1), d=(i+1,j)
/// with inner edges ab, bc, cd, da. Complementing the four inner bits swaps
/// the two local routes between any pair of square nodes. Whether the swap
/// keeps a global path valid is decided by
///
///   f1: some inner edge is active (0000 would become a closed loop),
///   f2: the inner bits are not two parallel segments (0101 / 1010),
///   f3: no square node has both of its outside edges active,
///   endpoint guard: no square node of odd degree has an active outside edge.
///
/// The first three read directly off the sub-grid bits. The endpoint guard
/// covers a path endpoint whose only edge leaves the square: flipping would
/// give it degree 3. For nodes of even degree it is implied by f3.
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "covplan/edge_set.hpp"
#include "covplan/errors.hpp"
#include "covplan/grid.hpp"
#include "covplan/scenario.hpp"

namespace covplan {

/// Bits of (ab, bc, cd, da), in that order.
using InnerBits = std::array<bool, 4>;
/// Per square node (a, b, c, d): its outside edges, absent edges read 0.
using OutsideBits = std::array<std::array<bool, 2>, 4>;

struct SubGrid {
  Node corner;                                   // node a (top-left)
  std::array<EdgeIndex, 4> inner{};              // ab, bc, cd, da
  std::array<std::vector<EdgeIndex>, 4> outside; // per node a, b, c, d

  [[nodiscard]] std::array<Node, 4> nodes() const noexcept {
    return {corner, Node{corner.row, corner.col + 1},
            Node{corner.row + 1, corner.col + 1}, Node{corner.row + 1, corner.col}};
  }

  friend bool operator==(const SubGrid&, const SubGrid&) = default;
};

/// (rows-1)(cols-1) sub-grids in row-major corner order. Throws
/// std::invalid_argument for grids smaller than 2x2.
[[nodiscard]] std::vector<SubGrid> enumerate_subgrids(const Grid& grid);
[[nodiscard]] std::vector<SubGrid> enumerate_subgrids(const GridScenario& scenario);

[[nodiscard]] bool has_subgrids(const Grid& grid) noexcept;

[[nodiscard]] constexpr bool f1(const InnerBits& x) noexcept {
  return x[0] || x[1] || x[2] || x[3];
}

[[nodiscard]] constexpr bool f2(const InnerBits& x) noexcept {
  const bool ab_cd = x[0] && !x[1] && x[2] && !x[3];
  const bool bc_da = !x[0] && x[1] && !x[2] && x[3];
  return !(ab_cd || bc_da);
}

[[nodiscard]] constexpr bool f3(const OutsideBits& o) noexcept {
  return !((o[0][0] && o[0][1]) || (o[1][0] && o[1][1]) || (o[2][0] && o[2][1]) ||
           (o[3][0] && o[3][1]));
}

/// False iff a square node has odd total degree and an active outside edge.
[[nodiscard]] constexpr bool endpoint_guard(const InnerBits& x,
                                            const OutsideBits& o) noexcept {
  for (int k = 0; k < 4; ++k) {
    const int outside = (o[k][0] ? 1 : 0) + (o[k][1] ? 1 : 0);
    // Node k touches inner edges k (leaving it) and k-1 (arriving).
    const int inner = (x[k] ? 1 : 0) + (x[(k + 3) % 4] ? 1 : 0);
    if (outside > 0 && ((outside + inner) % 2) == 1) return false;
  }
  return true;
}

[[nodiscard]] InnerBits inner_bits(const EdgeSet& bits, const SubGrid& sub);
[[nodiscard]] OutsideBits outside_bits(const EdgeSet& bits, const SubGrid& sub);

/// f1 & f2 & f3 & endpoint guard on one robot's bits.
[[nodiscard]] bool sbf_allowed(const EdgeSet& bits, const SubGrid& sub);

/// Complements the four inner bits. Throws std::logic_error when the move is
/// not allowed on `bits`.
[[nodiscard]] EdgeSet apply_sbf(EdgeSet bits, const SubGrid& sub);

/// Unchecked flip of the inner bits.
void flip_inner(EdgeSet& bits, const SubGrid& sub);

/// L-shaped start path: horizontally to the destination column, then
/// vertically to the destination row.
[[nodiscard]] EdgeSet initial_path(const Grid& grid, Node source, Node dest);
[[nodiscard]] EdgeSet initial_path(const GridScenario& scenario, std::size_t robot);
[[nodiscard]] PathState initial_state(const GridScenario& scenario);

/// A path is trivial when it only moves toward the destination, i.e. it is a
/// shortest path (length equals the Manhattan distance).
[[nodiscard]] bool is_trivial_path(const Grid& grid, const EdgeSet& bits, Node source,
                                   Node dest);

enum class ReductionKind {
  kS1,  // flip of a cell bordered on three sides: removes a U-turn
  kS2,  // flip of a corner cell: moves the corner inward, same length
};

std::string to_string(ReductionKind kind);

struct ReductionMove {
  SubGrid cell;
  ReductionKind kind;
};

/// Sequence of allowed moves that turns a valid path into a trivial one while
/// keeping every intermediate path valid. S1 moves are applied eagerly (first
/// allowed cell in row-major order); when none is available the shortest run
/// of S2 moves that exposes one is used. Throws std::invalid_argument for an
/// invalid input path and std::runtime_error past the 4*E^2 move cap.
[[nodiscard]] std::vector<ReductionMove> reduce_to_trivial(const Grid& grid,
                                                           const EdgeSet& bits,
                                                           Node source, Node dest);

/// Breadth-first closure of the robot's initial path under allowed SBF moves,
/// sorted ascending. Throws BudgetExceeded past `max_states`.
[[nodiscard]] std::vector<EdgeSet> reachable_states(const GridScenario& scenario,
                                                    std::size_t robot,
                                                    std::size_t max_states = 2'000'000);
[[nodiscard]] std::vector<EdgeSet> reachable_states(const Grid& grid, Node source,
                                                    Node dest,
                                                    std::size_t max_states = 2'000'000);

}  // namespace covplan
