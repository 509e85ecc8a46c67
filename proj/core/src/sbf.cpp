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

#include "covplan/sbf.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace covplan {

bool has_subgrids(const Grid& grid) noexcept {
  return grid.rows() >= 2 && grid.cols() >= 2;
}

std::vector<SubGrid> enumerate_subgrids(const Grid& grid) {
  if (!has_subgrids(grid)) {
    throw std::invalid_argument("enumerate_subgrids: grid smaller than 2x2");
  }
  std::vector<SubGrid> out;
  out.reserve(static_cast<std::size_t>(grid.rows() - 1) *
              static_cast<std::size_t>(grid.cols() - 1));
  for (int i = 0; i + 1 < grid.rows(); ++i) {
    for (int j = 0; j + 1 < grid.cols(); ++j) {
      SubGrid sub;
      sub.corner = Node{i, j};
      const auto nodes = sub.nodes();
      for (int k = 0; k < 4; ++k) {
        sub.inner[static_cast<std::size_t>(k)] =
            grid.edge_index(nodes[static_cast<std::size_t>(k)],
                            nodes[static_cast<std::size_t>((k + 1) % 4)]);
      }
      for (std::size_t k = 0; k < 4; ++k) {
        for (EdgeIndex e : grid.incident_edges(nodes[k])) {
          if (std::find(sub.inner.begin(), sub.inner.end(), e) == sub.inner.end()) {
            sub.outside[k].push_back(e);
          }
        }
      }
      out.push_back(std::move(sub));
    }
  }
  return out;
}

std::vector<SubGrid> enumerate_subgrids(const GridScenario& scenario) {
  return enumerate_subgrids(scenario.grid());
}

InnerBits inner_bits(const EdgeSet& bits, const SubGrid& sub) {
  return {bits.test(sub.inner[0]), bits.test(sub.inner[1]), bits.test(sub.inner[2]),
          bits.test(sub.inner[3])};
}

OutsideBits outside_bits(const EdgeSet& bits, const SubGrid& sub) {
  OutsideBits out{};
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < sub.outside[k].size() && j < 2; ++j) {
      out[k][j] = bits.test(sub.outside[k][j]);
    }
  }
  return out;
}

bool sbf_allowed(const EdgeSet& bits, const SubGrid& sub) {
  const InnerBits x = inner_bits(bits, sub);
  if (!f1(x) || !f2(x)) return false;
  const OutsideBits o = outside_bits(bits, sub);
  return f3(o) && endpoint_guard(x, o);
}

void flip_inner(EdgeSet& bits, const SubGrid& sub) {
  for (EdgeIndex e : sub.inner) bits.flip(e);
}

EdgeSet apply_sbf(EdgeSet bits, const SubGrid& sub) {
  if (!sbf_allowed(bits, sub)) {
    throw std::logic_error("apply_sbf: move not allowed on sub-grid at " +
                           to_string(sub.corner));
  }
  flip_inner(bits, sub);
  return bits;
}

EdgeSet initial_path(const Grid& grid, Node source, Node dest) {
  if (!grid.contains(source) || !grid.contains(dest)) {
    throw std::invalid_argument("initial_path: endpoint outside grid");
  }
  EdgeSet bits = grid.empty_edge_set();
  Node at = source;
  while (at.col != dest.col) {
    const Node next{at.row, at.col + (dest.col > at.col ? 1 : -1)};
    bits.set(grid.edge_index(at, next));
    at = next;
  }
  while (at.row != dest.row) {
    const Node next{at.row + (dest.row > at.row ? 1 : -1), at.col};
    bits.set(grid.edge_index(at, next));
    at = next;
  }
  return bits;
}

EdgeSet initial_path(const GridScenario& scenario, std::size_t robot) {
  const auto& ep = scenario.endpoints(robot);
  return initial_path(scenario.grid(), ep.source, ep.dest);
}

PathState initial_state(const GridScenario& scenario) {
  std::vector<EdgeSet> paths;
  paths.reserve(scenario.robots());
  for (std::size_t r = 0; r < scenario.robots(); ++r) {
    paths.push_back(initial_path(scenario, r));
  }
  return PathState(std::move(paths));
}

bool is_trivial_path(const Grid& grid, const EdgeSet& bits, Node source, Node dest) {
  return is_valid_path(grid, bits, source, dest) &&
         bits.count() == static_cast<std::size_t>(manhattan_distance(source, dest));
}

std::string to_string(ReductionKind kind) {
  return kind == ReductionKind::kS1 ? "S1" : "S2";
}

namespace {

std::size_t inner_count(const EdgeSet& bits, const SubGrid& sub) {
  std::size_t n = 0;
  for (EdgeIndex e : sub.inner) n += bits.test(e) ? 1 : 0;
  return n;
}

std::optional<std::size_t> first_s1(const EdgeSet& bits,
                                    const std::vector<SubGrid>& subs) {
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (inner_count(bits, subs[k]) == 3 && sbf_allowed(bits, subs[k])) return k;
  }
  return std::nullopt;
}

// Shortest run of length-preserving corner flips from `start` to a path that
// admits an S1 move; cells are tried in row-major order at every level.
std::optional<std::vector<std::size_t>> s2_run_to_s1(const EdgeSet& start,
                                                     const std::vector<SubGrid>& subs,
                                                     std::size_t max_states) {
  struct Visit {
    EdgeSet parent;
    std::size_t cell;
  };
  std::unordered_map<EdgeSet, Visit, EdgeSetHash> seen;
  std::deque<EdgeSet> frontier{start};
  seen.emplace(start, Visit{start, subs.size()});
  while (!frontier.empty()) {
    EdgeSet current = std::move(frontier.front());
    frontier.pop_front();
    if (first_s1(current, subs)) {
      std::vector<std::size_t> run;
      for (EdgeSet at = current; at != start;) {
        const Visit& v = seen.at(at);
        run.push_back(v.cell);
        at = v.parent;
      }
      std::reverse(run.begin(), run.end());
      return run;
    }
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (inner_count(current, subs[k]) != 2 || !sbf_allowed(current, subs[k])) continue;
      EdgeSet next = current;
      flip_inner(next, subs[k]);
      if (seen.emplace(next, Visit{current, k}).second) {
        if (seen.size() > max_states) return std::nullopt;
        frontier.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<ReductionMove> reduce_to_trivial(const Grid& grid, const EdgeSet& bits,
                                             Node source, Node dest) {
  if (!is_valid_path(grid, bits, source, dest)) {
    throw std::invalid_argument("reduce_to_trivial: input is not a valid path");
  }
  std::vector<ReductionMove> moves;
  if (!has_subgrids(grid)) return moves;  // 1xN grids only have trivial paths
  const auto subs = enumerate_subgrids(grid);
  const std::size_t cap = 4 * grid.edge_count() * grid.edge_count();

  EdgeSet current = bits;
  while (current.count() != static_cast<std::size_t>(manhattan_distance(source, dest))) {
    if (auto k = first_s1(current, subs)) {
      flip_inner(current, subs[*k]);
      moves.push_back({subs[*k], ReductionKind::kS1});
    } else {
      auto run = s2_run_to_s1(current, subs, cap * 64);
      if (!run) {
        throw std::runtime_error("reduce_to_trivial: no S1/S2 move reduces path " +
                                 current.to_string());
      }
      for (std::size_t k : *run) {
        flip_inner(current, subs[k]);
        moves.push_back({subs[k], ReductionKind::kS2});
      }
    }
    if (moves.size() > cap) {
      throw std::runtime_error("reduce_to_trivial: exceeded move budget of " +
                               std::to_string(cap));
    }
  }
  return moves;
}

std::vector<EdgeSet> reachable_states(const Grid& grid, Node source, Node dest,
                                      std::size_t max_states) {
  const EdgeSet start = initial_path(grid, source, dest);
  std::unordered_set<EdgeSet, EdgeSetHash> seen{start};
  std::vector<EdgeSet> order{start};
  if (has_subgrids(grid)) {
    const auto subs = enumerate_subgrids(grid);
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (const auto& sub : subs) {
        if (!sbf_allowed(order[head], sub)) continue;
        EdgeSet next = order[head];
        flip_inner(next, sub);
        if (seen.insert(next).second) {
          if (seen.size() > max_states) {
            throw BudgetExceeded("reachable_states: more than " +
                                 std::to_string(max_states) + " states");
          }
          order.push_back(std::move(next));
        }
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<EdgeSet> reachable_states(const GridScenario& scenario, std::size_t robot,
                                      std::size_t max_states) {
  const auto& ep = scenario.endpoints(robot);
  return reachable_states(scenario.grid(), ep.source, ep.dest, max_states);
}

}  // namespace covplan
