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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "covplan/grid.hpp"
#include "covplan/sbf.hpp"
#include "oracles.hpp"

namespace covplan {
namespace {

TEST(Grid, EdgeCountFormula) {
  EXPECT_EQ(Grid(3, 3).edge_count(), 12U);
  EXPECT_EQ(Grid(4, 4).edge_count(), 24U);
  EXPECT_EQ(Grid(2, 5).edge_count(), 5U * 1 + 2U * 4);
  EXPECT_EQ(Grid(1, 1).edge_count(), 0U);
  EXPECT_THROW(Grid(0, 3), std::invalid_argument);
}

TEST(Grid, EdgeIndexIsSymmetricBijection) {
  for (auto [n, m] : {std::pair{2, 2}, {3, 3}, {3, 5}, {4, 4}, {1, 4}}) {
    const Grid g(n, m);
    std::set<EdgeIndex> seen;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < m; ++c) {
        for (auto [dr, dc] : {std::pair{0, 1}, {1, 0}}) {
          const Node a{r, c};
          const Node b{r + dr, c + dc};
          if (!g.contains(b)) continue;
          const EdgeIndex e = g.edge_index(a, b);
          EXPECT_EQ(e, g.edge_index(b, a));
          EXPECT_LT(e, g.edge_count());
          EXPECT_TRUE(seen.insert(e).second);
          auto [u, v] = g.edge_nodes(e);
          EXPECT_EQ(u, a);
          EXPECT_EQ(v, b);
        }
      }
    }
    EXPECT_EQ(seen.size(), g.edge_count());
  }
}

TEST(Grid, CanonicalOrderMatchesOracle) {
  const Grid g(3, 4);
  const oracle::RawGrid raw{3, 4};
  const auto el = raw.edge_list();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge_nodes(e);
    EXPECT_EQ(static_cast<int>(g.node_id(a)), el[e].first);
    EXPECT_EQ(static_cast<int>(g.node_id(b)), el[e].second);
  }
}

TEST(Grid, EdgeIndexRejectsBadPairs) {
  const Grid g(3, 3);
  EXPECT_THROW((void)g.edge_index({0, 0}, {1, 1}), std::invalid_argument);
  EXPECT_THROW((void)g.edge_index({0, 0}, {0, 0}), std::invalid_argument);
  EXPECT_THROW((void)g.edge_index({2, 2}, {2, 3}), std::invalid_argument);
  EXPECT_FALSE(g.find_edge({0, 0}, {0, 2}).has_value());
}

TEST(Grid, IncidentEdgeCounts) {
  const Grid g(3, 3);
  EXPECT_EQ(g.incident_edges({0, 0}).size(), 2U);
  EXPECT_EQ(g.incident_edges({1, 1}).size(), 4U);
  EXPECT_EQ(g.incident_edges({0, 1}).size(), 3U);
  const auto inc = g.incident_edges({1, 1});
  EXPECT_TRUE(std::is_sorted(inc.begin(), inc.end()));
  EXPECT_THROW((void)g.incident_edges({3, 0}), std::invalid_argument);
}

TEST(Grid, HeuristicPathIsValid) {
  const Grid g(3, 3);
  EdgeSet bits = g.empty_edge_set();
  bits.set(g.edge_index({0, 0}, {0, 1}));
  bits.set(g.edge_index({0, 1}, {0, 2}));
  bits.set(g.edge_index({0, 2}, {1, 2}));
  bits.set(g.edge_index({1, 2}, {2, 2}));
  EXPECT_TRUE(is_valid_path(g, bits, {0, 0}, {2, 2}));
  const auto nodes = trace_path(g, bits, {0, 0}, {2, 2});
  ASSERT_TRUE(nodes.has_value());
  EXPECT_EQ(nodes->size(), 5U);
  EXPECT_EQ(nodes->back(), (Node{2, 2}));
}

TEST(Grid, PathPlusLoopIsInvalid) {
  const Grid g(3, 3);
  EdgeSet bits = g.empty_edge_set();
  // Bottom row path (2,0) -> (2,2) plus the detached top-left 4-cycle.
  bits.set(g.edge_index({2, 0}, {2, 1}));
  bits.set(g.edge_index({2, 1}, {2, 2}));
  bits.set(g.edge_index({0, 0}, {0, 1}));
  bits.set(g.edge_index({0, 1}, {1, 1}));
  bits.set(g.edge_index({1, 1}, {1, 0}));
  bits.set(g.edge_index({1, 0}, {0, 0}));
  EXPECT_FALSE(is_valid_path(g, bits, {2, 0}, {2, 2}));
}

TEST(Grid, EmptyPath) {
  const Grid g(3, 3);
  EXPECT_FALSE(is_valid_path(g, g.empty_edge_set(), {0, 0}, {2, 2}));
  EXPECT_TRUE(is_valid_path(g, g.empty_edge_set(), {1, 1}, {1, 1}));
  EdgeSet one = g.empty_edge_set();
  one.set(0);
  EXPECT_FALSE(is_valid_path(g, one, {1, 1}, {1, 1}));
}

// Property: is_valid_path agrees with the degree/union-find oracle and with
// the independent walk on every subset of 3x3 edges, for several endpoint pairs.
TEST(GridProperty, ValidityAgreesWithOraclesExhaustively) {
  const Grid g(3, 3);
  const oracle::RawGrid raw{3, 3};
  const std::vector<std::pair<Node, Node>> pairs = {
      {{0, 0}, {2, 2}}, {{0, 0}, {0, 2}}, {{1, 0}, {1, 2}}, {{0, 1}, {2, 1}}, {{0, 0}, {1, 1}}};
  for (const auto& [s, t] : pairs) {
    const int si = raw.node(s.row, s.col);
    const int ti = raw.node(t.row, t.col);
    for (std::uint64_t m = 0; m < (1U << 12); ++m) {
      const EdgeSet bits = EdgeSet::from_u64(m, 12);
      const bool got = is_valid_path(g, bits, s, t);
      ASSERT_EQ(got, oracle::valid_path_mask(raw, m, si, ti)) << bits.to_string();
      ASSERT_EQ(got, oracle::walk_check(raw, m, si, ti)) << bits.to_string();
    }
  }
}

TEST(GridProperty, ValidPathDegrees) {
  const Grid g(3, 4);
  const oracle::RawGrid raw{3, 4};
  const Node s{0, 0};
  const Node t{2, 3};
  for (std::uint64_t m : oracle::all_paths(raw, 0, raw.node(2, 3))) {
    const EdgeSet bits = EdgeSet::from_u64(m, g.edge_count());
    for (std::size_t id = 0; id < g.node_count(); ++id) {
      const Node v = g.node_at(id);
      const int d = g.active_degree(bits, v);
      if (v == s || v == t) {
        EXPECT_EQ(d, 1);
      } else {
        EXPECT_TRUE(d == 0 || d == 2);
      }
    }
  }
}

}  // namespace
}  // namespace covplan
