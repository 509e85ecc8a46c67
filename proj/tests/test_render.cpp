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

#include <algorithm>

#include "covplan/render.hpp"
#include "covplan/sbf.hpp"
#include "test_util.hpp"

namespace covplan {
namespace {

using testing::make_scenario;

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Render, EmptyStateHasNoEdges) {
  const auto sc = make_scenario(3, 3, {{{0, 0}, {2, 2}}}, {{1, 1}});
  const auto txt = render_ascii(PathState(1, 12), sc);
  EXPECT_EQ(count(txt, "---"), 0U);
  EXPECT_EQ(count(txt, "|"), 0U);
  EXPECT_EQ(count(txt, "S"), 1U);
  EXPECT_EQ(count(txt, "D"), 1U);
  EXPECT_EQ(count(txt, "X"), 1U);
}

TEST(Render, LShapedPath) {
  const auto sc = make_scenario(3, 3, {{{0, 0}, {2, 2}}});
  const auto txt = render_ascii(PathState({initial_path(sc, 0)}), sc);
  EXPECT_EQ(count(txt, "---") + count(txt, "|"), 4U);
  EXPECT_NE(txt.find("robot 0"), std::string::npos);
}

TEST(Render, SvgLayers) {
  const auto sc = testing::load("grid4x4_two.json");
  const auto svg = render_svg(initial_state(sc), sc);
  EXPECT_EQ(svg.rfind("<svg", 0), 0U);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(count(svg, "<g id=\"robot-"), 2U);
  EXPECT_NE(svg.find("robot-0"), std::string::npos);
  EXPECT_NE(svg.find("robot-1"), std::string::npos);
}

TEST(Render, ShapeMismatchThrows) {
  const auto sc = make_scenario(2, 2, {{{0, 0}, {1, 1}}});
  EXPECT_THROW((void)render_ascii(PathState(2, 4), sc), std::invalid_argument);
  EXPECT_THROW((void)render_svg(PathState(1, 5), sc), std::invalid_argument);
}

}  // namespace
}  // namespace covplan
