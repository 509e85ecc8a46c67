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

#include "covplan/render.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace covplan {

namespace {

void require_shape(const PathState& state, const GridScenario& scenario) {
  if (!state.matches(scenario)) {
    throw std::invalid_argument("render: state shape does not match the scenario");
  }
}

char node_glyph(const GridScenario& scenario, std::size_t robot, Node node) {
  const auto& ep = scenario.endpoints(robot);
  if (node == ep.source) return 'S';
  if (node == ep.dest) return 'D';
  if (scenario.is_obstacle(node)) return 'X';
  return 'o';
}

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string render_ascii(const PathState& state, const GridScenario& scenario) {
  require_shape(state, scenario);
  const Grid& grid = scenario.grid();
  std::ostringstream os;
  for (std::size_t r = 0; r < state.robots(); ++r) {
    const EdgeSet& bits = state.robot(r);
    os << "robot " << r << "\n";
    for (int row = 0; row < grid.rows(); ++row) {
      std::string line;
      for (int col = 0; col < grid.cols(); ++col) {
        line += node_glyph(scenario, r, Node{row, col});
        if (col + 1 < grid.cols()) {
          const bool on = bits.test(grid.edge_index(Node{row, col}, Node{row, col + 1}));
          line += on ? "---" : "   ";
        }
      }
      os << line << "\n";
      if (row + 1 == grid.rows()) break;
      std::string below;
      for (int col = 0; col < grid.cols(); ++col) {
        const bool on = bits.test(grid.edge_index(Node{row, col}, Node{row + 1, col}));
        below += on ? '|' : ' ';
        if (col + 1 < grid.cols()) below += "   ";
      }
      while (!below.empty() && below.back() == ' ') below.pop_back();
      os << below << "\n";
    }
  }
  return os.str();
}

std::string render_svg(const PathState& state, const GridScenario& scenario) {
  require_shape(state, scenario);
  const Grid& grid = scenario.grid();
  constexpr double kCell = 60.0;
  constexpr double kMargin = 30.0;
  const double width = 2 * kMargin + kCell * (grid.cols() - 1);
  const double height = 2 * kMargin + kCell * (grid.rows() - 1);
  const auto px = [&](Node n) {
    return std::pair{kMargin + kCell * n.col, kMargin + kCell * n.row};
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <g id=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (EdgeIndex e = 0; e < grid.edge_count(); ++e) {
    auto [a, b] = grid.edge_nodes(e);
    auto [x1, y1] = px(a);
    auto [x2, y2] = px(b);
    os << "    <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
       << "\" y2=\"" << fmt(y2) << "\"/>\n";
  }
  os << "  </g>\n";

  // Robots are offset a few pixels apart so shared edges stay visible.
  const double spread = 4.0;
  const double first = -spread * static_cast<double>(state.robots() - 1) / 2.0;
  for (std::size_t r = 0; r < state.robots(); ++r) {
    const double off = first + spread * static_cast<double>(r);
    const char* colour = kPalette[r % kPalette.size()];
    os << "  <g id=\"robot-" << r << "\" stroke=\"" << colour
       << "\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
    for (EdgeIndex e : state.robot(r).active()) {
      auto [a, b] = grid.edge_nodes(e);
      auto [x1, y1] = px(a);
      auto [x2, y2] = px(b);
      os << "    <line x1=\"" << fmt(x1 + off) << "\" y1=\"" << fmt(y1 + off) << "\" x2=\""
         << fmt(x2 + off) << "\" y2=\"" << fmt(y2 + off) << "\"/>\n";
    }
    const auto& ep = scenario.endpoints(r);
    for (Node n : {ep.source, ep.dest}) {
      auto [x, y] = px(n);
      os << "    <rect x=\"" << fmt(x - 7) << "\" y=\"" << fmt(y - 7)
         << "\" width=\"14\" height=\"14\" fill=\"" << colour << "\" stroke=\"black\""
         << " stroke-width=\"1\"/>\n";
    }
    os << "  </g>\n";
  }

  os << "  <g id=\"nodes\">\n";
  for (std::size_t id = 0; id < grid.node_count(); ++id) {
    const Node n = grid.node_at(id);
    auto [x, y] = px(n);
    if (scenario.is_obstacle(n)) {
      os << "    <polygon points=\"" << fmt(x) << "," << fmt(y - 9) << " " << fmt(x - 8) << ","
         << fmt(y + 6) << " " << fmt(x + 8) << "," << fmt(y + 6)
         << "\" fill=\"#444444\"/>\n";
    } else {
      os << "    <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
         << "\" r=\"3\" fill=\"#888888\"/>\n";
    }
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace covplan
