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

#include <string>

#include "covplan/scenario.hpp"

namespace covplan {

/// One text grid per robot. Nodes: S / D for that robot's endpoints, X for
/// obstacles, o otherwise; active edges drawn as --- and |.
[[nodiscard]] std::string render_ascii(const PathState& state, const GridScenario& scenario);

/// Standalone SVG: endpoints as squares, obstacles as triangles, one stroke
/// colour and one <g> layer per robot. Throws std::invalid_argument on a
/// shape mismatch (as does render_ascii).
[[nodiscard]] std::string render_svg(const PathState& state, const GridScenario& scenario);

}  // namespace covplan
