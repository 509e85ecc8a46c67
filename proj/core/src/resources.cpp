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

#include "covplan/resources.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace covplan {

namespace {

constexpr std::uint64_t kAncillaPerRobot = 8;
// One 3-qubit Toffoli.
constexpr GateCounts kToffoliGates{6, 9};
// Mixer ladder: 8 H, 6 CNOT; its RZ is replaced by the controlled core.
constexpr GateCounts kSbfBody{6, 8};
// Controlled Z rotation: 2 CNOT + 2 RZ.
constexpr GateCounts kControlledCore{2, 2};

std::uint64_t grid_edges(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("resources: grid must be at least 1x1");
  const auto n = static_cast<std::uint64_t>(rows);
  const auto m = static_cast<std::uint64_t>(cols);
  return m * (n - 1) + n * (m - 1);
}

}  // namespace

QubitCount qubit_count(int rows, int cols, std::uint64_t robots) {
  return {robots * grid_edges(rows, cols), kAncillaPerRobot * robots};
}

QubitCount qubit_count(const GridScenario& scenario) {
  return qubit_count(scenario.grid().rows(), scenario.grid().cols(), scenario.robots());
}

PhaseCounts phase_separator_counts(std::uint64_t decision_qubits) {
  const std::uint64_t re = decision_qubits;
  return {re, re * (re + 1), re * (re + 1) / 2};
}

ToffoliSplit toffoli_decomposition(std::uint64_t gate_qubits) {
  if (gate_qubits < 3) {
    throw std::invalid_argument("toffoli_decomposition: need at least 3 qubits, got " +
                                std::to_string(gate_qubits));
  }
  if (gate_qubits == 3) return {1, 0};
  const std::uint64_t l = gate_qubits - 1;
  return {4 * (l - 2), l - 2};
}

PartialMixerBreakdown partial_mixer_counts() {
  // f1: one 5-qubit gate; f2: two 5-qubit; f3: four 3-qubit; f: one 7-qubit.
  const ToffoliSplit five = toffoli_decomposition(5);
  const ToffoliSplit three = toffoli_decomposition(3);
  const ToffoliSplit seven = toffoli_decomposition(7);

  PartialMixerBreakdown out;
  out.logic_toffolis =
      1 * five.toffolis + 2 * five.toffolis + 4 * three.toffolis + 1 * seven.toffolis;
  out.work_qubits = std::max({five.work, three.work, seven.work});
  out.logic = {2 * out.logic_toffolis * kToffoliGates.cnot,
               2 * out.logic_toffolis * kToffoliGates.single};
  out.sbf_body = kSbfBody;
  out.controlled_core = kControlledCore;
  out.total = {out.logic.cnot + kSbfBody.cnot + kControlledCore.cnot,
               out.logic.single + kSbfBody.single + kControlledCore.single};
  return out;
}

ResourceReport full_report(int rows, int cols, std::uint64_t robots, std::uint64_t layers) {
  if (layers == 0) throw std::invalid_argument("full_report: layers must be >= 1");
  ResourceReport r;
  r.rows = rows;
  r.cols = cols;
  r.robots = robots;
  r.edges = grid_edges(rows, cols);
  r.layers = layers;
  r.qubits = qubit_count(rows, cols, robots);
  r.phase = phase_separator_counts(r.qubits.decision);
  r.partial_mixer = partial_mixer_counts();
  r.work_qubits = r.partial_mixer.work_qubits;
  r.partial_mixer_count = robots * static_cast<std::uint64_t>(rows - 1) *
                          static_cast<std::uint64_t>(cols - 1);
  r.mixer = {r.partial_mixer_count * r.partial_mixer.total.cnot,
             r.partial_mixer_count * r.partial_mixer.total.single};
  r.per_layer = {r.phase.cnot + r.mixer.cnot, r.phase.rz + r.phase.single + r.mixer.single};
  r.all_layers = {layers * r.per_layer.cnot, layers * r.per_layer.single};
  r.methodology = {
      "decision qubits = robots * edges; ancilla = 8 per robot, reused across sub-grids",
      "phase separator: one RZ per linear term, 2 CNOT + 1 RZ per quadratic term",
      "(l+1)-qubit Toffoli = 4(l-2) three-qubit Toffolis with l-2 work qubits",
      "three-qubit Toffoli = 6 CNOT + 9 single-qubit gates",
      "logic per partial mixer: f1 one 5-qubit, f2 two 5-qubit, f3 four 3-qubit, f one "
      "7-qubit Toffoli; doubled for uncompute",
      "SBF body read off the mixer ladder: 8 H + 6 CNOT; its RZ becomes the controlled "
      "core of 2 CNOT + 2 RZ",
      "work qubits for the largest Toffoli are listed separately from the 8 ancillas",
  };
  return r;
}

ResourceReport full_report(const GridScenario& scenario, std::uint64_t layers) {
  return full_report(scenario.grid().rows(), scenario.grid().cols(), scenario.robots(),
                     layers);
}

std::string to_json(const ResourceReport& r) {
  using nlohmann::ordered_json;
  const auto gates = [](const GateCounts& g) {
    return ordered_json{{"cnot", g.cnot}, {"single", g.single}};
  };
  ordered_json j;
  j["grid"] = {{"rows", r.rows}, {"cols", r.cols}, {"edges", r.edges}};
  j["robots"] = r.robots;
  j["layers"] = r.layers;
  j["qubits"] = {{"decision", r.qubits.decision},
                 {"ancilla", r.qubits.ancilla},
                 {"total", r.qubits.total()},
                 {"toffoli_work", r.work_qubits}};
  j["phase_separator"] = {
      {"rz", r.phase.rz}, {"cnot", r.phase.cnot}, {"single", r.phase.single}};
  j["partial_mixer"] = {{"count", r.partial_mixer_count},
                        {"logic_toffolis", r.partial_mixer.logic_toffolis},
                        {"logic", gates(r.partial_mixer.logic)},
                        {"sbf_body", gates(r.partial_mixer.sbf_body)},
                        {"controlled_core", gates(r.partial_mixer.controlled_core)},
                        {"total", gates(r.partial_mixer.total)}};
  j["mixer_per_layer"] = gates(r.mixer);
  j["totals"] = {{"per_layer", {{"N_C", r.per_layer.cnot}, {"N_S", r.per_layer.single}}},
                 {"all_layers", {{"N_C", r.all_layers.cnot}, {"N_S", r.all_layers.single}}}};
  j["methodology"] = r.methodology;
  return j.dump(2) + "\n";
}

std::string to_table(const ResourceReport& r) {
  std::ostringstream os;
  const auto row = [&os](const std::string& label, std::uint64_t value) {
    os << "  " << std::left << std::setw(34) << label << std::right << std::setw(10) << value
       << "\n";
  };
  os << "grid " << r.rows << "x" << r.cols << ", robots " << r.robots << ", layers "
     << r.layers << "\n";
  row("decision qubits", r.qubits.decision);
  row("ancilla qubits", r.qubits.ancilla);
  row("total qubits", r.qubits.total());
  row("toffoli work qubits", r.work_qubits);
  row("phase RZ (linear)", r.phase.rz);
  row("phase CNOT (quadratic)", r.phase.cnot);
  row("phase single (quadratic)", r.phase.single);
  row("partial mixers per layer", r.partial_mixer_count);
  row("partial mixer CNOT", r.partial_mixer.total.cnot);
  row("partial mixer single", r.partial_mixer.total.single);
  row("N_C per layer", r.per_layer.cnot);
  row("N_S per layer", r.per_layer.single);
  row("N_C all layers", r.all_layers.cnot);
  row("N_S all layers", r.all_layers.single);
  return os.str();
}

}  // namespace covplan
