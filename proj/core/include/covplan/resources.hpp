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

/// Closed-form qubit and gate counts for the constrained-mixer QAOA circuit.
/// Nothing here builds a circuit; every number is a formula evaluation.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covplan/scenario.hpp"

namespace covplan {

struct QubitCount {
  std::uint64_t decision = 0;
  std::uint64_t ancilla = 0;

  [[nodiscard]] std::uint64_t total() const noexcept { return decision + ancilla; }
  friend bool operator==(const QubitCount&, const QubitCount&) = default;
};

struct PhaseCounts {
  std::uint64_t rz = 0;      // linear terms, one RZ each
  std::uint64_t cnot = 0;    // quadratic terms, two CNOT each
  std::uint64_t single = 0;  // quadratic terms, one RZ each

  friend bool operator==(const PhaseCounts&, const PhaseCounts&) = default;
};

struct ToffoliSplit {
  std::uint64_t toffolis = 0;  // 3-qubit Toffoli gates
  std::uint64_t work = 0;      // work qubits

  friend bool operator==(const ToffoliSplit&, const ToffoliSplit&) = default;
};

struct GateCounts {
  std::uint64_t cnot = 0;
  std::uint64_t single = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct PartialMixerBreakdown {
  std::uint64_t logic_toffolis = 0;  // before compute/uncompute doubling
  GateCounts logic;                  // doubled
  GateCounts sbf_body;
  GateCounts controlled_core;
  GateCounts total;
  std::uint64_t work_qubits = 0;     // largest Toffoli work-qubit need

  friend bool operator==(const PartialMixerBreakdown&,
                         const PartialMixerBreakdown&) = default;
};

struct ResourceReport {
  int rows = 0;
  int cols = 0;
  std::uint64_t robots = 0;
  std::uint64_t edges = 0;
  std::uint64_t layers = 0;
  QubitCount qubits;
  std::uint64_t work_qubits = 0;
  std::uint64_t partial_mixer_count = 0;
  PhaseCounts phase;
  PartialMixerBreakdown partial_mixer;
  GateCounts mixer;           // per layer
  GateCounts per_layer;       // phase + mixer
  GateCounts all_layers;      // per_layer * layers
  std::vector<std::string> methodology;

  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

/// (r * E, 8 * r).
[[nodiscard]] QubitCount qubit_count(const GridScenario& scenario);
[[nodiscard]] QubitCount qubit_count(int rows, int cols, std::uint64_t robots);

/// (re, re(re+1), re(re+1)/2) for re = robots * edges.
[[nodiscard]] PhaseCounts phase_separator_counts(std::uint64_t decision_qubits);

/// An (l+1)-qubit Toffoli as (4(l-2), l-2) 3-qubit Toffolis and work qubits.
/// `gate_qubits` is l+1; a 3-qubit gate is (1, 0). Throws
/// std::invalid_argument below 3 qubits.
[[nodiscard]] ToffoliSplit toffoli_decomposition(std::uint64_t gate_qubits);

[[nodiscard]] PartialMixerBreakdown partial_mixer_counts();

/// Throws std::invalid_argument for layers == 0.
[[nodiscard]] ResourceReport full_report(const GridScenario& scenario, std::uint64_t layers);
[[nodiscard]] ResourceReport full_report(int rows, int cols, std::uint64_t robots,
                                         std::uint64_t layers);

/// Stable, pretty-printed JSON.
[[nodiscard]] std::string to_json(const ResourceReport& report);
/// Fixed-width table for terminals.
[[nodiscard]] std::string to_table(const ResourceReport& report);

}  // namespace covplan
