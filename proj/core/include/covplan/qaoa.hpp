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

/// Dense statevector QAOA over the decision qubits x_{r,e}.
///
/// Basis index bit (r * E + e) carries x_{r,e}. Ancilla qubits of the
/// controlled mixer are not simulated: U^4N is applied as the block unitary
/// that rotates a pair (x, x~) only when the move is allowed at both ends.
/// One layer is the phase separator exp(-i gamma C) followed by the full
/// mixer (robots in order, sub-grids row-major).
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "covplan/scenario.hpp"
#include "covplan/sbf.hpp"

namespace covplan {

using Amplitude = std::complex<double>;

class QuantumState {
 public:
  QuantumState() = default;
  /// |0...0> on `qubits` qubits.
  explicit QuantumState(std::size_t qubits);

  [[nodiscard]] std::size_t qubits() const noexcept { return qubits_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
  [[nodiscard]] std::vector<Amplitude>& amplitudes() noexcept { return amps_; }
  [[nodiscard]] const std::vector<Amplitude>& amplitudes() const noexcept {
    return amps_;
  }
  [[nodiscard]] Amplitude operator[](std::uint64_t index) const { return amps_.at(index); }

  [[nodiscard]] double norm() const noexcept;
  [[nodiscard]] std::vector<double> probabilities() const;

 private:
  std::size_t qubits_ = 0;
  std::vector<Amplitude> amps_;
};

struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  [[nodiscard]] std::size_t layers() const noexcept { return betas.size(); }
  /// Throws std::invalid_argument when the angle lists differ in length.
  void validate() const;

  friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

struct QaoaRun {
  QuantumState state;
  double expectation = 0.0;
};

class QaoaSimulator {
 public:
  static constexpr std::size_t kDefaultMaxQubits = 24;

  /// Throws BudgetExceeded when robots * edges > max_qubits.
  explicit QaoaSimulator(const GridScenario& scenario,
                         std::size_t max_qubits = kDefaultMaxQubits);

  [[nodiscard]] const GridScenario& scenario() const noexcept { return *scenario_; }
  [[nodiscard]] std::size_t qubits() const noexcept { return qubits_; }
  [[nodiscard]] const std::vector<SubGrid>& subgrids() const noexcept { return subs_; }

  /// c(x) for every basis index.
  [[nodiscard]] const std::vector<double>& diagonal() const noexcept { return costs_; }

  /// Equal superposition over the distinct members. Throws
  /// std::invalid_argument for an empty population or an infeasible member.
  [[nodiscard]] QuantumState initial_state(const std::vector<PathState>& population) const;
  /// Basis state of the L-shaped heuristic paths.
  [[nodiscard]] QuantumState initial_state() const;

  /// Unconditioned exp(-i beta X_ab X_bc X_cd X_da / 2) on one robot's cell.
  void apply_sbf_mixer(QuantumState& state, const SubGrid& sub, std::size_t robot,
                       double beta) const;
  /// Controlled SBF mixer restricted to pairs allowed at both ends.
  void apply_partial_mixer(QuantumState& state, std::size_t sub_index, std::size_t robot,
                           double beta) const;
  void apply_full_mixer(QuantumState& state, double beta) const;
  void apply_phase_separator(QuantumState& state, double gamma) const;

  /// sum |a_x|^2 c(x). Throws std::runtime_error when the norm is off by
  /// more than 1e-6.
  [[nodiscard]] double expectation(const QuantumState& state) const;

  [[nodiscard]] QaoaRun run(const QaoaParams& params,
                            const std::vector<PathState>& population) const;
  [[nodiscard]] QaoaRun run(const QaoaParams& params) const;

  /// True iff every robot slice of `index` is a valid path.
  [[nodiscard]] bool is_feasible_index(std::uint64_t index) const;
  /// Probability mass on basis states failing is_feasible_index.
  [[nodiscard]] double infeasible_mass(const QuantumState& state) const;

 private:
  struct MixerTerm {
    std::uint64_t flip_mask = 0;             // inner-edge qubits
    std::vector<unsigned> local;             // qubit positions, inner first
    std::vector<bool> allowed;               // indexed by gathered local bits
  };

  [[nodiscard]] std::uint32_t gather(std::uint64_t index, const MixerTerm& term) const noexcept;

  const GridScenario* scenario_;
  std::size_t qubits_;
  std::vector<SubGrid> subs_;
  std::vector<MixerTerm> terms_;  // robot-major, then sub-grid
  std::vector<double> costs_;
  std::vector<std::vector<std::uint64_t>> valid_slices_;  // per robot, sorted
};

struct OptimizerConfig {
  std::size_t iterations = 100;
  double step_size = 0.1;
  double momentum = 0.9;
  double fd_shift = 1e-4;
  /// Independent starts; restart k draws its betas from the k-th of
  /// `restarts` equal slices of [0, 2 pi).
  std::size_t restarts = 8;
  double gamma_init_scale = 0.05;
};

struct OptimizeResult {
  QaoaParams params;
  double expectation = 0.0;
  /// Expectation at the iterate of every step of the winning start.
  std::vector<double> history;
  std::size_t restart = 0;
};

/// Central finite-difference gradient, ordered (betas..., gammas...).
[[nodiscard]] std::vector<double> gradient(const QaoaSimulator& sim,
                                           const QaoaParams& params,
                                           const std::vector<PathState>& population,
                                           double shift);

/// Nesterov-momentum descent on the expectation:
///   look = x - mu v;  v = mu v + eta grad(look);  x = x - v.
/// Keeps the best iterate. Throws std::runtime_error on a non-finite value.
[[nodiscard]] OptimizeResult optimize(const QaoaSimulator& sim, std::size_t layers,
                                      const std::vector<PathState>& population,
                                      const OptimizerConfig& config, std::uint64_t seed);

/// Multinomial measurement histogram, basis index -> count.
[[nodiscard]] std::map<std::uint64_t, std::uint64_t> sample(const QuantumState& state,
                                                            std::uint64_t shots,
                                                            std::uint64_t seed);

/// Index of the largest |a_x|^2; lowest index on ties.
[[nodiscard]] std::uint64_t argmax_probability(const QuantumState& state);

}  // namespace covplan
