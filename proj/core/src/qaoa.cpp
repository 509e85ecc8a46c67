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

#include "covplan/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "covplan/solvers.hpp"

namespace covplan {

QuantumState::QuantumState(std::size_t qubits)
    : qubits_(qubits), amps_(std::size_t{1} << qubits, Amplitude{0.0, 0.0}) {
  amps_[0] = 1.0;
}

double QuantumState::norm() const noexcept {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

std::vector<double> QuantumState::probabilities() const {
  std::vector<double> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) out[i] = std::norm(amps_[i]);
  return out;
}

void QaoaParams::validate() const {
  if (betas.size() != gammas.size()) {
    throw std::invalid_argument("QaoaParams: " + std::to_string(betas.size()) +
                                " betas but " + std::to_string(gammas.size()) + " gammas");
  }
}

QaoaSimulator::QaoaSimulator(const GridScenario& scenario, std::size_t max_qubits)
    : scenario_(&scenario), qubits_(scenario.robots() * scenario.edge_count()) {
  if (qubits_ > max_qubits) {
    throw BudgetExceeded("qaoa: " + std::to_string(qubits_) +
                         " decision qubits exceed the limit of " +
                         std::to_string(max_qubits));
  }
  const Grid& grid = scenario.grid();
  const std::size_t edges = scenario.edge_count();
  const std::size_t robots = scenario.robots();

  if (has_subgrids(grid)) subs_ = enumerate_subgrids(grid);
  for (std::size_t r = 0; r < robots; ++r) {
    for (const auto& sub : subs_) {
      MixerTerm term;
      std::vector<EdgeIndex> local(sub.inner.begin(), sub.inner.end());
      for (const auto& out : sub.outside) local.insert(local.end(), out.begin(), out.end());
      for (EdgeIndex e : sub.inner) term.flip_mask |= std::uint64_t{1} << (r * edges + e);
      for (EdgeIndex e : local) term.local.push_back(static_cast<unsigned>(r * edges + e));
      term.allowed.resize(std::size_t{1} << local.size());
      EdgeSet bits(edges);
      for (std::size_t pattern = 0; pattern < term.allowed.size(); ++pattern) {
        bits.reset();
        for (std::size_t k = 0; k < local.size(); ++k) {
          if ((pattern >> k) & 1U) bits.set(local[k]);
        }
        term.allowed[pattern] = sbf_allowed(bits, sub);
      }
      terms_.push_back(std::move(term));
    }
  }

  // Diagonal cost, evaluated straight from the index bits.
  std::vector<std::pair<std::size_t, std::size_t>> ends(edges);
  for (EdgeIndex e = 0; e < edges; ++e) {
    auto [a, b] = grid.edge_nodes(e);
    ends[e] = {grid.node_id(a), grid.node_id(b)};
  }
  std::vector<int> target(grid.node_count());
  for (std::size_t id = 0; id < target.size(); ++id) target[id] = scenario.target_degree(id);
  const std::uint64_t edge_mask =
      edges >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges) - 1;

  costs_.resize(std::size_t{1} << qubits_);
  std::vector<int> degree(grid.node_count());
  std::vector<double> length(robots);
  for (std::uint64_t x = 0; x < costs_.size(); ++x) {
    std::fill(degree.begin(), degree.end(), 0);
    double c1 = 0.0;
    for (std::size_t r = 0; r < robots; ++r) {
      length[r] = 0.0;
      for (std::uint64_t bits = (x >> (r * edges)) & edge_mask; bits != 0; bits &= bits - 1) {
        const auto e = static_cast<EdgeIndex>(__builtin_ctzll(bits));
        c1 += scenario.weight(e);
        length[r] += scenario.length(e);
        ++degree[ends[e].first];
        ++degree[ends[e].second];
      }
    }
    double c2 = 0.0;
    for (std::size_t r = 0; r + 1 < robots; ++r) {
      const double d = length[r] - length[r + 1];
      c2 += d * d;
    }
    double c3 = 0.0;
    for (std::size_t id = 0; id < degree.size(); ++id) {
      const double d = degree[id] - target[id];
      c3 += d * d;
    }
    costs_[x] = weighted_total(scenario, c1, c2, c3);
  }

  for (std::size_t r = 0; r < robots; ++r) {
    const auto& ep = scenario.endpoints(r);
    std::vector<std::uint64_t> slices;
    for (const auto& p : enumerate_simple_paths(grid, ep.source, ep.dest,
                                                std::size_t{1} << edges)) {
      slices.push_back(p.to_u64());
    }
    std::sort(slices.begin(), slices.end());
    valid_slices_.push_back(std::move(slices));
  }
}

std::uint32_t QaoaSimulator::gather(std::uint64_t index,
                                    const MixerTerm& term) const noexcept {
  std::uint32_t out = 0;
  for (std::size_t k = 0; k < term.local.size(); ++k) {
    out |= static_cast<std::uint32_t>((index >> term.local[k]) & 1U) << k;
  }
  return out;
}

QuantumState QaoaSimulator::initial_state(const std::vector<PathState>& population) const {
  if (population.empty()) {
    throw std::invalid_argument("qaoa initial_state: empty population");
  }
  std::set<std::uint64_t> members;
  for (const auto& p : population) {
    if (!p.matches(*scenario_) || !is_feasible(*scenario_, p)) {
      throw std::invalid_argument("qaoa initial_state: infeasible member " + p.to_string());
    }
    members.insert(p.to_basis_index());
  }
  QuantumState state(qubits_);
  state.amplitudes()[0] = 0.0;
  const double amp = 1.0 / std::sqrt(static_cast<double>(members.size()));
  for (std::uint64_t x : members) state.amplitudes()[x] = amp;
  return state;
}

QuantumState QaoaSimulator::initial_state() const {
  return initial_state({covplan::initial_state(*scenario_)});
}

void QaoaSimulator::apply_sbf_mixer(QuantumState& state, const SubGrid& sub,
                                    std::size_t robot, double beta) const {
  std::uint64_t mask = 0;
  for (EdgeIndex e : sub.inner) {
    mask |= std::uint64_t{1} << (robot * scenario_->edge_count() + e);
  }
  const double c = std::cos(beta / 2);
  const Amplitude is{0.0, std::sin(beta / 2)};
  auto& a = state.amplitudes();
  for (std::uint64_t x = 0; x < a.size(); ++x) {
    const std::uint64_t y = x ^ mask;
    if (y < x) continue;
    const Amplitude ax = a[x];
    const Amplitude ay = a[y];
    a[x] = c * ax - is * ay;
    a[y] = c * ay - is * ax;
  }
}

void QaoaSimulator::apply_partial_mixer(QuantumState& state, std::size_t sub_index,
                                        std::size_t robot, double beta) const {
  const MixerTerm& term = terms_.at(robot * subs_.size() + sub_index);
  const double c = std::cos(beta / 2);
  const Amplitude is{0.0, std::sin(beta / 2)};
  auto& a = state.amplitudes();
  for (std::uint64_t x = 0; x < a.size(); ++x) {
    const std::uint64_t y = x ^ term.flip_mask;
    if (y < x) continue;
    const std::uint32_t local = gather(x, term);
    // Inner bits sit in the low four local positions.
    if (!term.allowed[local] || !term.allowed[local ^ 0xFU]) continue;
    const Amplitude ax = a[x];
    const Amplitude ay = a[y];
    a[x] = c * ax - is * ay;
    a[y] = c * ay - is * ax;
  }
}

void QaoaSimulator::apply_full_mixer(QuantumState& state, double beta) const {
  for (std::size_t r = 0; r < scenario_->robots(); ++r) {
    for (std::size_t k = 0; k < subs_.size(); ++k) apply_partial_mixer(state, k, r, beta);
  }
}

void QaoaSimulator::apply_phase_separator(QuantumState& state, double gamma) const {
  auto& a = state.amplitudes();
  for (std::size_t x = 0; x < a.size(); ++x) {
    a[x] *= std::polar(1.0, -gamma * costs_[x]);
  }
}

double QaoaSimulator::expectation(const QuantumState& state) const {
  if (state.dimension() != costs_.size()) {
    throw std::invalid_argument("qaoa expectation: state dimension mismatch");
  }
  double total = 0.0;
  double mass = 0.0;
  const auto& a = state.amplitudes();
  for (std::size_t x = 0; x < a.size(); ++x) {
    const double p = std::norm(a[x]);
    mass += p;
    total += p * costs_[x];
  }
  if (std::abs(std::sqrt(mass) - 1.0) > 1e-6) {
    throw std::runtime_error("qaoa expectation: state norm " + std::to_string(std::sqrt(mass)));
  }
  return total;
}

QaoaRun QaoaSimulator::run(const QaoaParams& params,
                           const std::vector<PathState>& population) const {
  params.validate();
  QaoaRun out{initial_state(population), 0.0};
  for (std::size_t l = 0; l < params.layers(); ++l) {
    apply_phase_separator(out.state, params.gammas[l]);
    apply_full_mixer(out.state, params.betas[l]);
  }
  out.expectation = expectation(out.state);
  return out;
}

QaoaRun QaoaSimulator::run(const QaoaParams& params) const {
  return run(params, {covplan::initial_state(*scenario_)});
}

bool QaoaSimulator::is_feasible_index(std::uint64_t index) const {
  const std::size_t edges = scenario_->edge_count();
  const std::uint64_t mask = (std::uint64_t{1} << edges) - 1;
  for (std::size_t r = 0; r < valid_slices_.size(); ++r) {
    const std::uint64_t slice = (index >> (r * edges)) & mask;
    if (!std::binary_search(valid_slices_[r].begin(), valid_slices_[r].end(), slice)) {
      return false;
    }
  }
  return true;
}

double QaoaSimulator::infeasible_mass(const QuantumState& state) const {
  double mass = 0.0;
  const auto& a = state.amplitudes();
  for (std::uint64_t x = 0; x < a.size(); ++x) {
    if (a[x] != Amplitude{} && !is_feasible_index(x)) mass += std::norm(a[x]);
  }
  return mass;
}

namespace {

QaoaParams unpack(const std::vector<double>& flat) {
  const std::size_t p = flat.size() / 2;
  return {std::vector<double>(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p)),
          std::vector<double>(flat.begin() + static_cast<std::ptrdiff_t>(p), flat.end())};
}

std::vector<double> pack(const QaoaParams& params) {
  std::vector<double> flat = params.betas;
  flat.insert(flat.end(), params.gammas.begin(), params.gammas.end());
  return flat;
}

class Objective {
 public:
  Objective(const QaoaSimulator& sim, const std::vector<PathState>& population)
      : sim_(sim), start_(sim.initial_state(population)) {}

  double operator()(const std::vector<double>& flat) const {
    QuantumState state = start_;
    const QaoaParams params = unpack(flat);
    for (std::size_t l = 0; l < params.layers(); ++l) {
      sim_.apply_phase_separator(state, params.gammas[l]);
      sim_.apply_full_mixer(state, params.betas[l]);
    }
    const double value = sim_.expectation(state);
    if (!std::isfinite(value)) throw std::runtime_error("qaoa: non-finite expectation");
    return value;
  }

  std::vector<double> gradient(const std::vector<double>& flat, double shift) const {
    std::vector<double> g(flat.size());
    std::vector<double> probe = flat;
    for (std::size_t k = 0; k < flat.size(); ++k) {
      probe[k] = flat[k] + shift;
      const double up = (*this)(probe);
      probe[k] = flat[k] - shift;
      const double down = (*this)(probe);
      probe[k] = flat[k];
      g[k] = (up - down) / (2.0 * shift);
    }
    return g;
  }

 private:
  const QaoaSimulator& sim_;
  QuantumState start_;
};

struct StartResult {
  std::vector<double> best;
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> history;
};

StartResult descend(const Objective& f, std::vector<double> x, const OptimizerConfig& cfg) {
  StartResult out;
  out.best = x;
  out.best_value = f(x);
  std::vector<double> velocity(x.size(), 0.0);
  std::vector<double> look(x.size());
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    for (std::size_t k = 0; k < x.size(); ++k) look[k] = x[k] - cfg.momentum * velocity[k];
    const std::vector<double> g = f.gradient(look, cfg.fd_shift);
    for (std::size_t k = 0; k < x.size(); ++k) {
      velocity[k] = cfg.momentum * velocity[k] + cfg.step_size * g[k];
      x[k] -= velocity[k];
    }
    const double value = f(x);
    out.history.push_back(value);
    if (value < out.best_value) {
      out.best_value = value;
      out.best = x;
    }
  }
  return out;
}

}  // namespace

std::vector<double> gradient(const QaoaSimulator& sim, const QaoaParams& params,
                             const std::vector<PathState>& population, double shift) {
  params.validate();
  return Objective(sim, population).gradient(pack(params), shift);
}

OptimizeResult optimize(const QaoaSimulator& sim, std::size_t layers,
                        const std::vector<PathState>& population,
                        const OptimizerConfig& config, std::uint64_t seed) {
  if (layers == 0) throw std::invalid_argument("qaoa optimize: layers must be >= 1");
  if (config.restarts == 0) throw std::invalid_argument("qaoa optimize: restarts must be >= 1");
  const Objective f(sim, population);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> starts;
  for (std::size_t k = 0; k < config.restarts; ++k) {
    std::vector<double> x(2 * layers);
    for (std::size_t l = 0; l < layers; ++l) {
      x[l] = 2.0 * std::numbers::pi * (static_cast<double>(k) + unit(rng)) /
             static_cast<double>(config.restarts);
    }
    for (std::size_t l = 0; l < layers; ++l) x[layers + l] = config.gamma_init_scale * unit(rng);
    starts.push_back(std::move(x));
  }

  std::vector<std::future<StartResult>> runs;
  for (const auto& x : starts) {
    runs.push_back(std::async(std::launch::async,
                              [&f, &config, x] { return descend(f, x, config); }));
  }
  OptimizeResult result;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < runs.size(); ++k) {
    StartResult r = runs[k].get();
    if (r.best_value < best) {
      best = r.best_value;
      result.params = unpack(r.best);
      result.expectation = r.best_value;
      result.history = std::move(r.history);
      result.restart = k;
    }
  }
  return result;
}

std::map<std::uint64_t, std::uint64_t> sample(const QuantumState& state, std::uint64_t shots,
                                              std::uint64_t seed) {
  const std::vector<double> probs = state.probabilities();
  std::discrete_distribution<std::uint64_t> pick(probs.begin(), probs.end());
  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) ++counts[pick(rng)];
  return counts;
}

std::uint64_t argmax_probability(const QuantumState& state) {
  const auto& a = state.amplitudes();
  std::uint64_t best = 0;
  double best_p = -1.0;
  for (std::uint64_t x = 0; x < a.size(); ++x) {
    const double p = std::norm(a[x]);
    if (p > best_p) {
      best_p = p;
      best = x;
    }
  }
  return best;
}

}  // namespace covplan
