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

#include "covplan/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "covplan/sbf.hpp"

namespace covplan {

// ---------------------------------------------------------------------------
// DFS oracle
// ---------------------------------------------------------------------------

std::vector<EdgeSet> enumerate_simple_paths(const Grid& grid, Node source, Node dest,
                                            std::size_t max_paths) {
  if (!grid.contains(source) || !grid.contains(dest)) {
    throw std::invalid_argument("enumerate_simple_paths: endpoint outside grid");
  }
  std::vector<EdgeSet> out;
  if (source == dest) {
    out.push_back(grid.empty_edge_set());
    return out;
  }
  std::vector<bool> visited(grid.node_count(), false);
  EdgeSet bits = grid.empty_edge_set();

  // Explicit stack of (node, next neighbour direction to try).
  struct Frame {
    Node node;
    int dir;
    EdgeIndex via;
  };
  static constexpr int kDr[] = {-1, 0, 1, 0};
  static constexpr int kDc[] = {0, 1, 0, -1};
  std::vector<Frame> stack{{source, 0, 0}};
  visited[grid.node_id(source)] = true;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.node == dest || top.dir == 4) {
      if (top.node == dest) {
        out.push_back(bits);
        if (out.size() > max_paths) {
          throw BudgetExceeded("enumerate_simple_paths: more than " +
                               std::to_string(max_paths) + " paths from " +
                               to_string(source) + " to " + to_string(dest));
        }
      }
      visited[grid.node_id(top.node)] = false;
      if (stack.size() > 1) bits.flip(top.via);
      stack.pop_back();
      continue;
    }
    const Node next{top.node.row + kDr[top.dir], top.node.col + kDc[top.dir]};
    ++top.dir;
    if (!grid.contains(next) || visited[grid.node_id(next)]) continue;
    const EdgeIndex e = grid.edge_index(top.node, next);
    bits.flip(e);
    visited[grid.node_id(next)] = true;
    stack.push_back({next, 0, e});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct PathSummary {
  double weight = 0.0;
  double length = 0.0;
  // (node id, degree contribution) for nodes the path touches.
  std::vector<std::pair<std::uint32_t, std::int8_t>> touches;
};

PathSummary summarize(const GridScenario& scenario, const EdgeSet& bits) {
  const Grid& grid = scenario.grid();
  PathSummary s;
  std::vector<std::int8_t> deg(grid.node_count(), 0);
  for (EdgeIndex e : bits.active()) {
    s.weight += scenario.weight(e);
    s.length += scenario.length(e);
    auto [a, b] = grid.edge_nodes(e);
    ++deg[grid.node_id(a)];
    ++deg[grid.node_id(b)];
  }
  for (std::size_t id = 0; id < deg.size(); ++id) {
    if (deg[id] != 0) s.touches.emplace_back(static_cast<std::uint32_t>(id), deg[id]);
  }
  return s;
}

struct ChunkResult {
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> choice;
  std::vector<HistorySample> improvements;
  std::size_t evaluations = 0;
};

class JointSearch {
 public:
  JointSearch(const GridScenario& scenario,
              const std::vector<std::vector<PathSummary>>& summaries)
      : scenario_(scenario), summaries_(summaries) {
    const std::size_t nodes = scenario.grid().node_count();
    target_.resize(nodes);
    for (std::size_t id = 0; id < nodes; ++id) target_[id] = scenario.target_degree(id);
    stride_.assign(summaries.size(), 1);
    for (std::size_t r = summaries.size(); r-- > 1;) {
      stride_[r - 1] = stride_[r] * summaries[r].size();
    }
  }

  ChunkResult run(std::size_t first_begin, std::size_t first_end) const {
    ChunkResult out;
    std::vector<int> degree(target_.size(), 0);
    std::vector<std::size_t> choice(summaries_.size(), 0);
    std::vector<double> lengths(summaries_.size(), 0.0);
    for (std::size_t i = first_begin; i < first_end; ++i) {
      choice[0] = i;
      descend(0, 0.0, degree, choice, lengths, out);
    }
    return out;
  }

 private:
  void descend(std::size_t robot, double weight_sum, std::vector<int>& degree,
               std::vector<std::size_t>& choice, std::vector<double>& lengths,
               ChunkResult& out) const {
    const auto apply = [&](const PathSummary& p, int sign) {
      for (auto [id, d] : p.touches) degree[id] += sign * d;
    };
    const auto leaf = [&](double c1) {
      double c2 = 0.0;
      for (std::size_t r = 0; r + 1 < lengths.size(); ++r) {
        const double diff = lengths[r] - lengths[r + 1];
        c2 += diff * diff;
      }
      double c3 = 0.0;
      for (std::size_t id = 0; id < degree.size(); ++id) {
        const double diff = degree[id] - target_[id];
        c3 += diff * diff;
      }
      return weighted_total(scenario_, c1, c2, c3);
    };

    const std::size_t begin = robot == 0 ? choice[0] : 0;
    const std::size_t end = robot == 0 ? choice[0] + 1 : summaries_[robot].size();
    for (std::size_t i = begin; i < end; ++i) {
      const PathSummary& p = summaries_[robot][i];
      choice[robot] = i;
      lengths[robot] = p.length;
      apply(p, +1);
      if (robot + 1 == summaries_.size()) {
        const double total = leaf(weight_sum + p.weight);
        ++out.evaluations;
        if (total < out.best) {
          out.best = total;
          out.choice = choice;
          std::size_t ordinal = 0;
          for (std::size_t r = 0; r < choice.size(); ++r) ordinal += choice[r] * stride_[r];
          out.improvements.push_back({ordinal, total});
        }
      } else {
        descend(robot + 1, weight_sum + p.weight, degree, choice, lengths, out);
      }
      apply(p, -1);
    }
  }

  const GridScenario& scenario_;
  const std::vector<std::vector<PathSummary>>& summaries_;
  std::vector<int> target_;
  std::vector<std::size_t> stride_;
};

}  // namespace

SolverResult dfs_solve(const GridScenario& scenario, const DfsOptions& options) {
  const std::size_t robots = scenario.robots();
  std::vector<std::vector<EdgeSet>> paths(robots);
  std::vector<std::vector<PathSummary>> summaries(robots);
  long double combos = 1.0L;
  for (std::size_t r = 0; r < robots; ++r) {
    const auto& ep = scenario.endpoints(r);
    paths[r] = enumerate_simple_paths(scenario.grid(), ep.source, ep.dest,
                                      options.max_paths_per_robot);
    if (paths[r].empty()) {
      throw InfeasibleScenario("robot " + std::to_string(r) + " has no valid path");
    }
    combos *= static_cast<long double>(paths[r].size());
    summaries[r].reserve(paths[r].size());
    for (const auto& p : paths[r]) summaries[r].push_back(summarize(scenario, p));
  }
  if (combos > static_cast<long double>(options.max_combinations)) {
    throw BudgetExceeded("dfs_solve: " + std::to_string(static_cast<double>(combos)) +
                         " joint combinations exceed the budget of " +
                         std::to_string(options.max_combinations));
  }

  JointSearch search(scenario, summaries);

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1U, std::thread::hardware_concurrency());
  const std::size_t first = summaries[0].size();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, first));
  std::vector<std::future<ChunkResult>> futures;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = first * t / threads;
    const std::size_t end = first * (t + 1) / threads;
    futures.push_back(std::async(std::launch::async,
                                 [&search, begin, end] { return search.run(begin, end); }));
  }

  ChunkResult best;
  std::vector<HistorySample> improvements;
  std::size_t evaluations = 0;
  for (auto& f : futures) {
    ChunkResult chunk = f.get();
    evaluations += chunk.evaluations;
    improvements.insert(improvements.end(), chunk.improvements.begin(),
                        chunk.improvements.end());
    // Chunks arrive in enumeration order, so strict < keeps the earliest
    // (lexicographically smallest) joint state among equal costs.
    if (chunk.best < best.best) best = std::move(chunk);
  }

  SolverResult result;
  result.solver = "dfs";
  result.evaluations = evaluations;
  std::vector<EdgeSet> chosen;
  for (std::size_t r = 0; r < robots; ++r) chosen.push_back(paths[r][best.choice[r]]);
  result.best_state = PathState(std::move(chosen));
  result.best_cost = cost_total(result.best_state, scenario);

  std::sort(improvements.begin(), improvements.end(),
            [](const HistorySample& a, const HistorySample& b) {
              return a.iteration < b.iteration;
            });
  double running = std::numeric_limits<double>::infinity();
  for (const auto& s : improvements) {
    if (s.cost < running) {
      running = s.cost;
      result.history.push_back(s);
    }
  }
  result.raw_history = result.history;
  return result;
}

// ---------------------------------------------------------------------------
// Simulated annealing
// ---------------------------------------------------------------------------

void AnnealSchedule::validate() const {
  if (!(t_initial > 0.0) || !std::isfinite(t_initial)) {
    throw std::invalid_argument("AnnealSchedule: t_initial must be positive");
  }
  if (!(t_final > 0.0) || !(t_final < t_initial)) {
    throw std::invalid_argument("AnnealSchedule: need 0 < t_final < t_initial");
  }
  if (!(decay > 0.0 && decay < 1.0)) {
    throw std::invalid_argument("AnnealSchedule: decay must lie in (0, 1)");
  }
  if (steps_per_temperature == 0) {
    throw std::invalid_argument("AnnealSchedule: steps_per_temperature must be positive");
  }
}

AnnealSchedule default_schedule(const GridScenario& scenario) {
  AnnealSchedule s;
  const std::size_t cells =
      has_subgrids(scenario.grid())
          ? static_cast<std::size_t>(scenario.grid().rows() - 1) *
                static_cast<std::size_t>(scenario.grid().cols() - 1)
          : 1;
  s.steps_per_temperature = 50 * cells * scenario.robots();
  return s;
}

bool metropolis_accept(double delta, double temperature, double uniform01) noexcept {
  if (delta <= 0.0) return true;
  return uniform01 < std::exp(-delta / temperature);
}

SolverResult sa_solve(const GridScenario& scenario, const AnnealSchedule& schedule,
                      std::uint64_t seed) {
  schedule.validate();
  SolverResult result;
  result.solver = "sa";
  result.seed = seed;

  CostTracker tracker(scenario, initial_state(scenario));
  result.best_state = tracker.state();
  double best_total = tracker.total();
  ++result.evaluations;
  result.history.push_back({0, best_total});
  result.raw_history.push_back({0, best_total});

  if (!has_subgrids(scenario.grid())) {
    result.best_cost = cost_total(result.best_state, scenario);
    return result;
  }
  const auto subs = enumerate_subgrids(scenario);
  const std::size_t pairs = subs.size() * scenario.robots();
  const std::size_t max_draws = 10 * pairs;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pairs - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::size_t iteration = 0;
  bool frozen = false;
  for (double t = schedule.t_initial; t > schedule.t_final && !frozen;
       t *= schedule.decay) {
    for (std::size_t step = 0; step < schedule.steps_per_temperature; ++step) {
      std::size_t robot = 0;
      const SubGrid* sub = nullptr;
      for (std::size_t draw = 0; draw < max_draws; ++draw) {
        const std::size_t k = pick(rng);
        robot = k / subs.size();
        if (sbf_allowed(tracker.state().robot(robot), subs[k % subs.size()])) {
          sub = &subs[k % subs.size()];
          break;
        }
      }
      if (sub == nullptr) {
        frozen = true;
        break;
      }
      const double before = tracker.total();
      tracker.flip_all(robot, sub->inner);
      const double delta = tracker.total() - before;
      ++result.evaluations;
      ++iteration;
      if (!metropolis_accept(delta, t, unit(rng))) {
        tracker.flip_all(robot, sub->inner);
      }
      assert(is_feasible(scenario, tracker.state()));
      if (tracker.total() < best_total) {
        best_total = tracker.total();
        result.best_state = tracker.state();
      }
    }
    result.history.push_back({iteration, best_total});
    result.raw_history.push_back({iteration, tracker.total()});
  }
  result.best_cost = cost_total(result.best_state, scenario);
  return result;
}

SolverResult sa_solve_restarts(const GridScenario& scenario,
                               const AnnealSchedule& schedule, std::uint64_t seed,
                               std::size_t restarts) {
  if (restarts == 0) throw std::invalid_argument("sa_solve_restarts: restarts must be >= 1");
  std::vector<std::future<SolverResult>> runs;
  runs.reserve(restarts);
  for (std::size_t k = 0; k < restarts; ++k) {
    runs.push_back(std::async(std::launch::async, [&scenario, &schedule, seed, k] {
      return sa_solve(scenario, schedule, seed + k);
    }));
  }
  SolverResult best;
  bool have = false;
  for (auto& f : runs) {
    SolverResult r = f.get();
    if (!have || r.best_cost.total < best.best_cost.total) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Genetic algorithm (mutation only)
// ---------------------------------------------------------------------------

SolverResult ga_solve(const GridScenario& scenario, std::size_t population_size,
                      std::size_t generations, std::uint64_t seed) {
  if (population_size == 0) {
    throw std::invalid_argument("ga_solve: population_size must be >= 1");
  }
  SolverResult result;
  result.solver = "ga";
  result.seed = seed;

  struct Individual {
    PathState state;
    double total;
  };
  const auto by_cost = [](const Individual& a, const Individual& b) {
    if (a.total != b.total) return a.total < b.total;
    return a.state < b.state;
  };

  std::vector<Individual> population;
  {
    PathState start = initial_state(scenario);
    const double total = cost_total(start, scenario).total;
    population.push_back({std::move(start), total});
    ++result.evaluations;
  }
  result.history.push_back({0, population.front().total});
  result.raw_history.push_back({0, population.front().total});

  const std::vector<SubGrid> subs =
      has_subgrids(scenario.grid()) ? enumerate_subgrids(scenario) : std::vector<SubGrid>{};

  for (std::size_t gen = 1; gen <= generations; ++gen) {
    std::unordered_set<std::string> seen;
    for (const auto& ind : population) seen.insert(ind.state.to_string());
    std::vector<Individual> next = population;
    for (const auto& parent : population) {
      for (std::size_t r = 0; r < scenario.robots(); ++r) {
        for (const auto& sub : subs) {
          if (!sbf_allowed(parent.state.robot(r), sub)) continue;
          PathState child = parent.state;
          flip_inner(child.robot(r), sub);
          assert(is_feasible(scenario, child));
          if (!seen.insert(child.to_string()).second) continue;
          const double total = cost_total(child, scenario).total;
          ++result.evaluations;
          next.push_back({std::move(child), total});
        }
      }
    }
    std::sort(next.begin(), next.end(), by_cost);
    if (next.size() > population_size) next.resize(population_size);
    population = std::move(next);
    result.history.push_back({gen, population.front().total});
    double mean = 0.0;
    for (const auto& ind : population) mean += ind.total;
    result.raw_history.push_back({gen, mean / static_cast<double>(population.size())});
  }

  result.best_state = population.front().state;
  result.best_cost = cost_total(result.best_state, scenario);
  return result;
}

}  // namespace covplan
