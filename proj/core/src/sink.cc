// Copyright 2026 The sinkeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sinkeq/sink.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "sinkeq/error.h"

namespace sinkeq {
namespace {

constexpr int kMaxPowerSteps = 1'000'000;
constexpr double kPowerTolerance = 1e-12;

// Position of `state` in the sorted support, or -1.
std::ptrdiff_t LocalIndex(std::span<const ProfileIndex> support,
                          ProfileIndex state) {
  auto it = std::lower_bound(support.begin(), support.end(), state);
  if (it == support.end() || *it != state) return -1;
  return it - support.begin();
}

std::vector<double> DirectSolve(const TransitionKernel& kernel,
                                std::span<const ProfileIndex> support) {
  const auto m = static_cast<Eigen::Index>(support.size());
  // Balance equations (P^T - I) pi = 0, last one replaced by sum(pi) = 1.
  Eigen::MatrixXd system = -Eigen::MatrixXd::Identity(m, m);
  for (Eigen::Index col = 0; col < m; ++col) {
    for (const Transition& t : kernel.row(support[col])) {
      const std::ptrdiff_t row = LocalIndex(support, t.target);
      if (row < 0) {
        throw Error(ErrorCode::kInvalidParameters,
                    "support is not closed under the kernel");
      }
      system(row, col) += t.probability;
    }
  }
  system.row(m - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  rhs(m - 1) = 1.0;
  // Singularity shows up as a residual failure in the caller.
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  Eigen::VectorXd pi = lu.solve(rhs);
  // One step of iterative refinement.
  pi += lu.solve(rhs - system * pi);
  return std::vector<double>(pi.data(), pi.data() + m);
}

// Power iteration on the lazy chain (I + P) / 2, which has the same
// stationary distribution and is aperiodic.
std::vector<double> PowerSolve(const TransitionKernel& kernel,
                               std::span<const ProfileIndex> support) {
  const std::size_t m = support.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> local(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (const Transition& t : kernel.row(support[k])) {
      const std::ptrdiff_t j = LocalIndex(support, t.target);
      if (j < 0) {
        throw Error(ErrorCode::kInvalidParameters,
                    "support is not closed under the kernel");
      }
      local[k].emplace_back(static_cast<std::size_t>(j), t.probability);
    }
  }
  std::vector<double> pi(m, 1.0 / static_cast<double>(m));
  std::vector<double> next(m);
  for (int step = 0; step < kMaxPowerSteps; ++step) {
    for (std::size_t k = 0; k < m; ++k) next[k] = 0.5 * pi[k];
    for (std::size_t k = 0; k < m; ++k) {
      for (const auto& [j, p] : local[k]) next[j] += 0.5 * p * pi[k];
    }
    double change = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      change = std::max(change, std::abs(next[k] - pi[k]));
    }
    pi.swap(next);
    if (change < kPowerTolerance) return pi;
  }
  throw Error(ErrorCode::kNumericalFailure,
              "power iteration did not converge on a support of size " +
                  std::to_string(m));
}

}  // namespace

ComponentMap StronglyConnectedComponents(const TransitionKernel& kernel) {
  const ProfileIndex n = kernel.num_states();
  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited);
  std::vector<int> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<ProfileIndex> stack;
  // Call frames: (vertex, position of next edge to explore).
  std::vector<std::pair<ProfileIndex, std::size_t>> frames;

  ComponentMap result;
  result.component_of.assign(n, -1);
  int counter = 0;

  for (ProfileIndex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      const auto row = kernel.row(v);
      if (edge < row.size()) {
        const ProfileIndex w = row[edge++].target;
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      const ProfileIndex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const ProfileIndex parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        ProfileIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          result.component_of[w] = result.num_components;
        } while (w != done);
        ++result.num_components;
      }
    }
  }
  return result;
}

std::vector<std::vector<ProfileIndex>> SinkComponents(
    const TransitionKernel& kernel) {
  const ComponentMap scc = StronglyConnectedComponents(kernel);
  std::vector<char> has_exit(scc.num_components, 0);
  for (ProfileIndex a = 0; a < kernel.num_states(); ++a) {
    const int c = scc.component_of[a];
    for (const Transition& t : kernel.row(a)) {
      if (scc.component_of[t.target] != c) has_exit[c] = 1;
    }
  }
  // Visiting states in increasing order yields sorted supports, and the
  // sinks come out ordered by smallest element.
  std::vector<int> slot(scc.num_components, -1);
  std::vector<std::vector<ProfileIndex>> sinks;
  for (ProfileIndex a = 0; a < kernel.num_states(); ++a) {
    const int c = scc.component_of[a];
    if (has_exit[c]) continue;
    if (slot[c] < 0) {
      slot[c] = static_cast<int>(sinks.size());
      sinks.emplace_back();
    }
    sinks[slot[c]].push_back(a);
  }
  return sinks;
}

double StationaryResidual(const TransitionKernel& kernel,
                          std::span<const ProfileIndex> support,
                          std::span<const double> probabilities) {
  std::vector<long double> inflow(support.size(), 0.0L);
  for (std::size_t k = 0; k < support.size(); ++k) {
    for (const Transition& t : kernel.row(support[k])) {
      const std::ptrdiff_t j = LocalIndex(support, t.target);
      if (j < 0) return INFINITY;
      inflow[j] += static_cast<long double>(t.probability) * probabilities[k];
    }
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    worst = std::max(
        worst, static_cast<double>(std::abs(probabilities[k] - inflow[k])));
  }
  return worst;
}

std::vector<double> StationaryDistribution(
    const TransitionKernel& kernel, std::span<const ProfileIndex> support) {
  if (support.empty()) {
    throw Error(ErrorCode::kInvalidParameters, "empty support");
  }
  if (!std::is_sorted(support.begin(), support.end())) {
    throw Error(ErrorCode::kInvalidParameters, "support must be sorted");
  }
  if (support.size() == 1) {
    if (kernel.probability(support[0], support[0]) <= 0.0) {
      throw Error(ErrorCode::kInvalidParameters,
                  "support is not closed under the kernel");
    }
    return {1.0};
  }
  std::vector<double> pi = support.size() <= kDirectSolveLimit
                               ? DirectSolve(kernel, support)
                               : PowerSolve(kernel, support);
  long double total = 0.0L;
  for (double p : pi) total += p;
  for (double& p : pi) p = static_cast<double>(p / total);

  for (std::size_t k = 0; k < pi.size(); ++k) {
    if (!(pi[k] > 0.0)) {
      throw Error(ErrorCode::kNumericalFailure,
                  "stationary probability of state " +
                      std::to_string(support[k]) + " is not positive");
    }
  }
  const double residual = StationaryResidual(kernel, support, pi);
  if (!(residual <= kStationaryTolerance)) {
    throw Error(ErrorCode::kNumericalFailure,
                "stationary residual " + std::to_string(residual) +
                    " exceeds tolerance");
  }
  return pi;
}

std::vector<SinkEquilibrium> SinkEquilibria(const NormalFormGame& game,
                                            const TransitionKernel& kernel) {
  std::vector<SinkEquilibrium> equilibria;
  for (auto& support : SinkComponents(kernel)) {
    SinkEquilibrium eq;
    eq.probabilities = StationaryDistribution(kernel, support);
    eq.residual = StationaryResidual(kernel, support, eq.probabilities);
    long double welfare = 0.0L;
    for (std::size_t k = 0; k < support.size(); ++k) {
      welfare += static_cast<long double>(eq.probabilities[k]) *
                 game.welfare(support[k]);
    }
    eq.expected_welfare = static_cast<double>(welfare);
    eq.support = std::move(support);
    equilibria.push_back(std::move(eq));
  }
  return equilibria;
}

std::vector<SinkEquilibrium> SinkEquilibria(const NormalFormGame& game,
                                            ResponseMode mode,
                                            double tie_tol) {
  return SinkEquilibria(game, BuildKernel(game, mode, tie_tol));
}

SinkingResult PriceOfSinking(const NormalFormGame& game,
                             const TransitionKernel& kernel) {
  const Optimum opt = OptimalProfile(game);
  if (opt.welfare <= 0.0) {
    throw Error(ErrorCode::kDegenerateWelfare,
                "optimal welfare is zero; price of sinking is undefined");
  }
  SinkingResult result;
  result.equilibria = SinkEquilibria(game, kernel);
  std::size_t worst = 0;
  for (std::size_t k = 1; k < result.equilibria.size(); ++k) {
    if (result.equilibria[k].expected_welfare <
        result.equilibria[worst].expected_welfare) {
      worst = k;
    }
  }
  result.worst = result.equilibria[worst];
  result.ratio =
      std::min(1.0, result.equilibria[worst].expected_welfare / opt.welfare);
  return result;
}

SinkingResult PriceOfSinking(const NormalFormGame& game, ResponseMode mode,
                             double tie_tol) {
  return PriceOfSinking(game, BuildKernel(game, mode, tie_tol));
}

}  // namespace sinkeq
