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

#ifndef SINKEQ_SINK_H_
#define SINKEQ_SINK_H_

#include <span>
#include <vector>

#include "sinkeq/dynamics.h"
#include "sinkeq/game.h"

namespace sinkeq {

struct ComponentMap {
  std::vector<int> component_of;  // per state
  int num_components = 0;
};

// Strongly connected components of the positive-probability graph, computed
// with an explicit-stack Tarjan pass (no recursion). Component ids are in
// Tarjan completion order, so every edge between components goes from a
// higher id to a lower one.
ComponentMap StronglyConnectedComponents(const TransitionKernel& kernel);

// SCCs with no outgoing edge. Each support is sorted; the list is ordered by
// smallest element.
std::vector<std::vector<ProfileIndex>> SinkComponents(
    const TransitionKernel& kernel);

// Supports up to this size are solved directly; larger ones use power
// iteration.
inline constexpr std::size_t kDirectSolveLimit = 2000;
inline constexpr double kStationaryTolerance = 1e-10;

// The unique stationary distribution of the chain restricted to a sink
// component, aligned with `support` (which must be sorted). Throws
// Error(kNumericalFailure) if the result is not strictly positive or its
// balance residual exceeds kStationaryTolerance.
std::vector<double> StationaryDistribution(
    const TransitionKernel& kernel, std::span<const ProfileIndex> support);

// max over the support of |p(a) - sum_b Pr(a|b) p(b)|.
double StationaryResidual(const TransitionKernel& kernel,
                          std::span<const ProfileIndex> support,
                          std::span<const double> probabilities);

struct SinkEquilibrium {
  std::vector<ProfileIndex> support;
  std::vector<double> probabilities;
  double expected_welfare = 0.0;
  double residual = 0.0;
};

std::vector<SinkEquilibrium> SinkEquilibria(const NormalFormGame& game,
                                            const TransitionKernel& kernel);
std::vector<SinkEquilibrium> SinkEquilibria(const NormalFormGame& game,
                                            ResponseMode mode,
                                            double tie_tol = 0.0);

struct SinkingResult {
  double ratio = 0.0;
  SinkEquilibrium worst;
  std::vector<SinkEquilibrium> equilibria;
};

// min over sink equilibria of E[W] / W(a_opt). Throws
// Error(kDegenerateWelfare) when W(a_opt) == 0.
SinkingResult PriceOfSinking(const NormalFormGame& game, ResponseMode mode,
                             double tie_tol = 0.0);
SinkingResult PriceOfSinking(const NormalFormGame& game,
                             const TransitionKernel& kernel);

}  // namespace sinkeq

#endif  // SINKEQ_SINK_H_
