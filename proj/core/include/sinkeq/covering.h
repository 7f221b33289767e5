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

#ifndef SINKEQ_COVERING_H_
#define SINKEQ_COVERING_H_

#include <cstdint>
#include <vector>

#include "sinkeq/game.h"

namespace sinkeq {

// Regions are identified by index into `values`. Each agent picks one of its
// coverage options (a subset of regions). Agent i values region r at
// v_r^i ~ Normal(v_r + bias, (scale * v_r)^2), drawn once per instance.
struct CoveringInstance {
  std::vector<double> values;
  std::vector<std::vector<std::vector<int>>> coverage_options;  // [agent][option]
  double noise_bias = 0.0;
  double noise_scale = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr int kMaxCoveringRegions = 64;

// Throws Error(kInvalidParameters) on an invalid instance.
void ValidateCoveringInstance(const CoveringInstance& instance);

// estimates[i][r] = v_r^i. Draws agent-major, region-minor from
// SplitMix64(instance.seed). Not clamped; estimates may be negative.
std::vector<std::vector<double>> SampleCoveringEstimates(
    const CoveringInstance& instance);

// W(a) = sum of v_r over the union of chosen options; U_i likewise with
// agent i's estimates.
NormalFormGame MakeCoveringGame(const CoveringInstance& instance);

// All subsets of {0..num_regions-1} with between min_size and max_size
// elements, ordered by size and then lexicographically.
std::vector<std::vector<int>> RegionSubsets(int num_regions, int min_size,
                                            int max_size);

// Expected arithmetic misalignment of the covering game:
//   |R| (d sqrt(2/pi) exp(-c^2 / 2d^2) + c (1 - 2 Phi(-c/d))),
// the folded-normal mean scaled by the number of regions.
// Throws Error(kInvalidParameters) unless scale > 0.
double BetaPhi(double bias, double scale, int num_regions);

// max((1 - 4 n beta_phi) / 2, 0): expected price-of-sinking lower bound.
double CoveringSinkingBound(int n, double beta_phi);

}  // namespace sinkeq

#endif  // SINKEQ_COVERING_H_
