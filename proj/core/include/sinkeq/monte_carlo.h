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

#ifndef SINKEQ_MONTE_CARLO_H_
#define SINKEQ_MONTE_CARLO_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "sinkeq/instance_io.h"

namespace sinkeq {

// Unit-value covering game whose agents choose among all region subsets of
// size 1..max_cover; only the agents' estimates vary between trials.
struct CoveringTrialSpec {
  int num_agents = 2;
  int num_regions = 3;
  double bias = 0.01;
  double scale = 0.01;
  int max_cover = 1;
  double value = 1.0;
};

// Two-channel radio game with fresh weights and estimates per trial.
struct RadioTrialSpec {
  int num_agents = 3;
  double alpha = 1.0;
};

using TrialSpec = std::variant<CoveringTrialSpec, RadioTrialSpec>;

Instance TrialInstance(const TrialSpec& spec, std::uint64_t seed);

// Covering: the expected-value bound CoveringSinkingBound(n, beta_phi).
// Radio: the per-instance bound RadioSinkingBound(n, alpha).
double TrialBound(const TrialSpec& spec);

struct TrialResult {
  std::uint64_t seed = 0;
  double pos = 0.0;
  bool violation = false;  // pos < bound - 1e-9
};

struct MonteCarloSummary {
  int trials = 0;
  double mean_pos = 0.0;
  double std_err = 0.0;
  double min_pos = 0.0;
  double bound = 0.0;
  int violations = 0;
  std::vector<TrialResult> per_trial;
};

inline constexpr double kViolationTolerance = 1e-9;

// Trial t uses seed SplitSeed(master_seed, t) and the best-response price of
// sinking. Results do not depend on `threads`. A failing trial aborts the run
// with an Error carrying the same code and naming the trial seed.
MonteCarloSummary RunMonteCarlo(const TrialSpec& spec, int trials,
                                std::uint64_t master_seed, int threads = 1);

}  // namespace sinkeq

#endif  // SINKEQ_MONTE_CARLO_H_
