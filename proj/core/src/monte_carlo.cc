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

#include "sinkeq/monte_carlo.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>

#include "sinkeq/covering.h"
#include "sinkeq/error.h"
#include "sinkeq/radio.h"
#include "sinkeq/rng.h"
#include "sinkeq/sink.h"

namespace sinkeq {
namespace {

double PairwiseSum(std::span<const double> x) {
  if (x.size() <= 8) {
    double total = 0.0;
    for (double v : x) total += v;
    return total;
  }
  const std::size_t half = x.size() / 2;
  return PairwiseSum(x.first(half)) + PairwiseSum(x.subspan(half));
}

}  // namespace

Instance TrialInstance(const TrialSpec& spec, std::uint64_t seed) {
  if (const auto* covering = std::get_if<CoveringTrialSpec>(&spec)) {
    CoveringInstance instance;
    instance.values.assign(covering->num_regions, covering->value);
    instance.coverage_options.assign(
        covering->num_agents,
        RegionSubsets(covering->num_regions, 1, covering->max_cover));
    instance.noise_bias = covering->bias;
    instance.noise_scale = covering->scale;
    instance.seed = seed;
    return instance;
  }
  const auto& radio = std::get<RadioTrialSpec>(spec);
  return SampleRadioInstance(radio.num_agents, radio.alpha, seed);
}

double TrialBound(const TrialSpec& spec) {
  if (const auto* covering = std::get_if<CoveringTrialSpec>(&spec)) {
    // Noise-free limit of the folded-normal mean is |bias|.
    const double beta =
        covering->scale > 0.0
            ? BetaPhi(covering->bias, covering->scale, covering->num_regions)
            : covering->num_regions * std::abs(covering->bias);
    return CoveringSinkingBound(covering->num_agents, beta);
  }
  const auto& radio = std::get<RadioTrialSpec>(spec);
  return RadioSinkingBound(radio.num_agents, radio.alpha);
}

MonteCarloSummary RunMonteCarlo(const TrialSpec& spec, int trials,
                                std::uint64_t master_seed, int threads) {
  if (trials < 1) {
    throw Error(ErrorCode::kInvalidParameters, "need at least one trial");
  }
  MonteCarloSummary summary;
  summary.trials = trials;
  summary.bound = TrialBound(spec);
  summary.per_trial.resize(trials);

  std::atomic<int> next{0};
  std::mutex failure_mutex;
  std::optional<int> failed_trial;
  std::exception_ptr failure;

  auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      TrialResult& result = summary.per_trial[t];
      result.seed = SplitSeed(master_seed, static_cast<std::uint64_t>(t));
      try {
        const NormalFormGame game = MakeGame(TrialInstance(spec, result.seed));
        result.pos = PriceOfSinking(game, ResponseMode::kBest).ratio;
        result.violation = result.pos < summary.bound - kViolationTolerance;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        // Report the lowest failing trial so the error is schedule-independent.
        if (!failed_trial || t < *failed_trial) {
          failed_trial = t;
          failure = std::current_exception();
        }
      }
    }
  };
  const int workers = std::clamp(threads, 1, trials);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  if (failure) {
    const std::string where =
        "trial " + std::to_string(*failed_trial) + " (seed " +
        std::to_string(summary.per_trial[*failed_trial].seed) + ")";
    try {
      std::rethrow_exception(failure);
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kNumericalFailure, where + ": " + e.what());
    }
  }

  // Shifting by the first value keeps a constant sample exactly constant.
  const double shift = summary.per_trial.front().pos;
  std::vector<double> centered(trials);
  for (int t = 0; t < trials; ++t) {
    centered[t] = summary.per_trial[t].pos - shift;
  }
  summary.mean_pos = shift + PairwiseSum(centered) / trials;
  summary.min_pos = summary.per_trial.front().pos;
  std::vector<double> squares(trials);
  for (int t = 0; t < trials; ++t) {
    const TrialResult& r = summary.per_trial[t];
    summary.min_pos = std::min(summary.min_pos, r.pos);
    summary.violations += r.violation ? 1 : 0;
    const double dev = r.pos - summary.mean_pos;
    squares[t] = dev * dev;
  }
  if (trials > 1) {
    const double variance = PairwiseSum(squares) / (trials - 1);
    summary.std_err = std::sqrt(variance / trials);
  }
  return summary;
}

}  // namespace sinkeq
