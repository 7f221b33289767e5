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

#include "sinkeq/covering.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sinkeq/error.h"
#include "sinkeq/rng.h"

namespace sinkeq {
namespace {

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidParameters, what);
}

using RegionMask = std::uint64_t;

// Sum of `values` over set bits, in region order.
double MaskValue(RegionMask mask, const std::vector<double>& values) {
  double total = 0.0;
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (mask >> r & 1U) total += values[r];
  }
  return total;
}

}  // namespace

void ValidateCoveringInstance(const CoveringInstance& instance) {
  const auto regions = static_cast<int>(instance.values.size());
  if (regions > kMaxCoveringRegions) {
    Invalid("at most " + std::to_string(kMaxCoveringRegions) +
            " regions are supported");
  }
  for (int r = 0; r < regions; ++r) {
    if (!std::isfinite(instance.values[r]) || instance.values[r] < 0.0) {
      Invalid("values[" + std::to_string(r) + "] must be finite and >= 0");
    }
  }
  if (instance.coverage_options.empty()) Invalid("covering needs an agent");
  for (std::size_t i = 0; i < instance.coverage_options.size(); ++i) {
    const auto& options = instance.coverage_options[i];
    if (options.empty()) {
      Invalid("agent " + std::to_string(i) + " has no coverage options");
    }
    for (const auto& option : options) {
      for (int r : option) {
        if (r < 0 || r >= regions) {
          Invalid("agent " + std::to_string(i) + " covers unknown region " +
                  std::to_string(r));
        }
      }
    }
  }
  if (!std::isfinite(instance.noise_bias)) Invalid("bias must be finite");
  if (!std::isfinite(instance.noise_scale) || instance.noise_scale < 0.0) {
    Invalid("noise scale must be finite and >= 0");
  }
}

std::vector<std::vector<double>> SampleCoveringEstimates(
    const CoveringInstance& instance) {
  ValidateCoveringInstance(instance);
  SplitMix64 rng(instance.seed);
  std::vector<std::vector<double>> estimates(instance.coverage_options.size());
  for (auto& row : estimates) {
    row.reserve(instance.values.size());
    for (double v : instance.values) {
      row.push_back(
          rng.Normal(v + instance.noise_bias, instance.noise_scale * v));
    }
  }
  return estimates;
}

NormalFormGame MakeCoveringGame(const CoveringInstance& instance) {
  const auto estimates = SampleCoveringEstimates(instance);
  const int n = static_cast<int>(instance.coverage_options.size());

  std::vector<int> counts;
  std::vector<std::vector<RegionMask>> masks(n);
  std::vector<std::vector<std::string>> labels(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& option : instance.coverage_options[i]) {
      RegionMask mask = 0;
      std::string label = "{";
      for (int r : option) {
        if (mask >> r & 1U) continue;
        if (label.size() > 1) label += ',';
        label += std::to_string(r);
        mask |= RegionMask{1} << r;
      }
      masks[i].push_back(mask);
      labels[i].push_back(label + "}");
    }
    counts.push_back(static_cast<int>(masks[i].size()));
  }

  ProfileIndex size = 1;
  for (int c : counts) {
    if (size > kMaxProfiles / c) Invalid("covering game is too large");
    size *= c;
  }
  std::vector<double> welfare(size);
  std::vector<std::vector<double>> utilities(n, std::vector<double>(size));
  std::vector<int> coords(n, 0);
  for (ProfileIndex a = 0; a < size; ++a) {
    RegionMask covered = 0;
    for (int i = 0; i < n; ++i) covered |= masks[i][coords[i]];
    welfare[a] = MaskValue(covered, instance.values);
    for (int i = 0; i < n; ++i) {
      utilities[i][a] = MaskValue(covered, estimates[i]);
    }
    for (int i = 0; i < n && ++coords[i] == counts[i]; ++i) coords[i] = 0;
  }
  return NormalFormGame(std::move(counts), std::move(welfare),
                        std::move(utilities), std::move(labels));
}

std::vector<std::vector<int>> RegionSubsets(int num_regions, int min_size,
                                            int max_size) {
  if (num_regions < 0 || num_regions > 30) {
    Invalid("region count must be in [0, 30] for subset enumeration");
  }
  std::vector<std::vector<int>> subsets;
  for (int size = std::max(min_size, 0);
       size <= std::min(max_size, num_regions); ++size) {
    // Lexicographic enumeration of size-element combinations.
    std::vector<int> combo(size);
    for (int k = 0; k < size; ++k) combo[k] = k;
    while (true) {
      subsets.push_back(combo);
      int k = size - 1;
      while (k >= 0 && combo[k] == num_regions - size + k) --k;
      if (k < 0) break;
      ++combo[k];
      for (int j = k + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return subsets;
}

double BetaPhi(double bias, double scale, int num_regions) {
  if (!(scale > 0.0)) Invalid("beta_phi needs a positive noise scale");
  if (num_regions < 0) Invalid("region count must be >= 0");
  const double c = bias;
  const double d = scale;
  // Phi(x) = erfc(-x / sqrt(2)) / 2.
  const double phi = 0.5 * std::erfc((c / d) / std::numbers::sqrt2);
  const double folded_mean =
      d * std::sqrt(2.0 / std::numbers::pi) * std::exp(-c * c / (2 * d * d)) +
      c * (1.0 - 2.0 * phi);
  return num_regions * folded_mean;
}

double CoveringSinkingBound(int n, double beta_phi) {
  if (n < 1 || !(beta_phi >= 0.0)) {
    Invalid("covering bound needs n >= 1 and beta_phi >= 0");
  }
  return std::max((1.0 - 4.0 * n * beta_phi) / 2.0, 0.0);
}

}  // namespace sinkeq
