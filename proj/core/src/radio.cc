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

#include "sinkeq/radio.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "sinkeq/error.h"
#include "sinkeq/rng.h"

namespace sinkeq {
namespace {

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidParameters, what);
}

// Players are binary digits of the flat index: bit i is agent i's channel.
double SplitWeight(const std::vector<std::vector<double>>& w, ProfileIndex a) {
  const auto n = static_cast<int>(w.size());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (((a >> i) & 1) != ((a >> j) & 1)) total += w[i][j];
    }
  }
  return total;
}

void ValidateMatrix(const std::vector<std::vector<double>>& m, std::size_t n,
                    const std::string& name) {
  if (m.size() != n) Invalid(name + " must have " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) {
      Invalid(name + " row " + std::to_string(i) + " must have " +
              std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(m[i][j]) || m[i][j] < 0.0) {
        Invalid(name + "[" + std::to_string(i) + "][" + std::to_string(j) +
                "] must be finite and >= 0");
      }
    }
    if (m[i][i] != 0.0) {
      Invalid(name + " must have a zero diagonal");
    }
  }
}

}  // namespace

void ValidateRadioInstance(const RadioInstance& instance) {
  const std::size_t n = instance.weights.size();
  if (n < 1 || n > 24) Invalid("radio games need between 1 and 24 agents");
  if (!(instance.alpha > 0.0 && instance.alpha <= 1.0)) {
    Invalid("alpha must lie in (0, 1]");
  }
  ValidateMatrix(instance.weights, n, "weights");
  if (instance.estimates.empty()) return;
  if (instance.estimates.size() != n) {
    Invalid("need one estimate matrix per agent");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::string name = "estimates[" + std::to_string(k) + "]";
    ValidateMatrix(instance.estimates[k], n, name);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double w = instance.weights[i][j];
        const double e = instance.estimates[k][i][j];
        if (e < instance.alpha * w || e > w / instance.alpha) {
          Invalid(name + "[" + std::to_string(i) + "][" + std::to_string(j) +
                  "] lies outside [alpha w, w / alpha]");
        }
      }
    }
  }
}

std::vector<std::vector<std::vector<double>>> SampleRadioEstimates(
    const std::vector<std::vector<double>>& weights, double alpha,
    std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha <= 1.0)) Invalid("alpha must lie in (0, 1]");
  const std::size_t n = weights.size();
  SplitMix64 rng(seed);
  const double log_alpha = std::log(alpha);
  std::vector<std::vector<std::vector<double>>> estimates(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double w = weights[i][j];
        const double u = rng.Uniform(-1.0, 1.0);
        if (alpha == 1.0) {
          estimates[k][i][j] = w;
        } else {
          // Rounding in exp can step just outside the interval.
          estimates[k][i][j] =
              std::clamp(w * std::exp(u * log_alpha), alpha * w, w / alpha);
        }
      }
    }
  }
  return estimates;
}

RadioInstance SampleRadioInstance(int n, double alpha, std::uint64_t seed) {
  if (n < 1) Invalid("radio games need at least one agent");
  RadioInstance instance;
  instance.alpha = alpha;
  instance.seed = seed;
  SplitMix64 rng(SplitSeed(seed, 0));
  instance.weights.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = 1.0 - rng.Uniform01();  // (0, 1]
      instance.weights[i][j] = instance.weights[j][i] = w;
    }
  }
  instance.estimates =
      SampleRadioEstimates(instance.weights, alpha, SplitSeed(seed, 1));
  return instance;
}

NormalFormGame MakeRadioGame(const RadioInstance& instance) {
  ValidateRadioInstance(instance);
  const int n = static_cast<int>(instance.weights.size());
  const auto estimates =
      instance.estimates.empty()
          ? SampleRadioEstimates(instance.weights, instance.alpha,
                                 instance.seed)
          : instance.estimates;

  const ProfileIndex size = ProfileIndex{1} << n;
  std::vector<double> welfare(size);
  std::vector<std::vector<double>> utilities(n, std::vector<double>(size));
  for (ProfileIndex a = 0; a < size; ++a) {
    welfare[a] = SplitWeight(instance.weights, a);
    for (int k = 0; k < n; ++k) utilities[k][a] = SplitWeight(estimates[k], a);
  }
  return NormalFormGame(std::vector<int>(n, kRadioChannels), std::move(welfare),
                        std::move(utilities),
                        std::vector<std::vector<std::string>>(n, {"ch1", "ch2"}));
}

double RadioSinkingBound(int n, double alpha) {
  if (n < 1 || !(alpha > 0.0 && alpha <= 1.0)) {
    Invalid("radio bound needs n >= 1 and alpha in (0, 1]");
  }
  const double a2 = alpha * alpha;
  return 1.0 / (3.0 * a2 + (1.0 - a2) * n);
}

}  // namespace sinkeq
