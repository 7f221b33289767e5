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

#ifndef SINKEQ_RADIO_H_
#define SINKEQ_RADIO_H_

#include <cstdint>
#include <vector>

#include "sinkeq/game.h"

namespace sinkeq {

inline constexpr int kRadioChannels = 2;

// n agents each pick one of two channels. Agent pairs on different channels
// contribute their interference weight w_ij to the welfare. Each agent sees
// the whole weight matrix through its own estimate, with every entry inside
// [alpha w_ij, w_ij / alpha].
struct RadioInstance {
  std::vector<std::vector<double>> weights;  // n x n, zero diagonal
  double alpha = 1.0;
  // estimates[i] is agent i's n x n matrix. Left empty, MakeRadioGame draws
  // it from `seed`.
  std::vector<std::vector<std::vector<double>>> estimates;
  std::uint64_t seed = 0;
};

// Throws Error(kInvalidParameters) on an invalid instance.
void ValidateRadioInstance(const RadioInstance& instance);

// Entry-wise log-uniform on [alpha w, w / alpha]; alpha == 1 reproduces w
// exactly. Draws agent-major, then row-major, from SplitMix64(seed).
std::vector<std::vector<std::vector<double>>> SampleRadioEstimates(
    const std::vector<std::vector<double>>& weights, double alpha,
    std::uint64_t seed);

// Random symmetric weights, uniform on (0, 1], plus sampled estimates. Both
// derive from `seed`.
RadioInstance SampleRadioInstance(int n, double alpha, std::uint64_t seed);

// W(a) = sum_i sum_{j : a_j != a_i} w_ij; U_i is the same sum over agent i's
// estimate matrix.
NormalFormGame MakeRadioGame(const RadioInstance& instance);

// 1 / (3 alpha^2 + (1 - alpha^2) n).
double RadioSinkingBound(int n, double alpha);

}  // namespace sinkeq

#endif  // SINKEQ_RADIO_H_
