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

#include "sinkeq/rng.h"

#include <cmath>
#include <numbers>

namespace sinkeq {
namespace {
constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;
}  // namespace

std::uint64_t Mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t SplitSeed(std::uint64_t master, std::uint64_t stream) {
  return Mix64(master ^ Mix64((stream + 1) * kGoldenGamma));
}

SplitMix64::result_type SplitMix64::operator()() {
  state_ += kGoldenGamma;
  return Mix64(state_);
}

double SplitMix64::Uniform01() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double SplitMix64::Uniform(double lo, double hi) {
  return lo + (hi - lo) * Uniform01();
}

int SplitMix64::UniformInt(int lo, int hi) {
  const std::uint64_t range =
      static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  // Rejection keeps the draw unbiased for ranges that do not divide 2^64.
  const std::uint64_t limit = max() - max() % range;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return static_cast<int>(lo + static_cast<std::int64_t>(x % range));
}

double SplitMix64::Normal(double mean, double stddev) {
  const double u1 = 1.0 - Uniform01();  // (0, 1]
  const double u2 = Uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace sinkeq
