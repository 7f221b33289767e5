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

#ifndef SINKEQ_RNG_H_
#define SINKEQ_RNG_H_

#include <cstdint>
#include <limits>

namespace sinkeq {

// SplitMix64: output k is a fixed bijective mix of seed + k * golden-gamma,
// so streams are reproducible on every platform. Distributions are
// implemented here rather than taken from <random>, whose algorithms are
// implementation-defined.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  double Uniform(double lo, double hi);
  // Uniform integer in [lo, hi], unbiased.
  int UniformInt(int lo, int hi);
  // Box-Muller; consumes two uniforms per call.
  double Normal(double mean, double stddev);

 private:
  std::uint64_t state_;
};

// Finalizer of SplitMix64 (a bijection on 64-bit words).
std::uint64_t Mix64(std::uint64_t x);

// Seed of stream `stream` derived from `master`. Distinct streams of the same
// master are decorrelated.
std::uint64_t SplitSeed(std::uint64_t master, std::uint64_t stream);

}  // namespace sinkeq

#endif  // SINKEQ_RNG_H_
