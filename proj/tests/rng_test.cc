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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

namespace sinkeq {
namespace {

TEST(SplitMix64Test, ReferenceSequence) {
  // Published SplitMix64 outputs for seed 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng(), 6457827717110365317ULL);
  EXPECT_EQ(rng(), 3203168211198807973ULL);
  EXPECT_EQ(rng(), 9817491932198370423ULL);
}

TEST(SplitMix64Test, UniformRanges) {
  SplitMix64 rng(5);
  double sum = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double u = rng.Uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);

  std::vector<int> hits(7, 0);
  for (int k = 0; k < 70000; ++k) {
    const int x = rng.UniformInt(-3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    ++hits[x + 3];
  }
  for (int h : hits) EXPECT_NEAR(h, 10000, 500);
  EXPECT_EQ(rng.UniformInt(4, 4), 4);
}

TEST(SplitMix64Test, NormalMoments) {
  SplitMix64 rng(6);
  const int samples = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double x = rng.Normal(2.0, 3.0);
    ASSERT_TRUE(std::isfinite(x));
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / samples;
  EXPECT_NEAR(mean, 2.0, 4 * 3.0 / std::sqrt(samples));
  EXPECT_NEAR(sum_sq / samples - mean * mean, 9.0, 0.1);
  EXPECT_EQ(rng.Normal(1.5, 0.0), 1.5);
}

TEST(SplitSeedTest, DistinctAndDeterministic) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 10000; ++t) {
    seen.insert(SplitSeed(7, t));
    ASSERT_EQ(SplitSeed(7, t), SplitSeed(7, t));
  }
  EXPECT_EQ(seen.size(), 10000u);
  EXPECT_NE(SplitSeed(7, 0), SplitSeed(8, 0));
}

}  // namespace
}  // namespace sinkeq
