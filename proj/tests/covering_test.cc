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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sinkeq/error.h"
#include "sinkeq/game.h"
#include "sinkeq/rng.h"
#include "sinkeq/sink.h"
#include "sinkeq/smoothness.h"

namespace sinkeq {
namespace {

CoveringInstance Instance(int agents, int regions, int max_cover, double c,
                          double d, std::uint64_t seed) {
  CoveringInstance inst;
  inst.values.assign(regions, 1.0);
  inst.coverage_options.assign(agents, RegionSubsets(regions, 1, max_cover));
  inst.noise_bias = c;
  inst.noise_scale = d;
  inst.seed = seed;
  return inst;
}

TEST(RegionSubsetsTest, Enumerates) {
  EXPECT_EQ(RegionSubsets(3, 1, 1),
            (std::vector<std::vector<int>>{{0}, {1}, {2}}));
  EXPECT_EQ(RegionSubsets(3, 0, 2),
            (std::vector<std::vector<int>>{
                {}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(RegionSubsets(5, 0, 5).size(), 32u);
}

TEST(CoveringGameTest, ZeroNoiseIsCommonInterest) {
  const auto g = MakeCoveringGame(Instance(2, 3, 2, 0.0, 0.0, 1));
  EXPECT_TRUE(g.is_common_interest());
  std::set<ProfileIndex> nash;
  for (const auto& ne : EnumerateNash(g)) nash.insert(ne.flat);
  // Tied optima can share a sink; every sink profile must still be Nash.
  for (const auto& eq : SinkEquilibria(g, ResponseMode::kBest)) {
    for (ProfileIndex a : eq.support) EXPECT_TRUE(nash.contains(a));
  }
}

TEST(CoveringGameTest, UnionSemantics) {
  CoveringInstance inst;
  inst.values = {1.0};
  inst.coverage_options = {{{0}, {}}, {{0}, {}}};
  const auto g = MakeCoveringGame(inst);
  EXPECT_EQ(g.welfare_table()[0], 1.0);
  EXPECT_EQ(g.welfare_table()[1], 1.0);
  EXPECT_EQ(g.welfare_table()[2], 1.0);
  EXPECT_EQ(g.welfare_table()[3], 0.0);
  EXPECT_EQ(g.action_labels()[0], (std::vector<std::string>{"{0}", "{}"}));
}

TEST(CoveringGameTest, WelfareMatchesExplicitUnion) {
  CoveringInstance inst;
  inst.values = {0.5, 2.0, 1.0, 0.25};
  inst.coverage_options = {{{0, 1}, {2}}, {{1}, {3, 0}, {}}};
  inst.noise_bias = 0.1;
  inst.noise_scale = 0.2;
  inst.seed = 8;
  const auto g = MakeCoveringGame(inst);
  const auto est = SampleCoveringEstimates(inst);
  for (ProfileIndex a = 0; a < g.num_profiles(); ++a) {
    std::set<int> covered;
    for (int i = 0; i < 2; ++i) {
      for (int r : inst.coverage_options[i][g.action_of(a, i)]) {
        covered.insert(r);
      }
    }
    double w = 0.0;
    std::vector<double> u(2, 0.0);
    for (int r : covered) {
      w += inst.values[r];
      for (int i = 0; i < 2; ++i) u[i] += est[i][r];
    }
    EXPECT_NEAR(g.welfare(a), w, 1e-15);
    for (int i = 0; i < 2; ++i) EXPECT_NEAR(g.utility(i, a), u[i], 1e-15);
  }
}

TEST(CoveringGameTest, SeededUtilitiesAreReproducible) {
  const auto a = MakeCoveringGame(Instance(2, 3, 1, 0.01, 0.01, 42));
  const auto b = MakeCoveringGame(Instance(2, 3, 1, 0.01, 0.01, 42));
  const auto c = MakeCoveringGame(Instance(2, 3, 1, 0.01, 0.01, 43));
  for (int i = 0; i < 2; ++i) {
    EXPECT_TRUE(std::ranges::equal(a.utility_table(i), b.utility_table(i)));
  }
  EXPECT_FALSE(std::ranges::equal(a.utility_table(0), c.utility_table(0)));
}

TEST(CoveringGameTest, Validation) {
  auto inst = Instance(2, 3, 1, 0.0, 0.0, 0);
  inst.coverage_options[1].push_back({5});
  EXPECT_THROW(MakeCoveringGame(inst), Error);
  inst = Instance(2, 3, 1, 0.0, -1.0, 0);
  EXPECT_THROW(MakeCoveringGame(inst), Error);
  inst = Instance(2, 3, 1, 0.0, 0.0, 0);
  inst.coverage_options[0].clear();
  EXPECT_THROW(MakeCoveringGame(inst), Error);
  inst = Instance(2, 3, 1, 0.0, 0.0, 0);
  inst.values[0] = -1.0;
  EXPECT_THROW(MakeCoveringGame(inst), Error);
}

// Monotone submodular: marginal gain of region set X shrinks as the base grows.
TEST(CoveringGameTest, WelfareIsMonotoneSubmodular) {
  SplitMix64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const int regions = rng.UniformInt(1, 6);
    std::vector<double> v(regions);
    for (double& x : v) x = rng.Uniform(0.0, 2.0);
    auto value = [&](unsigned mask) {
      double total = 0.0;
      for (int r = 0; r < regions; ++r) {
        if (mask >> r & 1U) total += v[r];
      }
      return total;
    };
    // Cross-check value() against a 1-agent covering game over all subsets.
    CoveringInstance inst;
    inst.values = v;
    inst.coverage_options = {RegionSubsets(regions, 0, regions)};
    const auto g = MakeCoveringGame(inst);
    for (ProfileIndex a = 0; a < g.num_profiles(); ++a) {
      unsigned mask = 0;
      for (int r : inst.coverage_options[0][a]) mask |= 1U << r;
      ASSERT_NEAR(g.welfare(a), value(mask), 1e-12);
    }
    const unsigned full = (1U << regions) - 1;
    for (unsigned s = 0; s <= full; ++s) {
      for (unsigned t = s;; t = (t + 1) | s) {  // supersets of s
        for (int r = 0; r < regions; ++r) {
          const unsigned x = 1U << r;
          const double gain_s = value(s | x) - value(s);
          const double gain_t = value(t | x) - value(t);
          ASSERT_GE(gain_s, gain_t - 1e-12);
          ASSERT_GE(gain_t, 0.0);
        }
        if (t == full) break;
      }
    }
  }
}

TEST(CoveringGameTest, CommonInterestCertificateOneTwo) {
  SplitMix64 rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    CoveringInstance inst;
    const int regions = rng.UniformInt(1, 6);
    inst.values.resize(regions);
    for (double& x : inst.values) x = rng.Uniform(0.05, 1.0);
    const int agents = rng.UniformInt(1, 3);
    for (int i = 0; i < agents; ++i) {
      inst.coverage_options.push_back(
          RegionSubsets(regions, 0, rng.UniformInt(1, 2)));
    }
    const auto g = MakeCoveringGame(inst);
    ASSERT_TRUE(CheckSmoothness(g, 1.0, 2.0, true).valid) << "trial " << trial;
    ASSERT_GE(BestSmoothness(g, true).ratio, 0.5 - 1e-9);
  }
}

TEST(BetaPhiTest, Examples) {
  const double d = 0.02;
  EXPECT_NEAR(BetaPhi(0.0, d, 4), 4 * d * std::sqrt(2 / std::numbers::pi),
              1e-16);
  EXPECT_NEAR(BetaPhi(0.01, 0.01, 3), 0.0350, 5e-5);
  EXPECT_DOUBLE_EQ(BetaPhi(0.03, 0.02, 6), 2 * BetaPhi(0.03, 0.02, 3));
  // Symmetric in the sign of the bias.
  EXPECT_DOUBLE_EQ(BetaPhi(-0.03, 0.02, 3), BetaPhi(0.03, 0.02, 3));
  EXPECT_THROW(BetaPhi(0.01, 0.0, 3), Error);
  EXPECT_THROW(BetaPhi(0.01, -1.0, 3), Error);
}

TEST(BetaPhiTest, MatchesFoldedNormalSampleMean) {
  SplitMix64 rng(2718);
  for (auto [c, d] : {std::pair{0.01, 0.01}, std::pair{0.0, 0.05},
                      std::pair{-0.02, 0.01}, std::pair{0.1, 0.03}}) {
    const int samples = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int k = 0; k < samples; ++k) {
      const double x = std::abs(rng.Normal(1.0 + c, d) - 1.0);
      sum += x;
      sum_sq += x * x;
    }
    const double mean = sum / samples;
    const double se =
        std::sqrt((sum_sq / samples - mean * mean) / (samples - 1));
    EXPECT_NEAR(mean, BetaPhi(c, d, 1), 3 * se) << c << "," << d;
  }
}

TEST(CoveringSinkingBoundTest, Examples) {
  EXPECT_EQ(CoveringSinkingBound(3, 0.0), 0.5);
  EXPECT_NEAR(CoveringSinkingBound(2, 0.035), 0.36, 1e-15);
  EXPECT_EQ(CoveringSinkingBound(2, 0.125), 0.0);
  EXPECT_EQ(CoveringSinkingBound(5, 1.0), 0.0);
  EXPECT_NEAR(CoveringSinkingBound(2, BetaPhi(0.01, 0.01, 3)), 0.36, 5e-4);
}

}  // namespace
}  // namespace sinkeq
