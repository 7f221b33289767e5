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

#include "sinkeq/counterexample.h"

#include <gtest/gtest.h>

#include <string>
#include <utility>
#include <vector>

#include "sinkeq/error.h"
#include "sinkeq/game.h"

namespace sinkeq {
namespace {

double W(const NormalFormGame& g, int e, int f) {
  return g.welfare(JointToIndex(g, std::vector<int>{e, f}));
}
std::pair<double, double> U(const NormalFormGame& g, int e, int f) {
  const ProfileIndex a = JointToIndex(g, std::vector<int>{e, f});
  return {g.utility(0, a), g.utility(1, a)};
}

TEST(CounterexampleTest, LambdaOneMuTwo) {
  const auto g = MakeCounterexample(1.0, 2.0);
  EXPECT_EQ(g.num_players(), 2);
  EXPECT_EQ(g.num_actions(0), 3);
  EXPECT_EQ(W(g, 0, 0), 1.0);
  EXPECT_EQ(W(g, 0, 1), 0.75);
  EXPECT_EQ(W(g, 1, 0), 0.75);
  int zeros = 0;
  for (int e = 0; e < 3; ++e) {
    for (int f = 0; f < 3; ++f) zeros += W(g, e, f) == 0.0;
  }
  EXPECT_EQ(zeros, 6);
  EXPECT_EQ(U(g, 1, 1), std::make_pair(1.0, -2.0));
  EXPECT_EQ(U(g, 0, 1), std::make_pair(0.0, 0.5));
  EXPECT_EQ(g.action_labels()[0],
            (std::vector<std::string>{"e1", "e2", "e3"}));
  EXPECT_EQ(g.action_labels()[1],
            (std::vector<std::string>{"f1", "f2", "f3"}));
}

TEST(CounterexampleTest, FullUtilityTable) {
  const double lambda = 0.5, mu = 3.0, eps = 1.25;
  const auto g = MakeCounterexample(lambda, mu);
  using P = std::pair<double, double>;
  const P table[3][3] = {
      {{0, 0}, {0, eps}, {0, -eps}},
      {{eps, 0}, {lambda, -2 * lambda}, {-2 * lambda, lambda}},
      {{-eps, 0}, {-2 * lambda, lambda}, {lambda, -2 * lambda}}};
  for (int e = 0; e < 3; ++e) {
    for (int f = 0; f < 3; ++f) EXPECT_EQ(U(g, e, f), table[e][f]);
  }
  EXPECT_EQ(W(g, 0, 1), (lambda + eps) / mu);
}

TEST(CounterexampleTest, LambdaZero) {
  const auto g = MakeCounterexample(0.0, 2.0);
  EXPECT_EQ(W(g, 0, 1), 0.5);
  EXPECT_EQ(U(g, 1, 1), std::make_pair(0.0, 0.0));
  EXPECT_EQ(U(g, 1, 0).first, 1.0);
}

TEST(CounterexampleTest, RejectsMuNotAboveLambda) {
  for (auto [l, m] : {std::pair{1.0, 1.0}, std::pair{2.0, 1.0},
                      std::pair{-1.0, 1.0}}) {
    try {
      MakeCounterexample(l, m);
      ADD_FAILURE() << l << "," << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidParameters);
    }
  }
}

}  // namespace
}  // namespace sinkeq
