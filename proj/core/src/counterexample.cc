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

#include <array>
#include <cmath>
#include <string>

#include "sinkeq/error.h"

namespace sinkeq {

NormalFormGame MakeCounterexample(double lambda, double mu) {
  if (!(lambda >= 0.0) || !(mu > lambda) || !std::isfinite(mu)) {
    throw Error(ErrorCode::kInvalidParameters,
                "counterexample needs mu > lambda >= 0 (got lambda=" +
                    std::to_string(lambda) + ", mu=" + std::to_string(mu) +
                    ")");
  }
  const double eps = (mu - lambda) / 2.0;
  const double q = (lambda + eps) / mu;
  const double l = lambda;

  // Row e, column f; flat index = e + 3 f.
  const std::array<std::array<double, 3>, 3> welfare = {{
      {1.0, q, 0.0},
      {q, 0.0, 0.0},
      {0.0, 0.0, 0.0},
  }};
  const std::array<std::array<double, 3>, 3> u1 = {{
      {0.0, 0.0, 0.0},
      {eps, l, -2 * l},
      {-eps, -2 * l, l},
  }};
  const std::array<std::array<double, 3>, 3> u2 = {{
      {0.0, eps, -eps},
      {0.0, -2 * l, l},
      {0.0, l, -2 * l},
  }};

  std::vector<double> w(9), first(9), second(9);
  for (int e = 0; e < 3; ++e) {
    for (int f = 0; f < 3; ++f) {
      w[e + 3 * f] = welfare[e][f];
      first[e + 3 * f] = u1[e][f];
      second[e + 3 * f] = u2[e][f];
    }
  }
  return NormalFormGame({3, 3}, std::move(w), {std::move(first), std::move(second)},
                        {{"e1", "e2", "e3"}, {"f1", "f2", "f3"}});
}

}  // namespace sinkeq
