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

#ifndef SINKEQ_COUNTEREXAMPLE_H_
#define SINKEQ_COUNTEREXAMPLE_H_

#include "sinkeq/game.h"

namespace sinkeq {

// Two players with actions {e1,e2,e3} x {f1,f2,f3}. The game is
// (lambda, mu)-smooth, yet for lambda > 0 its best-response dynamics have a
// unique sink on {e2,e3} x {f2,f3}, where welfare is zero.
// With eps = (mu - lambda) / 2 and q = (lambda + eps) / mu:
//
//   W     f1  f2  f3       (U1,U2)  f1        f2          f3
//   e1    1   q   0        e1       (0,0)     (0,eps)     (0,-eps)
//   e2    q   0   0        e2       (eps,0)   (l,-2l)     (-2l,l)
//   e3    0   0   0        e3       (-eps,0)  (-2l,l)     (l,-2l)
//
// Requires mu > lambda >= 0; throws Error(kInvalidParameters) otherwise.
NormalFormGame MakeCounterexample(double lambda, double mu);

}  // namespace sinkeq

#endif  // SINKEQ_COUNTEREXAMPLE_H_
