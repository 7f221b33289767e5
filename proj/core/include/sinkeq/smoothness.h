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

#ifndef SINKEQ_SMOOTHNESS_H_
#define SINKEQ_SMOOTHNESS_H_

#include <optional>
#include <string>
#include <vector>

#include "sinkeq/game.h"

namespace sinkeq {

// A certificate is valid when no per-state slack is below -kSlackTolerance.
inline constexpr double kSlackTolerance = 1e-9;
// Width of the final bracket in the search over lambda / mu.
inline constexpr double kRatioTolerance = 1e-9;

// D(a) = sum_i U_i(a) - U_i(opt_i, a_-i), with U_i replaced by W when
// common_interest is set. `opt` is a flat profile index.
std::vector<double> DeviationGains(const NormalFormGame& game,
                                   ProfileIndex opt, bool common_interest);

struct SmoothnessCertificate {
  double lambda = 0.0;
  double mu = 0.0;
  bool common_interest = false;
  JointAction opt;
  // mu W(a) - lambda W(opt) - D(a), one entry per profile.
  std::vector<double> slack;
  double min_slack = 0.0;
  ProfileIndex tightest_state = 0;
  bool valid = false;
};

// Evaluates the (lambda, mu)-smoothness inequality at every profile against
// the OptimalProfile optimum. Requires mu >= lambda >= 0.
SmoothnessCertificate CheckSmoothness(const NormalFormGame& game,
                                      double lambda, double mu,
                                      bool common_interest);

struct SmoothnessParameters {
  double lambda = 0.0;
  double mu = 0.0;
  double ratio = 0.0;  // lambda / mu, kept separately for the mu == 0 case
};

// Largest lambda / mu (to within kRatioTolerance, from below) over valid
// certificates. For a fixed ratio rho the feasible mu form an interval
// obtained by intersecting one half-line per profile; mu is taken at the
// interval's lower end when that is positive, otherwise at min(upper, 1).
// Throws Error(kDegenerateWelfare) if W(opt) == 0 and Error(kNotSmooth) if
// no certificate exists (some profile with W == 0 has D > 0).
SmoothnessParameters BestSmoothness(const NormalFormGame& game,
                                    bool common_interest);

struct Witness {
  int player = -1;
  ProfileIndex state = -1;
};

struct Misalignment {
  std::optional<double> beta;  // nullopt when undefined
  Witness witness;
  bool out_of_model = false;  // arithmetic beta above 1
  std::string reason;         // why beta is undefined
};

// max |U_i(a) - W(a)| / W(a) over W(a) > 0. Profiles with W(a) == 0 must
// have U_i(a) == 0, otherwise beta is undefined.
Misalignment ArithmeticMisalignment(const NormalFormGame& game);

// Smallest beta with 1 - beta <= U_i(a) / W(a) <= 1 / (1 - beta) over
// W(a) > 0; profiles with W(a) == 0 must have U_i(a) == 0. Undefined if any
// ratio is nonpositive.
Misalignment GeometricMisalignment(const NormalFormGame& game);

struct MisalignmentReport {
  Misalignment arithmetic;
  Misalignment geometric;
};
MisalignmentReport MeasureMisalignment(const NormalFormGame& game);

// Price-of-sinking lower bounds for a misaligned game, given common-interest
// smoothness parameters.
double ArithmeticSinkingBound(double lambda_c, double mu_c, double beta, int n);
double GeometricSinkingBound(double lambda_c, double mu_c, double beta, int n);
// (1 - beta)^2 lambda_c / ((1 - beta)^2 mu_c + (1 - (1 - beta)^2) n): the
// geometric bound with the retention factor also applied to lambda_c. Never
// larger than GeometricSinkingBound.
double ConservativeGeometricSinkingBound(double lambda_c, double mu_c,
                                         double beta, int n);

struct BoundReport {
  double pos_exact = 0.0;
  int n = 0;
  double lambda_c = 0.0;
  double mu_c = 0.0;
  bool singleton_br = false;
  MisalignmentReport misalignment;
  // Present only when the best response is singleton-valued, the respective
  // beta is defined and mu_c > 0.
  std::optional<double> bound_arith;
  std::optional<double> bound_geo;
  std::optional<double> bound_geo_conservative;
  bool satisfied_arith = false;
  bool satisfied_geo = false;
};

// Exact best-response price of sinking next to both misalignment bounds.
// Throws Error(kDegenerateWelfare) when W(opt) == 0.
BoundReport TheoremBounds(const NormalFormGame& game);

struct SinkWitness {
  std::vector<ProfileIndex> support;
  ProfileIndex witness = -1;  // highest-welfare profile in the support
  double welfare = 0.0;
  bool pass = false;  // welfare >= (lambda / mu) W(opt) - kSlackTolerance
  // A support profile from which no player gains by switching to its
  // optimal action, if any.
  std::optional<ProfileIndex> deviation_free;
};

// One entry per sink of the better-response chain. (lambda, mu) must be a
// valid certificate for the game's own utilities (Error(kInvalidParameters)
// otherwise). Throws Error(kWitnessNotFound) if some sink has no profile
// reaching the lambda / mu welfare threshold.
std::vector<SinkWitness> BetterResponseWitness(const NormalFormGame& game,
                                               double lambda, double mu);

}  // namespace sinkeq

#endif  // SINKEQ_SMOOTHNESS_H_
