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

#include "sinkeq/smoothness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sinkeq/dynamics.h"
#include "sinkeq/error.h"
#include "sinkeq/sink.h"

namespace sinkeq {
namespace {

struct MuInterval {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool feasible = true;
};

// {mu >= 0 : mu (W(a) - rho W(opt)) >= D(a) for all a}.
MuInterval FeasibleMu(const NormalFormGame& game,
                      const std::vector<double>& gains, double opt_welfare,
                      double rho) {
  MuInterval interval;
  for (ProfileIndex a = 0; a < game.num_profiles(); ++a) {
    const double margin = game.welfare(a) - rho * opt_welfare;
    if (margin > 0.0) {
      interval.lower = std::max(interval.lower, gains[a] / margin);
    } else if (margin < 0.0) {
      interval.upper = std::min(interval.upper, gains[a] / margin);
    } else if (gains[a] > 0.0) {
      interval.feasible = false;
      return interval;
    }
  }
  interval.feasible = interval.lower <= interval.upper;
  return interval;
}

double MinSlack(const NormalFormGame& game, const std::vector<double>& gains,
                double opt_welfare, double lambda, double mu) {
  double worst = std::numeric_limits<double>::infinity();
  for (ProfileIndex a = 0; a < game.num_profiles(); ++a) {
    worst = std::min(worst, mu * game.welfare(a) - lambda * opt_welfare - gains[a]);
  }
  return worst;
}

void RequireSmoothParameters(double lambda, double mu) {
  if (!(lambda >= 0.0) || !(mu >= lambda) || !std::isfinite(mu)) {
    throw Error(ErrorCode::kInvalidParameters,
                "smoothness parameters need mu >= lambda >= 0 (got lambda=" +
                    std::to_string(lambda) + ", mu=" + std::to_string(mu) +
                    ")");
  }
}

Misalignment UndefinedAt(int player, ProfileIndex state, std::string reason) {
  Misalignment m;
  m.witness = {player, state};
  m.reason = std::move(reason);
  return m;
}

}  // namespace

std::vector<double> DeviationGains(const NormalFormGame& game,
                                   ProfileIndex opt, bool common_interest) {
  std::vector<double> gains(game.num_profiles());
  for (ProfileIndex a = 0; a < game.num_profiles(); ++a) {
    double total = 0.0;
    for (int i = 0; i < game.num_players(); ++i) {
      const ProfileIndex deviation =
          game.with_action(a, i, game.action_of(opt, i));
      total += common_interest
                   ? game.welfare(a) - game.welfare(deviation)
                   : game.utility(i, a) - game.utility(i, deviation);
    }
    gains[a] = total;
  }
  return gains;
}

SmoothnessCertificate CheckSmoothness(const NormalFormGame& game,
                                      double lambda, double mu,
                                      bool common_interest) {
  RequireSmoothParameters(lambda, mu);
  const Optimum opt = OptimalProfile(game);
  const std::vector<double> gains =
      DeviationGains(game, opt.profile.flat, common_interest);

  SmoothnessCertificate cert;
  cert.lambda = lambda;
  cert.mu = mu;
  cert.common_interest = common_interest;
  cert.opt = opt.profile;
  cert.slack.resize(game.num_profiles());
  cert.min_slack = std::numeric_limits<double>::infinity();
  for (ProfileIndex a = 0; a < game.num_profiles(); ++a) {
    cert.slack[a] = mu * game.welfare(a) - lambda * opt.welfare - gains[a];
    if (cert.slack[a] < cert.min_slack) {
      cert.min_slack = cert.slack[a];
      cert.tightest_state = a;
    }
  }
  cert.valid = cert.min_slack >= -kSlackTolerance;
  return cert;
}

SmoothnessParameters BestSmoothness(const NormalFormGame& game,
                                    bool common_interest) {
  const Optimum opt = OptimalProfile(game);
  if (opt.welfare <= 0.0) {
    throw Error(ErrorCode::kDegenerateWelfare,
                "optimal welfare is zero; smoothness ratio is undefined");
  }
  const std::vector<double> gains =
      DeviationGains(game, opt.profile.flat, common_interest);

  double lo = 0.0;
  MuInterval interval = FeasibleMu(game, gains, opt.welfare, 1.0);
  if (interval.feasible) {
    lo = 1.0;
  } else {
    interval = FeasibleMu(game, gains, opt.welfare, 0.0);
    if (!interval.feasible) {
      throw Error(ErrorCode::kNotSmooth,
                  "a zero-welfare profile has positive deviation gain; no "
                  "(lambda, mu) certificate exists");
    }
    // Feasibility is monotone in rho: shrinking rho only relaxes every
    // constraint when mu >= 0.
    double hi = 1.0;
    while (hi - lo > kRatioTolerance) {
      const double mid = 0.5 * (lo + hi);
      const MuInterval candidate = FeasibleMu(game, gains, opt.welfare, mid);
      if (candidate.feasible) {
        lo = mid;
        interval = candidate;
      } else {
        hi = mid;
      }
    }
  }

  auto pick = [&](double rho, const MuInterval& feasible) {
    SmoothnessParameters p;
    p.ratio = rho;
    p.mu = feasible.lower > 0.0 ? feasible.lower
                                : std::min(feasible.upper, 1.0);
    p.lambda = rho * p.mu;
    return p;
  };
  SmoothnessParameters params = pick(lo, interval);
  // Near the supremum mu can blow up (a margin W(a) - rho W(opt) tends to 0)
  // and rounding then pushes a slack below tolerance. Back off rho until the
  // certificate checks out with the same arithmetic as CheckSmoothness.
  for (double step = kRatioTolerance;
       lo > 0.0 && MinSlack(game, gains, opt.welfare, params.lambda,
                            params.mu) < -kSlackTolerance;
       step *= 2.0) {
    lo = std::max(0.0, lo - step);
    interval = FeasibleMu(game, gains, opt.welfare, lo);
    params = pick(lo, interval);
  }
  return params;
}

Misalignment ArithmeticMisalignment(const NormalFormGame& game) {
  Misalignment m;
  double beta = 0.0;
  for (ProfileIndex a = 0; a < game.num_profiles(); ++a) {
    const double w = game.welfare(a);
    for (int i = 0; i < game.num_players(); ++i) {
      const double u = game.utility(i, a);
      if (w == 0.0) {
        if (u != 0.0) {
          return UndefinedAt(i, a, "nonzero utility where welfare is zero");
        }
        continue;
      }
      const double ratio = std::abs(u - w) / w;
      if (m.witness.player < 0 || ratio > beta) {
        beta = ratio;
        m.witness = {i, a};
      }
    }
  }
  m.beta = beta;
  m.out_of_model = beta > 1.0;
  return m;
}

Misalignment GeometricMisalignment(const NormalFormGame& game) {
  double r_min = std::numeric_limits<double>::infinity();
  double r_max = -std::numeric_limits<double>::infinity();
  Witness at_min, at_max;
  for (ProfileIndex a = 0; a < game.num_profiles(); ++a) {
    const double w = game.welfare(a);
    for (int i = 0; i < game.num_players(); ++i) {
      const double u = game.utility(i, a);
      if (w == 0.0) {
        if (u != 0.0) {
          return UndefinedAt(i, a, "nonzero utility where welfare is zero");
        }
        continue;
      }
      const double ratio = u / w;
      if (ratio <= 0.0) {
        return UndefinedAt(i, a, "nonpositive utility-to-welfare ratio");
      }
      if (ratio < r_min) {
        r_min = ratio;
        at_min = {i, a};
      }
      if (ratio > r_max) {
        r_max = ratio;
        at_max = {i, a};
      }
    }
  }
  Misalignment m;
  if (at_min.player < 0) {
    // Welfare is zero everywhere and so is every utility.
    m.beta = 0.0;
    return m;
  }
  const double from_below = 1.0 - r_min;
  const double from_above = 1.0 - 1.0 / r_max;
  m.beta = std::max({0.0, from_below, from_above});
  m.witness = from_below >= from_above ? at_min : at_max;
  return m;
}

MisalignmentReport MeasureMisalignment(const NormalFormGame& game) {
  return {ArithmeticMisalignment(game), GeometricMisalignment(game)};
}

double ArithmeticSinkingBound(double lambda_c, double mu_c, double beta,
                              int n) {
  return std::max((lambda_c - 4.0 * beta * n) / mu_c, 0.0);
}

double GeometricSinkingBound(double lambda_c, double mu_c, double beta,
                             int n) {
  const double keep = (1.0 - beta) * (1.0 - beta);
  return lambda_c / (keep * mu_c + (1.0 - keep) * n);
}

double ConservativeGeometricSinkingBound(double lambda_c, double mu_c,
                                         double beta, int n) {
  const double keep = (1.0 - beta) * (1.0 - beta);
  return keep * lambda_c / (keep * mu_c + (1.0 - keep) * n);
}

BoundReport TheoremBounds(const NormalFormGame& game) {
  BoundReport report;
  report.n = game.num_players();
  report.pos_exact = PriceOfSinking(game, ResponseMode::kBest).ratio;
  const SmoothnessParameters common = BestSmoothness(game, true);
  report.lambda_c = common.lambda;
  report.mu_c = common.mu;
  report.singleton_br = CheckSingletonBestResponse(game).singleton;
  report.misalignment = MeasureMisalignment(game);

  if (!report.singleton_br || report.mu_c <= 0.0) return report;
  if (const auto& beta = report.misalignment.arithmetic.beta) {
    report.bound_arith =
        ArithmeticSinkingBound(report.lambda_c, report.mu_c, *beta, report.n);
    report.satisfied_arith =
        report.pos_exact >= *report.bound_arith - kSlackTolerance;
  }
  if (const auto& beta = report.misalignment.geometric.beta) {
    report.bound_geo =
        GeometricSinkingBound(report.lambda_c, report.mu_c, *beta, report.n);
    report.bound_geo_conservative = ConservativeGeometricSinkingBound(
        report.lambda_c, report.mu_c, *beta, report.n);
    report.satisfied_geo =
        report.pos_exact >= *report.bound_geo - kSlackTolerance;
  }
  return report;
}

std::vector<SinkWitness> BetterResponseWitness(const NormalFormGame& game,
                                               double lambda, double mu) {
  const SmoothnessCertificate cert = CheckSmoothness(game, lambda, mu, false);
  if (!cert.valid) {
    throw Error(ErrorCode::kInvalidParameters,
                "(lambda, mu) is not a valid smoothness certificate; slack " +
                    std::to_string(cert.min_slack) + " at profile " +
                    std::to_string(cert.tightest_state));
  }
  const Optimum opt = OptimalProfile(game);
  const double ratio = mu > 0.0 ? lambda / mu : 0.0;
  const double threshold = ratio * opt.welfare - kSlackTolerance;

  std::vector<SinkWitness> witnesses;
  const TransitionKernel kernel = BuildKernel(game, ResponseMode::kBetter);
  for (auto& support : SinkComponents(kernel)) {
    SinkWitness w;
    for (ProfileIndex a : support) {
      if (w.witness < 0 || game.welfare(a) > w.welfare) {
        w.witness = a;
        w.welfare = game.welfare(a);
      }
      if (!w.deviation_free) {
        bool free = true;
        for (int i = 0; i < game.num_players() && free; ++i) {
          const ProfileIndex dev =
              game.with_action(a, i, opt.profile.coords[i]);
          free = game.utility(i, a) - game.utility(i, dev) >= 0.0;
        }
        if (free) w.deviation_free = a;
      }
    }
    w.pass = w.welfare >= threshold;
    if (!w.pass) {
      throw Error(ErrorCode::kWitnessNotFound,
                  "better-response sink containing profile " +
                      std::to_string(support.front()) +
                      " has no profile with welfare >= " +
                      std::to_string(ratio) + " * W(opt)");
    }
    w.support = std::move(support);
    witnesses.push_back(std::move(w));
  }
  return witnesses;
}

}  // namespace sinkeq
