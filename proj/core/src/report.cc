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

#include "sinkeq/report.h"

#include "sinkeq/error.h"

namespace sinkeq {
namespace {

Json Optional(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

Json ProfileJson(const NormalFormGame& game, ProfileIndex flat) {
  Json j;
  j["index"] = flat;
  j["coords"] = IndexToJoint(game, flat).coords;
  j["name"] = ProfileName(game, flat);
  return j;
}

Json SinkReportJson(const NormalFormGame& game, const SinkingResult& result) {
  const Optimum opt = OptimalProfile(game);
  Json sinks = Json::array();
  for (const SinkEquilibrium& eq : result.equilibria) {
    Json s;
    s["size"] = eq.support.size();
    s["support"] = eq.support;
    Json coords = Json::array();
    Json names = Json::array();
    for (ProfileIndex a : eq.support) {
      coords.push_back(IndexToJoint(game, a).coords);
      names.push_back(ProfileName(game, a));
    }
    s["coords"] = std::move(coords);
    s["names"] = std::move(names);
    s["probabilities"] = eq.probabilities;
    s["expected_welfare"] = eq.expected_welfare;
    s["welfare_ratio"] = eq.expected_welfare / opt.welfare;
    s["stationary_residual"] = eq.residual;
    sinks.push_back(std::move(s));
  }
  Json j;
  j["optimum"] = ProfileJson(game, opt.profile.flat);
  j["optimal_welfare"] = opt.welfare;
  j["num_sinks"] = result.equilibria.size();
  j["sinks"] = std::move(sinks);
  j["price_of_sinking"] = result.ratio;
  return j;
}

Json NashReportJson(const NormalFormGame& game) {
  Json j;
  Json list = Json::array();
  for (const JointAction& ne : EnumerateNash(game)) {
    Json e = ProfileJson(game, ne.flat);
    e["welfare"] = game.welfare(ne.flat);
    list.push_back(std::move(e));
  }
  j["equilibria"] = std::move(list);
  try {
    j["price_of_anarchy"] = PriceOfAnarchy(game);
  } catch (const Error& e) {
    j["price_of_anarchy"] = nullptr;
    j["price_of_anarchy_error"] = std::string(ErrorCodeName(e.code()));
  }
  return j;
}

Json MisalignmentJson(const NormalFormGame& game,
                      const MisalignmentReport& report) {
  auto one = [&](const Misalignment& m) {
    Json j;
    j["beta"] = Optional(m.beta);
    if (m.witness.player >= 0) {
      j["witness"] = {{"player", m.witness.player},
                      {"profile", ProfileJson(game, m.witness.state)}};
    } else {
      j["witness"] = nullptr;
    }
    j["out_of_model"] = m.out_of_model;
    if (!m.reason.empty()) j["undefined_reason"] = m.reason;
    return j;
  };
  Json j;
  j["arithmetic"] = one(report.arithmetic);
  j["geometric"] = one(report.geometric);
  return j;
}

Json BoundReportJson(const NormalFormGame& game, const BoundReport& report) {
  Json j;
  j["pos_exact"] = report.pos_exact;
  j["n"] = report.n;
  j["lambda_c"] = report.lambda_c;
  j["mu_c"] = report.mu_c;
  j["singleton_br"] = report.singleton_br;
  j["misalignment"] = MisalignmentJson(game, report.misalignment);
  j["bound_arith"] = Optional(report.bound_arith);
  j["bound_geo"] = Optional(report.bound_geo);
  j["bound_geo_conservative"] = Optional(report.bound_geo_conservative);
  j["satisfied_arith"] =
      report.bound_arith ? Json(report.satisfied_arith) : Json(nullptr);
  j["satisfied_geo"] =
      report.bound_geo ? Json(report.satisfied_geo) : Json(nullptr);
  return j;
}

Json CertificateJson(const NormalFormGame& game,
                     const SmoothnessCertificate& cert, bool include_slack) {
  Json j;
  j["lambda"] = cert.lambda;
  j["mu"] = cert.mu;
  j["common_interest"] = cert.common_interest;
  j["optimum"] = ProfileJson(game, cert.opt.flat);
  j["valid"] = cert.valid;
  j["min_slack"] = cert.min_slack;
  j["tightest"] = ProfileJson(game, cert.tightest_state);
  if (include_slack) j["slack"] = cert.slack;
  return j;
}

Json WitnessJson(const NormalFormGame& game,
                 const std::vector<SinkWitness>& witnesses) {
  Json list = Json::array();
  for (const SinkWitness& w : witnesses) {
    Json j;
    j["support"] = w.support;
    j["witness"] = ProfileJson(game, w.witness);
    j["welfare"] = w.welfare;
    j["pass"] = w.pass;
    j["deviation_free"] = w.deviation_free
                              ? ProfileJson(game, *w.deviation_free)
                              : Json(nullptr);
    list.push_back(std::move(j));
  }
  return list;
}

Json MonteCarloJson(const MonteCarloSummary& summary) {
  Json j;
  j["trials"] = summary.trials;
  j["mean_pos"] = summary.mean_pos;
  j["std_err"] = summary.std_err;
  j["min_pos"] = summary.min_pos;
  j["bound"] = summary.bound;
  j["violations"] = summary.violations;
  return j;
}

}  // namespace sinkeq
