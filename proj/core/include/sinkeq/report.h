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

#ifndef SINKEQ_REPORT_H_
#define SINKEQ_REPORT_H_

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "sinkeq/game.h"
#include "sinkeq/monte_carlo.h"
#include "sinkeq/sink.h"
#include "sinkeq/smoothness.h"

namespace sinkeq {

// JSON renderings of analysis results. Key order is fixed so identical
// inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json ProfileJson(const NormalFormGame& game, ProfileIndex flat);

// Per-equilibrium support (indices and coordinates), probabilities,
// expected welfare and welfare ratio, plus the price of sinking.
Json SinkReportJson(const NormalFormGame& game, const SinkingResult& result);

Json NashReportJson(const NormalFormGame& game);

Json MisalignmentJson(const NormalFormGame& game,
                      const MisalignmentReport& report);

Json BoundReportJson(const NormalFormGame& game, const BoundReport& report);

// `include_slack` adds the per-profile slack array.
Json CertificateJson(const NormalFormGame& game,
                     const SmoothnessCertificate& cert, bool include_slack);

Json WitnessJson(const NormalFormGame& game,
                 const std::vector<SinkWitness>& witnesses);

Json MonteCarloJson(const MonteCarloSummary& summary);

}  // namespace sinkeq

#endif  // SINKEQ_REPORT_H_
