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

#include "sinkeq/dynamics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "sinkeq/error.h"

namespace sinkeq {

std::string_view ResponseModeName(ResponseMode mode) {
  return mode == ResponseMode::kBest ? "best" : "better";
}

ResponseMode ParseResponseMode(std::string_view name) {
  if (name == "best") return ResponseMode::kBest;
  if (name == "better") return ResponseMode::kBetter;
  throw Error(ErrorCode::kInvalidParameters,
              "unknown response mode '" + std::string(name) + "'");
}

ResponseSet BestResponseSet(const NormalFormGame& game, int player,
                            ProfileIndex state, double tie_tol) {
  if (!(tie_tol >= 0.0)) {
    throw Error(ErrorCode::kInvalidParameters, "tie tolerance must be >= 0");
  }
  const int count = game.num_actions(player);
  const ProfileIndex base = game.with_action(state, player, 0);
  const ProfileIndex stride = game.stride(player);
  double best = game.utility(player, base);
  for (int k = 1; k < count; ++k) {
    best = std::max(best, game.utility(player, base + k * stride));
  }
  ResponseSet set{player, {}};
  for (int k = 0; k < count; ++k) {
    if (game.utility(player, base + k * stride) >= best - tie_tol) {
      set.actions.push_back(k);
    }
  }
  return set;
}

ResponseSet BetterResponseSet(const NormalFormGame& game, int player,
                              ProfileIndex state) {
  const double current = game.utility(player, state);
  const ProfileIndex base = game.with_action(state, player, 0);
  ResponseSet set{player, {}};
  for (int k = 0; k < game.num_actions(player); ++k) {
    if (game.utility(player, base + k * game.stride(player)) >= current) {
      set.actions.push_back(k);
    }
  }
  return set;
}

TransitionKernel::TransitionKernel(ResponseMode mode,
                                   std::vector<std::size_t> row_offsets,
                                   std::vector<Transition> entries)
    : mode_(mode),
      row_offsets_(std::move(row_offsets)),
      entries_(std::move(entries)) {}

double TransitionKernel::probability(ProfileIndex source,
                                     ProfileIndex target) const {
  const auto r = row(source);
  auto it = std::lower_bound(
      r.begin(), r.end(), target,
      [](const Transition& t, ProfileIndex value) { return t.target < value; });
  return (it != r.end() && it->target == target) ? it->probability : 0.0;
}

TransitionKernel BuildKernel(const NormalFormGame& game, ResponseMode mode,
                             double tie_tol) {
  const ProfileIndex states = game.num_profiles();
  const int n = game.num_players();
  std::vector<std::size_t> offsets;
  offsets.reserve(states + 1);
  offsets.push_back(0);
  std::vector<Transition> entries;
  std::vector<Transition> row;

  for (ProfileIndex a = 0; a < states; ++a) {
    row.clear();
    double self = 0.0;
    for (int i = 0; i < n; ++i) {
      const ResponseSet set = mode == ResponseMode::kBest
                                  ? BestResponseSet(game, i, a, tie_tol)
                                  : BetterResponseSet(game, i, a);
      const double p = 1.0 / (static_cast<double>(n) * set.actions.size());
      const int current = game.action_of(a, i);
      for (int action : set.actions) {
        if (action == current) {
          self += p;
        } else {
          row.push_back({game.with_action(a, i, action), p});
        }
      }
    }
    if (self > 0.0) row.push_back({a, self});
    // Distinct players change distinct coordinates, so only the self-loop can
    // collect more than one contribution.
    std::sort(row.begin(), row.end(),
              [](const Transition& x, const Transition& y) {
                return x.target < y.target;
              });
    entries.insert(entries.end(), row.begin(), row.end());
    offsets.push_back(entries.size());
  }
  return TransitionKernel(mode, std::move(offsets), std::move(entries));
}

SingletonCheck CheckSingletonBestResponse(const NormalFormGame& game) {
  for (ProfileIndex a = 0; a < game.num_profiles(); ++a) {
    for (int i = 0; i < game.num_players(); ++i) {
      if (BestResponseSet(game, i, a).actions.size() != 1) {
        return {false, i, a};
      }
    }
  }
  return {};
}

void WriteKernelCsv(const TransitionKernel& kernel, std::ostream& out) {
  out << "src,dst,prob\n";
  char buf[64];
  for (ProfileIndex a = 0; a < kernel.num_states(); ++a) {
    for (const Transition& t : kernel.row(a)) {
      std::snprintf(buf, sizeof(buf), "%.17g", t.probability);
      out << a << ',' << t.target << ',' << buf << '\n';
    }
  }
}

double MaxRowSumError(const TransitionKernel& kernel) {
  double worst = 0.0;
  for (ProfileIndex a = 0; a < kernel.num_states(); ++a) {
    double sum = 0.0;
    for (const Transition& t : kernel.row(a)) sum += t.probability;
    worst = std::max(worst, std::abs(1.0 - sum));
  }
  return worst;
}

}  // namespace sinkeq
