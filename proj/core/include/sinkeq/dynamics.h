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

#ifndef SINKEQ_DYNAMICS_H_
#define SINKEQ_DYNAMICS_H_

#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "sinkeq/game.h"

namespace sinkeq {

enum class ResponseMode { kBest, kBetter };

std::string_view ResponseModeName(ResponseMode mode);
// Accepts "best" or "better"; throws Error(kInvalidParameters) otherwise.
ResponseMode ParseResponseMode(std::string_view name);

// The actions player `player` may move to from a given profile.
struct ResponseSet {
  int player = 0;
  std::vector<int> actions;  // increasing, nonempty
};

// Actions within tie_tol of player's best deviation payoff given the others'
// actions. tie_tol == 0 gives the exact argmax set.
ResponseSet BestResponseSet(const NormalFormGame& game, int player,
                            ProfileIndex state, double tie_tol = 0.0);

// Actions that do not lower player's utility; always contains the current
// action.
ResponseSet BetterResponseSet(const NormalFormGame& game, int player,
                              ProfileIndex state);

struct Transition {
  ProfileIndex target = 0;
  double probability = 0.0;
};

// Row-stochastic transition matrix of the response process, stored CSR.
// Rows are sorted by target and contain strictly positive entries only.
class TransitionKernel {
 public:
  TransitionKernel(ResponseMode mode, std::vector<std::size_t> row_offsets,
                   std::vector<Transition> entries);

  ResponseMode mode() const { return mode_; }
  ProfileIndex num_states() const {
    return static_cast<ProfileIndex>(row_offsets_.size()) - 1;
  }
  std::size_t num_transitions() const { return entries_.size(); }

  std::span<const Transition> row(ProfileIndex state) const {
    return std::span<const Transition>(entries_).subspan(
        row_offsets_[state], row_offsets_[state + 1] - row_offsets_[state]);
  }

  // Pr(target | source); zero when there is no such edge.
  double probability(ProfileIndex source, ProfileIndex target) const;

 private:
  ResponseMode mode_;
  std::vector<std::size_t> row_offsets_;
  std::vector<Transition> entries_;
};

// At each step one player, chosen uniformly, moves to an action drawn
// uniformly from its response set. Moves by different players that land on
// the same profile (only possible for the self-loop) add up. tie_tol is
// ignored in better-response mode.
TransitionKernel BuildKernel(const NormalFormGame& game, ResponseMode mode,
                             double tie_tol = 0.0);

struct SingletonCheck {
  bool singleton = true;
  // First (player, state) in (state, player) order with |BR| > 1.
  int player = -1;
  ProfileIndex state = -1;
};

// Exact (tie_tol = 0) check that every best-response set is a singleton.
SingletonCheck CheckSingletonBestResponse(const NormalFormGame& game);

// Edge list with header "src,dst,prob", one row per positive entry.
void WriteKernelCsv(const TransitionKernel& kernel, std::ostream& out);

// max over rows of |1 - row sum|.
double MaxRowSumError(const TransitionKernel& kernel);

}  // namespace sinkeq

#endif  // SINKEQ_DYNAMICS_H_
