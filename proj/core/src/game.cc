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

#include "sinkeq/game.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "sinkeq/error.h"

namespace sinkeq {
namespace {

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidGame, what);
}

}  // namespace

NormalFormGame::NormalFormGame(
    std::vector<int> action_counts, std::vector<double> welfare,
    std::vector<std::vector<double>> utilities,
    std::vector<std::vector<std::string>> action_labels)
    : action_counts_(std::move(action_counts)),
      welfare_(std::move(welfare)),
      utilities_(std::move(utilities)),
      action_labels_(std::move(action_labels)) {
  if (action_counts_.empty()) Invalid("game needs at least one player");
  if (utilities_.size() != action_counts_.size()) {
    Invalid("expected " + std::to_string(action_counts_.size()) +
            " utility tables, got " + std::to_string(utilities_.size()));
  }
  ProfileIndex size = 1;
  strides_.reserve(action_counts_.size());
  for (std::size_t i = 0; i < action_counts_.size(); ++i) {
    if (action_counts_[i] < 1) {
      Invalid("player " + std::to_string(i) + " has no actions");
    }
    strides_.push_back(size);
    if (size > kMaxProfiles / action_counts_[i]) {
      Invalid("joint action space exceeds " + std::to_string(kMaxProfiles) +
              " profiles");
    }
    size *= action_counts_[i];
  }
  if (static_cast<ProfileIndex>(welfare_.size()) != size) {
    Invalid("welfare has " + std::to_string(welfare_.size()) +
            " entries, expected " + std::to_string(size));
  }
  for (std::size_t a = 0; a < welfare_.size(); ++a) {
    if (!std::isfinite(welfare_[a]) || welfare_[a] < 0.0) {
      Invalid("welfare[" + std::to_string(a) +
              "] must be finite and nonnegative");
    }
  }
  for (std::size_t i = 0; i < utilities_.size(); ++i) {
    if (static_cast<ProfileIndex>(utilities_[i].size()) != size) {
      Invalid("utilities[" + std::to_string(i) + "] has " +
              std::to_string(utilities_[i].size()) + " entries, expected " +
              std::to_string(size));
    }
    for (std::size_t a = 0; a < utilities_[i].size(); ++a) {
      if (!std::isfinite(utilities_[i][a])) {
        Invalid("utilities[" + std::to_string(i) + "][" + std::to_string(a) +
                "] is not finite");
      }
    }
  }
  if (!action_labels_.empty()) {
    if (action_labels_.size() != action_counts_.size()) {
      Invalid("labels must list one array per player");
    }
    for (std::size_t i = 0; i < action_labels_.size(); ++i) {
      if (static_cast<int>(action_labels_[i].size()) != action_counts_[i]) {
        Invalid("labels[" + std::to_string(i) + "] must have " +
                std::to_string(action_counts_[i]) + " entries");
      }
    }
  }
}

bool NormalFormGame::is_common_interest() const {
  for (const auto& table : utilities_) {
    if (table != welfare_) return false;
  }
  return true;
}

ProfileIndex JointToIndex(const NormalFormGame& game,
                          std::span<const int> coords) {
  if (static_cast<int>(coords.size()) != game.num_players()) {
    throw Error(ErrorCode::kInvalidAction,
                "joint action has " + std::to_string(coords.size()) +
                    " coordinates, game has " +
                    std::to_string(game.num_players()) + " players");
  }
  ProfileIndex flat = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    if (coords[i] < 0 || coords[i] >= game.num_actions(i)) {
      throw Error(ErrorCode::kInvalidAction,
                  "action " + std::to_string(coords[i]) + " of player " +
                      std::to_string(i) + " is out of range [0, " +
                      std::to_string(game.num_actions(i)) + ")");
    }
    flat += coords[i] * game.stride(i);
  }
  return flat;
}

JointAction IndexToJoint(const NormalFormGame& game, ProfileIndex flat) {
  if (flat < 0 || flat >= game.num_profiles()) {
    throw Error(ErrorCode::kInvalidAction,
                "profile index " + std::to_string(flat) + " out of range");
  }
  JointAction joint;
  joint.flat = flat;
  joint.coords.resize(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    joint.coords[i] = game.action_of(flat, i);
  }
  return joint;
}

Optimum OptimalProfile(const NormalFormGame& game) {
  ProfileIndex best = 0;
  for (ProfileIndex a = 1; a < game.num_profiles(); ++a) {
    if (game.welfare(a) > game.welfare(best)) best = a;
  }
  return {IndexToJoint(game, best), game.welfare(best)};
}

bool IsNash(const NormalFormGame& game, ProfileIndex flat) {
  for (int i = 0; i < game.num_players(); ++i) {
    const double current = game.utility(i, flat);
    for (int action = 0; action < game.num_actions(i); ++action) {
      if (game.utility(i, game.with_action(flat, i, action)) > current) {
        return false;
      }
    }
  }
  return true;
}

std::vector<JointAction> EnumerateNash(const NormalFormGame& game) {
  std::vector<JointAction> equilibria;
  for (ProfileIndex a = 0; a < game.num_profiles(); ++a) {
    if (IsNash(game, a)) equilibria.push_back(IndexToJoint(game, a));
  }
  return equilibria;
}

double PriceOfAnarchy(const NormalFormGame& game) {
  const Optimum opt = OptimalProfile(game);
  if (opt.welfare <= 0.0) {
    throw Error(ErrorCode::kDegenerateWelfare,
                "optimal welfare is zero; price of anarchy is undefined");
  }
  const std::vector<JointAction> equilibria = EnumerateNash(game);
  if (equilibria.empty()) {
    throw Error(ErrorCode::kNoEquilibrium, "game has no pure Nash equilibrium");
  }
  double worst = game.welfare(equilibria.front().flat);
  for (const JointAction& ne : equilibria) {
    worst = std::min(worst, game.welfare(ne.flat));
  }
  return worst / opt.welfare;
}

std::string ProfileName(const NormalFormGame& game, ProfileIndex flat) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < game.num_players(); ++i) {
    if (i > 0) out << ',';
    const int action = game.action_of(flat, i);
    if (game.has_labels()) {
      out << game.action_labels()[i][action];
    } else {
      out << action;
    }
  }
  out << ')';
  return out.str();
}

}  // namespace sinkeq
