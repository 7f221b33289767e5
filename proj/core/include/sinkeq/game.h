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

#ifndef SINKEQ_GAME_H_
#define SINKEQ_GAME_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sinkeq {

// Flat index of a joint action. Player 0 is the least-significant digit of
// the mixed-radix encoding.
using ProfileIndex = std::int64_t;

// Upper limit on |A|. Tables are dense, so this bounds memory.
inline constexpr ProfileIndex kMaxProfiles = ProfileIndex{1} << 26;

struct JointAction {
  std::vector<int> coords;
  ProfileIndex flat = 0;

  friend bool operator==(const JointAction&, const JointAction&) = default;
};

// A finite normal-form game together with a nonnegative welfare function.
// Immutable after construction; the constructor validates every invariant
// and throws Error(kInvalidGame) on violation.
class NormalFormGame {
 public:
  NormalFormGame(std::vector<int> action_counts, std::vector<double> welfare,
                 std::vector<std::vector<double>> utilities,
                 std::vector<std::vector<std::string>> action_labels = {});

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  int num_actions(int player) const { return action_counts_[player]; }
  std::span<const int> action_counts() const { return action_counts_; }
  ProfileIndex num_profiles() const {
    return static_cast<ProfileIndex>(welfare_.size());
  }

  double welfare(ProfileIndex flat) const { return welfare_[flat]; }
  double utility(int player, ProfileIndex flat) const {
    return utilities_[player][flat];
  }
  std::span<const double> welfare_table() const { return welfare_; }
  std::span<const double> utility_table(int player) const {
    return utilities_[player];
  }

  // Empty when the game was built without labels.
  const std::vector<std::vector<std::string>>& action_labels() const {
    return action_labels_;
  }
  bool has_labels() const { return !action_labels_.empty(); }

  ProfileIndex stride(int player) const { return strides_[player]; }

  // Coordinate of `player` in the profile `flat`.
  int action_of(ProfileIndex flat, int player) const {
    return static_cast<int>((flat / strides_[player]) % action_counts_[player]);
  }

  // The profile obtained from `flat` by replacing player's action.
  ProfileIndex with_action(ProfileIndex flat, int player, int action) const {
    return flat + (action - action_of(flat, player)) * strides_[player];
  }

  // True when every utility table is bitwise equal to the welfare table.
  bool is_common_interest() const;

 private:
  std::vector<int> action_counts_;
  std::vector<ProfileIndex> strides_;
  std::vector<double> welfare_;
  std::vector<std::vector<double>> utilities_;
  std::vector<std::vector<std::string>> action_labels_;
};

// Throws Error(kInvalidAction) on a wrong arity or out-of-range coordinate.
ProfileIndex JointToIndex(const NormalFormGame& game,
                          std::span<const int> coords);
JointAction IndexToJoint(const NormalFormGame& game, ProfileIndex flat);

struct Optimum {
  JointAction profile;
  double welfare = 0.0;
};

// argmax W with ties broken toward the smallest flat index.
Optimum OptimalProfile(const NormalFormGame& game);

// No player has a strictly profitable unilateral deviation. Comparison is
// exact on the stored values.
bool IsNash(const NormalFormGame& game, ProfileIndex flat);

// All pure Nash equilibria in increasing flat order.
std::vector<JointAction> EnumerateNash(const NormalFormGame& game);

// min over pure NE of W(a_ne) / W(a_opt).
// Throws Error(kNoEquilibrium) if there is no pure NE and
// Error(kDegenerateWelfare) if W(a_opt) == 0.
double PriceOfAnarchy(const NormalFormGame& game);

// Human-readable profile, e.g. "(e1,f2)" with labels or "(0,1)" without.
std::string ProfileName(const NormalFormGame& game, ProfileIndex flat);

}  // namespace sinkeq

#endif  // SINKEQ_GAME_H_
