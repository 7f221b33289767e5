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

#ifndef SINKEQ_TESTS_TESTING_ORACLES_H_
#define SINKEQ_TESTS_TESTING_ORACLES_H_

// Brute-force reference computations. These work on explicit coordinate
// vectors and dense matrices and share no code paths with the library
// beyond reading the game's tables.

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "sinkeq/dynamics.h"
#include "sinkeq/game.h"

namespace sinkeq::testing {

using Coords = std::vector<int>;
using DenseMatrix = std::vector<std::vector<double>>;

inline std::vector<Coords> AllProfiles(const NormalFormGame& game) {
  std::vector<Coords> out;
  Coords c(game.num_players(), 0);
  while (true) {
    out.push_back(c);
    int i = 0;
    while (i < game.num_players() && ++c[i] == game.num_actions(i)) c[i++] = 0;
    if (i == game.num_players()) break;
  }
  return out;
}

// Position of `c` in AllProfiles order, computed by search.
inline std::size_t Locate(const std::vector<Coords>& all, const Coords& c) {
  return std::find(all.begin(), all.end(), c) - all.begin();
}

inline double U(const NormalFormGame& game, const std::vector<Coords>& all,
                int player, const Coords& c) {
  return game.utility(player, static_cast<ProfileIndex>(Locate(all, c)));
}

inline std::vector<std::size_t> BruteForceNash(const NormalFormGame& game) {
  const auto all = AllProfiles(game);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    bool stable = true;
    for (int i = 0; i < game.num_players() && stable; ++i) {
      for (int x = 0; x < game.num_actions(i) && stable; ++x) {
        Coords dev = all[k];
        dev[i] = x;
        if (U(game, all, i, dev) > U(game, all, i, all[k])) stable = false;
      }
    }
    if (stable) out.push_back(k);
  }
  return out;
}

// Dense Pr(b | a) by literal case analysis over (a, b, player) triples.
inline DenseMatrix DenseKernel(const NormalFormGame& game, ResponseMode mode) {
  const auto all = AllProfiles(game);
  const std::size_t size = all.size();
  const int n = game.num_players();
  DenseMatrix P(size, std::vector<double>(size, 0.0));
  for (std::size_t a = 0; a < size; ++a) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> allowed;
      double best = -INFINITY;
      for (int x = 0; x < game.num_actions(i); ++x) {
        Coords dev = all[a];
        dev[i] = x;
        best = std::max(best, U(game, all, i, dev));
      }
      for (int x = 0; x < game.num_actions(i); ++x) {
        Coords dev = all[a];
        dev[i] = x;
        const double u = U(game, all, i, dev);
        const bool ok = mode == ResponseMode::kBest
                            ? u == best
                            : u >= U(game, all, i, all[a]);
        if (ok) allowed.push_back(x);
      }
      for (std::size_t b = 0; b < size; ++b) {
        bool others_equal = true;
        for (int j = 0; j < n; ++j) {
          if (j != i && all[b][j] != all[a][j]) others_equal = false;
        }
        if (!others_equal) continue;
        if (std::find(allowed.begin(), allowed.end(), all[b][i]) !=
            allowed.end()) {
          P[a][b] += 1.0 / (n * static_cast<double>(allowed.size()));
        }
      }
    }
  }
  return P;
}

// reach[a][b]: b reachable from a in >= 0 steps (Floyd-Warshall closure).
inline std::vector<std::vector<char>> Reachability(const DenseMatrix& P) {
  const std::size_t size = P.size();
  std::vector<std::vector<char>> reach(size, std::vector<char>(size, 0));
  for (std::size_t a = 0; a < size; ++a) {
    reach[a][a] = 1;
    for (std::size_t b = 0; b < size; ++b) {
      if (P[a][b] > 0.0) reach[a][b] = 1;
    }
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t a = 0; a < size; ++a) {
      if (!reach[a][k]) continue;
      for (std::size_t b = 0; b < size; ++b) {
        if (reach[k][b]) reach[a][b] = 1;
      }
    }
  }
  return reach;
}

// A state is in a sink iff everything it reaches reaches it back.
inline std::set<std::vector<ProfileIndex>> BruteForceSinks(const DenseMatrix& P) {
  const auto reach = Reachability(P);
  std::set<std::vector<ProfileIndex>> sinks;
  for (std::size_t a = 0; a < P.size(); ++a) {
    bool closed = true;
    std::vector<ProfileIndex> component;
    for (std::size_t b = 0; b < P.size(); ++b) {
      if (reach[a][b] && !reach[b][a]) closed = false;
      if (reach[a][b] && reach[b][a]) component.push_back(static_cast<ProfileIndex>(b));
    }
    if (closed) sinks.insert(component);
  }
  return sinks;
}

// Lazy-chain power iteration in long double, started from uniform on the
// support.
inline std::vector<double> PowerStationary(const DenseMatrix& P,
                                           const std::vector<ProfileIndex>& support,
                                           int steps = 200000) {
  const std::size_t m = support.size();
  std::vector<long double> pi(m, 1.0L / m), next(m);
  for (int s = 0; s < steps; ++s) {
    for (std::size_t k = 0; k < m; ++k) next[k] = 0.5L * pi[k];
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < m; ++j) {
        next[j] += 0.5L * P[support[k]][support[j]] * pi[k];
      }
    }
    long double change = 0.0L;
    for (std::size_t k = 0; k < m; ++k) change = std::max(change, std::abs(next[k] - pi[k]));
    pi.swap(next);
    if (change < 1e-17L) break;
  }
  return std::vector<double>(pi.begin(), pi.end());
}

}  // namespace sinkeq::testing

#endif  // SINKEQ_TESTS_TESTING_ORACLES_H_
