// Copyright 2026 The mtdgame Authors
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

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mtdgame/game_config.hpp"
#include "mtdgame/markov_game.hpp"
#include "mtdgame/matrix_solver.hpp"

namespace mtdgame {

enum class SolveMode { Exact, Pure };

std::string_view to_string(SolveMode mode);
// "exact" | "pure"; throws ConfigError otherwise.
SolveMode parse_solve_mode(std::string_view s);

// Indexed by state; terminal states hold 0.
using ValueFunction = std::vector<double>;
// Indexed by state, then by the state's action list.
using Policy = std::vector<std::vector<double>>;

struct BackupResult {
  ValueFunction values;
  Policy attacker_policy;
  Policy defender_policy;
};

struct EquilibriumSolution {
  ValueFunction values;
  Policy attacker_policy;
  Policy defender_policy;
  int iterations = 0;
  double residual = 0.0;  // sup-norm change of the last backup
  SolveMode mode = SolveMode::Exact;
  bool converged = false;
};

/// Stage game at state s against continuation values V:
/// Q(s, a1, a2) = R(s, a1, a2) + gamma * sum_s' tau(s, a1, a2)(s') * V(s').
/// Terminal states give the 1x1 zero matrix.
PayoffMatrix q_matrix(const MarkovGame& game, std::size_t s,
                      const ValueFunction& values);

/// One minimax backup: each non-terminal state's Q matrix is solved as a
/// matrix game (exact) or by its pure max-min (pure). States are processed
/// on up to `threads` workers; the result does not depend on the count.
BackupResult backup(const MarkovGame& game, const ValueFunction& values,
                    SolveMode mode, int threads = 1);

inline BackupResult shapley_backup(const MarkovGame& game,
                                   const ValueFunction& values,
                                   int threads = 1) {
  return backup(game, values, SolveMode::Exact, threads);
}

/// Value iteration from V = 0 until the sup-norm change is at most
/// cfg.epsilon, or for exactly cfg.max_iters backups when epsilon is 0.
/// The discount is the game's own; it must be < 1 (ConfigError otherwise).
/// Hitting max_iters with epsilon > 0 returns the last iterate with
/// converged = false.
EquilibriumSolution solve(const MarkovGame& game, const GameConfig& cfg,
                          SolveMode mode);

inline EquilibriumSolution solve_exact(const MarkovGame& game,
                                       const GameConfig& cfg) {
  return solve(game, cfg, SolveMode::Exact);
}

// Attacker restricted to pure strategies: each backup takes the max-min
// entry of the Q matrix, and both policies are deterministic.
inline EquilibriumSolution solve_pure(const MarkovGame& game,
                                      const GameConfig& cfg) {
  return solve(game, cfg, SolveMode::Pure);
}

// ||backup(V) - V||_inf using the solution's own mode.
double bellman_residual(const MarkovGame& game,
                        const EquilibriumSolution& solution, int threads = 1);

double sup_distance(const ValueFunction& a, const ValueFunction& b);

}  // namespace mtdgame
