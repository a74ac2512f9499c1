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

#include "mtdgame/game_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mtdgame/errors.hpp"
#include "mtdgame/parallel.hpp"

namespace mtdgame {
namespace {

std::vector<double> one_hot(std::size_t size, std::size_t at) {
  std::vector<double> p(size, 0.0);
  p[at] = 1.0;
  return p;
}

// Certificate tolerance relative to the magnitude of the stage game.
double certificate_tol(const PayoffMatrix& q) {
  double scale = 1.0;
  for (double v : q.data()) scale = std::max(scale, std::abs(v));
  return 1e-9 * scale;
}

}  // namespace

std::string_view to_string(SolveMode mode) {
  return mode == SolveMode::Exact ? "exact" : "pure";
}

SolveMode parse_solve_mode(std::string_view s) {
  if (s == "exact") return SolveMode::Exact;
  if (s == "pure") return SolveMode::Pure;
  throw ConfigError("unknown solver mode \"" + std::string(s) + "\"");
}

PayoffMatrix q_matrix(const MarkovGame& game, std::size_t s,
                      const ValueFunction& values) {
  const GameState& st = game.state(s);
  if (st.terminal) return PayoffMatrix(1, 1, 0.0);
  PayoffMatrix q(st.rows(), st.cols());
  for (std::size_t i = 0; i < st.rows(); ++i) {
    for (std::size_t j = 0; j < st.cols(); ++j) {
      double cont = 0.0;
      for (const Outcome& o : st.tau(i, j)) cont += o.prob * values[o.state];
      q(i, j) = st.r(i, j) + game.gamma() * cont;
    }
  }
  return q;
}

BackupResult backup(const MarkovGame& game, const ValueFunction& values,
                    SolveMode mode, int threads) {
  const std::size_t n = game.size();
  BackupResult out{ValueFunction(n, 0.0), Policy(n), Policy(n)};
  parallel_for(n, threads, [&](std::size_t s) {
    const GameState& st = game.state(s);
    if (st.terminal) {
      out.attacker_policy[s] = one_hot(st.rows(), 0);
      out.defender_policy[s] = one_hot(st.cols(), 0);
      return;
    }
    PayoffMatrix q = q_matrix(game, s, values);
    if (mode == SolveMode::Exact) {
      MatrixSolution sol = solve_matrix_game(q, certificate_tol(q));
      out.values[s] = sol.value;
      out.attacker_policy[s] = std::move(sol.row_strategy);
      out.defender_policy[s] = std::move(sol.col_strategy);
    } else {
      PureSolution sol = pure_minimax(q);
      out.values[s] = sol.value;
      out.attacker_policy[s] = one_hot(q.rows(), sol.row);
      out.defender_policy[s] = one_hot(q.cols(), sol.col);
    }
  });
  return out;
}

double sup_distance(const ValueFunction& a, const ValueFunction& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

EquilibriumSolution solve(const MarkovGame& game, const GameConfig& cfg,
                          SolveMode mode) {
  cfg.validate();
  if (!(game.gamma() < 1.0)) {
    throw ConfigError("discount must be < 1 for " + std::string(to_string(mode)) +
                      " mode");
  }
  EquilibriumSolution sol;
  sol.mode = mode;
  sol.values.assign(game.size(), 0.0);
  for (int k = 1; k <= cfg.max_iters; ++k) {
    BackupResult next = backup(game, sol.values, mode, cfg.threads);
    sol.residual = sup_distance(next.values, sol.values);
    sol.values = std::move(next.values);
    sol.attacker_policy = std::move(next.attacker_policy);
    sol.defender_policy = std::move(next.defender_policy);
    sol.iterations = k;
    if (cfg.epsilon > 0.0 && sol.residual <= cfg.epsilon) {
      sol.converged = true;
      return sol;
    }
  }
  sol.converged = cfg.epsilon == 0.0;
  return sol;
}

double bellman_residual(const MarkovGame& game,
                        const EquilibriumSolution& solution, int threads) {
  return sup_distance(backup(game, solution.values, solution.mode, threads).values,
                      solution.values);
}

}  // namespace mtdgame
