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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mtdgame/attack_graph.hpp"
#include "mtdgame/game_config.hpp"
#include "mtdgame/vuln_catalog.hpp"

namespace mtdgame {

enum class ActionKind { NoAct, Exploit, NoMon, Monitor };

struct Action {
  ActionKind kind = ActionKind::NoAct;
  std::string exploit;  // empty for no-act / no-mon
  std::string vuln;     // catalog key of `exploit`

  // "no-act", "exp:<exploit>", "no-mon", "mon:<exploit>"
  std::string name() const;
  bool operator==(const Action&) const = default;
};

struct Outcome {
  std::size_t state = 0;
  double prob = 0.0;
  bool operator==(const Outcome&) const = default;
};

/// One state of the game with its normal-form stage: attacker actions index
/// rows, defender actions index columns. Rewards are the attacker's payoff;
/// the defender receives the negation.
struct GameState {
  std::string node;
  bool terminal = false;
  std::vector<Action> attacker;
  std::vector<Action> defender;
  std::vector<double> reward;                // row-major |attacker| x |defender|
  std::vector<std::vector<Outcome>> next;    // same indexing, sorted by state

  std::size_t rows() const { return attacker.size(); }
  std::size_t cols() const { return defender.size(); }
  double r(std::size_t a1, std::size_t a2) const { return reward[a1 * cols() + a2]; }
  const std::vector<Outcome>& tau(std::size_t a1, std::size_t a2) const {
    return next[a1 * cols() + a2];
  }
  bool operator==(const GameState&) const = default;
};

class MarkovGame {
 public:
  MarkovGame() = default;
  MarkovGame(std::vector<GameState> states, std::size_t initial, double gamma,
             std::set<std::string> vulnerabilities);

  const std::vector<GameState>& states() const { return states_; }
  const GameState& state(std::size_t i) const { return states_.at(i); }
  std::size_t size() const { return states_.size(); }
  std::size_t initial() const { return initial_; }
  double gamma() const { return gamma_; }
  // Catalog keys of every exploitable vulnerability still in the game.
  const std::set<std::string>& vulnerabilities() const { return vulns_; }

  // Throws UnknownKeyError.
  std::size_t index_of(std::string_view node) const;

  bool operator==(const MarkovGame&) const = default;

 private:
  std::vector<GameState> states_;
  std::size_t initial_ = 0;
  double gamma_ = 0.9;
  std::set<std::string> vulns_;
};

/// Compiles a validated attack graph into a zero-sum Markov game.
///
/// States are the Privilege/Goal nodes in declaration order; Goal nodes are
/// absorbing with zero reward. At a non-terminal state the attacker may idle
/// or attempt any enabled exploit, and the defender may idle or monitor one
/// of those exploits. Exploit attempts pay +cia unless monitored (-cia);
/// success probability comes from the access-complexity map and is scaled
/// by (1 - p_detect) under monitoring. Idling against a monitor pays
/// monitor_cost. Failed attempts stay in place.
///
/// Throws ValidationError for an invalid graph, UnknownKeyError for a
/// vuln_ref missing from the catalog, ConfigError for a bad config.
MarkovGame build_game(const AttackGraph& g, const Catalog& catalog,
                      const GameConfig& cfg);

// Copy of `game` with every exploit/monitor action on a patched
// vulnerability removed. Throws UnknownKeyError for keys not in the game.
MarkovGame restrict_game(const MarkovGame& game,
                         const std::set<std::string>& patched);

}  // namespace mtdgame
