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

#include "mtdgame/markov_game.hpp"

#include <algorithm>
#include <map>

#include "mtdgame/errors.hpp"

namespace mtdgame {
namespace {

std::vector<Outcome> split(std::size_t target, std::size_t stay,
                           double p_advance) {
  std::vector<Outcome> out;
  if (p_advance > 0.0) out.push_back({target, p_advance});
  if (p_advance < 1.0) out.push_back({stay, 1.0 - p_advance});
  std::sort(out.begin(), out.end(),
            [](const Outcome& a, const Outcome& b) { return a.state < b.state; });
  return out;
}

}  // namespace

std::string Action::name() const {
  switch (kind) {
    case ActionKind::NoAct: return "no-act";
    case ActionKind::Exploit: return "exp:" + exploit;
    case ActionKind::NoMon: return "no-mon";
    case ActionKind::Monitor: return "mon:" + exploit;
  }
  return "?";
}

MarkovGame::MarkovGame(std::vector<GameState> states, std::size_t initial,
                       double gamma, std::set<std::string> vulnerabilities)
    : states_(std::move(states)),
      initial_(initial),
      gamma_(gamma),
      vulns_(std::move(vulnerabilities)) {}

std::size_t MarkovGame::index_of(std::string_view node) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].node == node) return i;
  }
  throw UnknownKeyError("unknown state \"" + std::string(node) + "\"");
}

MarkovGame build_game(const AttackGraph& g, const Catalog& catalog,
                      const GameConfig& cfg) {
  cfg.validate();
  ValidationReport report = validate_graph(g);
  if (!report.ok()) {
    throw ValidationError("attack graph does not validate:\n" + report.to_string());
  }

  std::map<std::string, std::size_t> index;
  std::vector<GameState> states;
  for (const auto& n : g.nodes()) {
    if (!n.is_state()) continue;
    index.emplace(n.id, states.size());
    GameState s;
    s.node = n.id;
    s.terminal = n.kind == NodeKind::Goal;
    states.push_back(std::move(s));
  }

  std::set<std::string> vulns;
  for (std::size_t si = 0; si < states.size(); ++si) {
    GameState& s = states[si];
    s.attacker.push_back({ActionKind::NoAct, "", ""});
    s.defender.push_back({ActionKind::NoMon, "", ""});

    struct Attempt {
      std::size_t target;
      double cia;
      double p_success;
    };
    std::vector<Attempt> attempts;
    if (!s.terminal) {
      for (const auto& exploit : g.exploits_from(s.node)) {
        const AgNode* node = g.find(exploit);
        const VulnRecord& v = catalog.at(*node->vuln_ref);
        vulns.insert(v.key);
        s.attacker.push_back({ActionKind::Exploit, exploit, v.key});
        s.defender.push_back({ActionKind::Monitor, exploit, v.key});
        attempts.push_back({index.at(g.exploit_targets(exploit).front()), v.cia,
                            ac_to_probability(v.ac, cfg.ac_map)});
      }
    }

    const std::size_t m = s.attacker.size();
    const std::size_t n = s.defender.size();
    s.reward.assign(m * n, 0.0);
    s.next.assign(m * n, {});
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double& r = s.reward[i * n + j];
        auto& next = s.next[i * n + j];
        if (s.terminal || i == 0) {
          r = (!s.terminal && j > 0) ? cfg.monitor_cost : 0.0;
          next = {{si, 1.0}};
          continue;
        }
        const Attempt& a = attempts[i - 1];
        // Monitor action j watches exploit j-1; only the matching one bites.
        const bool watched = j == i;
        r = watched ? -a.cia : a.cia;
        double p = watched ? a.p_success * (1.0 - cfg.p_detect) : a.p_success;
        next = split(a.target, si, p);
      }
    }
  }

  return MarkovGame(std::move(states), index.at(g.initial()), cfg.gamma,
                    std::move(vulns));
}

MarkovGame restrict_game(const MarkovGame& game,
                         const std::set<std::string>& patched) {
  for (const auto& key : patched) {
    if (!game.vulnerabilities().count(key)) {
      throw UnknownKeyError("vulnerability \"" + key + "\" is not in the game");
    }
  }
  std::vector<GameState> states;
  states.reserve(game.size());
  for (const auto& s : game.states()) {
    auto keep = [&](const Action& a) {
      return a.vuln.empty() || !patched.count(a.vuln);
    };
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < s.rows(); ++i) {
      if (keep(s.attacker[i])) rows.push_back(i);
    }
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (keep(s.defender[j])) cols.push_back(j);
    }
    GameState out;
    out.node = s.node;
    out.terminal = s.terminal;
    for (auto i : rows) out.attacker.push_back(s.attacker[i]);
    for (auto j : cols) out.defender.push_back(s.defender[j]);
    for (auto i : rows) {
      for (auto j : cols) {
        out.reward.push_back(s.r(i, j));
        out.next.push_back(s.tau(i, j));
      }
    }
    states.push_back(std::move(out));
  }
  std::set<std::string> remaining;
  std::set_difference(game.vulnerabilities().begin(), game.vulnerabilities().end(),
                      patched.begin(), patched.end(),
                      std::inserter(remaining, remaining.end()));
  return MarkovGame(std::move(states), game.initial(), game.gamma(),
                    std::move(remaining));
}

}  // namespace mtdgame
