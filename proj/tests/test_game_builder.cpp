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

#include <doctest.h>

#include <cmath>
#include <map>

#include "mtdgame/errors.hpp"
#include "mtdgame/game_solver.hpp"
#include "mtdgame/markov_game.hpp"
#include "mtdgame/scenario_gen.hpp"

using namespace mtdgame;

namespace {

std::vector<std::string> names(const std::vector<Action>& actions) {
  std::vector<std::string> out;
  for (const auto& a : actions) out.push_back(a.name());
  return out;
}

double prob_to(const std::vector<Outcome>& dist, std::size_t state) {
  for (const auto& o : dist) {
    if (o.state == state) return o.prob;
  }
  return 0.0;
}

void check_stochastic(const MarkovGame& game) {
  for (const auto& s : game.states()) {
    REQUIRE(s.rows() >= 1);
    REQUIRE(s.cols() >= 1);
    CHECK(s.attacker[0].kind == ActionKind::NoAct);
    CHECK(s.defender[0].kind == ActionKind::NoMon);
    for (std::size_t i = 0; i < s.rows(); ++i) {
      for (std::size_t j = 0; j < s.cols(); ++j) {
        double total = 0.0;
        for (const auto& o : s.tau(i, j)) {
          CHECK(o.prob >= 0.0);
          total += o.prob;
        }
        CHECK(std::abs(total - 1.0) <= 1e-12);
      }
    }
  }
}

}  // namespace

TEST_SUITE("game_builder") {

TEST_CASE("stage game at LDAP root matches the two-service table") {
  Scenario fx = example_network();
  MarkovGame game = build_game(fx.graph, fx.catalog, GameConfig{});
  const GameState& s2 = game.state(game.index_of("LDAP:root"));
  CHECK(names(s2.attacker) ==
        std::vector<std::string>{"no-act", "exp:exploit-Web", "exp:exploit-FTP"});
  CHECK(names(s2.defender) ==
        std::vector<std::string>{"no-mon", "mon:exploit-Web", "mon:exploit-FTP"});
  CHECK(s2.r(2, 0) == 10.0);
  CHECK(s2.r(1, 1) == -7.0);
  CHECK(s2.r(0, 1) == 0.5);
  const double table[3][3] = {{0, 0.5, 0.5}, {7, -7, 7}, {10, 10, -10}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(s2.r(i, j) == table[i][j]);
}

TEST_CASE("transition probabilities follow access complexity and monitoring") {
  Scenario fx = example_network();
  MarkovGame game = build_game(fx.graph, fx.catalog, GameConfig{});
  const std::size_t s1 = game.index_of("LDAP:user");
  const std::size_t s2 = game.index_of("LDAP:root");
  const GameState& st = game.state(s1);
  CHECK(prob_to(st.tau(1, 0), s2) == doctest::Approx(0.66).epsilon(1e-15));
  CHECK(prob_to(st.tau(1, 0), s1) == doctest::Approx(0.34).epsilon(1e-15));
  CHECK(prob_to(st.tau(1, 1), s2) == doctest::Approx(0.66 * 0.05).epsilon(1e-15));
  CHECK(prob_to(st.tau(0, 1), s1) == 1.0);
  // Mis-targeted monitoring behaves like no monitoring.
  const GameState& root = game.state(s2);
  const std::size_t web = game.index_of("Web:root");
  CHECK(root.r(1, 2) == root.r(1, 0));
  CHECK(root.tau(1, 2) == root.tau(1, 0));
  CHECK(prob_to(root.tau(1, 0), web) == doctest::Approx(0.9));
}

TEST_CASE("uniform cia reward at the initial state") {
  // The initial state pays the LDAP score of 5, as in the vulnerability
  // table, rather than a per-state figure.
  Scenario fx = example_network();
  MarkovGame game = build_game(fx.graph, fx.catalog, GameConfig{});
  const GameState& s1 = game.state(game.index_of("LDAP:user"));
  CHECK(s1.r(0, 0) == 0.0);
  CHECK(s1.r(0, 1) == 0.5);
  CHECK(s1.r(1, 0) == 5.0);
  CHECK(s1.r(1, 1) == -5.0);
}

TEST_CASE("goal state is absorbing with zero reward") {
  Scenario fx = example_network();
  MarkovGame game = build_game(fx.graph, fx.catalog, GameConfig{});
  const std::size_t goal = game.index_of("FTP:root");
  const GameState& g = game.state(goal);
  CHECK(g.terminal);
  CHECK(g.rows() == 1);
  CHECK(g.cols() == 1);
  CHECK(g.r(0, 0) == 0.0);
  CHECK(g.tau(0, 0) == std::vector<Outcome>{{goal, 1.0}});
  CHECK(game.state(game.initial()).node == "LDAP:user");
}

TEST_CASE("build errors") {
  Scenario fx = example_network();
  Catalog partial({fx.catalog.at("dirtycow"), fx.catalog.at("web-xss")});
  CHECK_THROWS_AS(build_game(fx.graph, partial, GameConfig{}), UnknownKeyError);
  AttackGraph broken(fx.graph.nodes(), {}, fx.graph.initial(), fx.graph.goal());
  CHECK_THROWS_AS(build_game(broken, fx.catalog, GameConfig{}), ValidationError);
  GameConfig bad;
  bad.p_detect = 1.5;
  CHECK_THROWS_AS(build_game(fx.graph, fx.catalog, bad), ConfigError);
}

TEST_CASE("restricting removes exploit and monitor actions") {
  Scenario fx = example_network();
  MarkovGame game = build_game(fx.graph, fx.catalog, GameConfig{});
  MarkovGame patched = restrict_game(game, {"web-xss"});
  const GameState& s2 = patched.state(patched.index_of("LDAP:root"));
  CHECK(names(s2.attacker) == std::vector<std::string>{"no-act", "exp:exploit-FTP"});
  CHECK(names(s2.defender) == std::vector<std::string>{"no-mon", "mon:exploit-FTP"});
  CHECK(s2.r(1, 1) == -10.0);
  CHECK(patched.size() == game.size());
  CHECK(patched.vulnerabilities() == std::set<std::string>{"dirtycow", "ftp-rce"});
  check_stochastic(patched);

  CHECK(restrict_game(game, {}) == game);
  CHECK_THROWS_AS(restrict_game(game, {"heartbleed"}), UnknownKeyError);
}

TEST_CASE("patching everything leaves an idle game worth zero") {
  Scenario fx = example_network();
  GameConfig cfg;
  MarkovGame game = build_game(fx.graph, fx.catalog, cfg);
  MarkovGame idle = restrict_game(game, {"dirtycow", "web-xss", "ftp-rce"});
  for (const auto& s : idle.states()) {
    CHECK(s.rows() == 1);
    CHECK(s.cols() == 1);
  }
  // 1x1 stage games (no monitor actions remain) with zero reward.
  EquilibriumSolution sol = solve_exact(idle, cfg);
  CHECK(sol.values[idle.initial()] == 0.0);
}

TEST_CASE("transition kernels are stochastic and monotone on generated games") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    ScenarioSpec spec;
    spec.seed = seed;
    spec.n_vms = 2 + static_cast<int>(seed % 4);
    spec.n_layers = 1 + static_cast<int>(seed % spec.n_vms);
    spec.n_vulns = 5 + static_cast<int>(seed * 3 % 40);
    Scenario sc = generate_scenario(spec);
    MarkovGame game = build_game(sc.graph, sc.catalog, GameConfig{});
    check_stochastic(game);

    auto ranks = privilege_ranks(sc.graph);
    std::map<std::string, int> rank(ranks.begin(), ranks.end());
    for (std::size_t s = 0; s < game.size(); ++s) {
      const GameState& st = game.state(s);
      for (const auto& dist : st.next) {
        for (const auto& o : dist) {
          if (o.prob > 0.0) CHECK(rank[game.state(o.state).node] >= rank[st.node]);
        }
      }
    }
    CHECK(build_game(sc.graph, sc.catalog, GameConfig{}) == game);
  }
}

TEST_CASE("restriction is order independent") {
  ScenarioSpec spec;
  spec.seed = 11;
  spec.n_vulns = 30;
  Scenario sc = generate_scenario(spec);
  MarkovGame game = build_game(sc.graph, sc.catalog, GameConfig{});
  SplitMix64 rng(3);
  std::vector<std::string> keys(game.vulnerabilities().begin(), game.vulnerabilities().end());
  for (int trial = 0; trial < 50; ++trial) {
    std::set<std::string> a, b;
    for (const auto& k : keys) {
      const double u = rng.uniform();
      if (u < 0.2) a.insert(k);
      else if (u < 0.4) b.insert(k);
      else if (u < 0.5) { a.insert(k); b.insert(k); }
    }
    std::set<std::string> both = a;
    both.insert(b.begin(), b.end());
    std::set<std::string> b_rest;
    for (const auto& k : b) if (!a.count(k)) b_rest.insert(k);
    CHECK(restrict_game(game, both) == restrict_game(restrict_game(game, a), b_rest));
  }
}

}  // TEST_SUITE
