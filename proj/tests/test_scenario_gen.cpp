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
#include <set>

#include "mtdgame/attack_graph.hpp"
#include "mtdgame/errors.hpp"
#include "mtdgame/markov_game.hpp"
#include "mtdgame/scenario_gen.hpp"
#include "oracles.hpp"

using namespace mtdgame;

TEST_SUITE("scenario_gen") {

TEST_CASE("splitmix64 reference outputs") {
  // Published reference stream for seed 1234567.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("rng helpers stay in range and are reproducible") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const std::uint64_t k = a.below(7);
    CHECK(k == b.below(7));
    CHECK(k < 7);
  }
}

TEST_CASE("three-VM fixture") {
  Scenario s = example_network();
  CHECK(validate_graph(s.graph).ok());
  CHECK(s.graph.initial() == "LDAP:user");
  CHECK(s.graph.goal() == "FTP:root");
  CHECK(s.catalog.size() == 3);
  CHECK(s.catalog.at("dirtycow").cia == 5.0);
  CHECK(s.catalog.at("web-xss").cia == 7.0);
  CHECK(s.catalog.at("ftp-rce").cia == 10.0);
  CHECK(s.catalog.at("web-xss").ac == AccessComplexity::Easy);
  CHECK(s.catalog.at("ftp-rce").cve == "CVE-2015-3306");
  const auto paths = enumerate_attack_paths(s.graph, "LDAP:user", "FTP:root");
  CHECK(paths == std::vector<ExploitPath>{{"exploit-LDAP", "exploit-FTP"},
                                          {"exploit-LDAP", "exploit-Web", "exploit-FTP"}});
}

TEST_CASE("default generator produces a valid hundred-vulnerability network") {
  ScenarioSpec spec;
  Scenario s = generate_scenario(spec);
  CHECK(validate_graph(s.graph).ok());
  CHECK(s.catalog.size() == 100);
  std::size_t exploits = 0;
  std::set<std::string> vms;
  for (const auto& n : s.graph.nodes()) {
    if (n.kind == NodeKind::Exploit) ++exploits;
  }
  for (const auto& r : s.catalog.records()) {
    vms.insert(r.vm);
    CHECK(r.cia >= 0.0);
    CHECK(r.cia <= 10.0);
    CHECK(r.cia * 10.0 == doctest::Approx(std::round(r.cia * 10.0)));
  }
  CHECK(exploits == 100);
  CHECK(vms.size() <= 3);
  CHECK(s.catalog.records().front().key == "v001");
  // Every catalog entry is reachable as an exploit in the built game.
  MarkovGame game = build_game(s.graph, s.catalog, GameConfig{});
  CHECK(game.vulnerabilities().size() == 100);
}

TEST_CASE("generation is deterministic per seed") {
  ScenarioSpec spec;
  spec.seed = 123;
  Scenario a = generate_scenario(spec);
  Scenario b = generate_scenario(spec);
  CHECK(a.graph.to_json().dump() == b.graph.to_json().dump());
  CHECK(a.catalog.to_json().dump() == b.catalog.to_json().dump());
  spec.seed = 124;
  Scenario c = generate_scenario(spec);
  CHECK(a.catalog.to_json().dump() != c.catalog.to_json().dump());
}

TEST_CASE("generated paths agree with brute-force walks") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ScenarioSpec spec;
    spec.seed = seed;
    spec.n_vms = 4;
    spec.n_vulns = 8;
    Scenario s = generate_scenario(spec);
    CHECK(enumerate_attack_paths(s.graph, s.graph.initial(), s.graph.goal()) ==
          oracle::brute_force_paths(s.graph, s.graph.initial(), s.graph.goal()));
  }
}

TEST_CASE("layers, ranges and weights are honoured") {
  ScenarioSpec spec;
  spec.seed = 9;
  spec.n_vms = 6;
  spec.n_layers = 3;
  spec.n_vulns = 40;
  spec.cia_lo = 2.0;
  spec.cia_hi = 4.0;
  spec.ac_weights = {0.0, 0.0, 1.0};
  Scenario s = generate_scenario(spec);
  CHECK(validate_graph(s.graph).ok());
  CHECK(s.graph.goal() == "vm3:root");
  for (const auto& r : s.catalog.records()) {
    CHECK(r.cia >= 2.0);
    CHECK(r.cia <= 4.0);
    CHECK(r.ac == AccessComplexity::High);
  }
  for (const auto& [id, rank] : privilege_ranks(s.graph)) CHECK(rank >= 0);
}

TEST_CASE("invalid specifications") {
  ScenarioSpec spec;
  spec.n_vms = 0;
  CHECK_THROWS_AS(generate_scenario(spec), ConfigError);
  spec = {};
  spec.n_vulns = 0;
  CHECK_THROWS_AS(generate_scenario(spec), ConfigError);
  spec = {};
  spec.n_layers = 4;
  CHECK_THROWS_AS(generate_scenario(spec), ConfigError);
  spec = {};
  spec.cia_lo = 8.0;
  spec.cia_hi = 2.0;
  CHECK_THROWS_AS(generate_scenario(spec), ConfigError);
  spec = {};
  spec.cia_hi = 11.0;
  CHECK_THROWS_AS(generate_scenario(spec), ConfigError);
  spec = {};
  spec.ac_weights = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(generate_scenario(spec), ConfigError);
}

}  // TEST_SUITE
