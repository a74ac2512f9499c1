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

#include "mtdgame/attack_graph.hpp"
#include "mtdgame/errors.hpp"
#include "mtdgame/scenario_gen.hpp"
#include "oracles.hpp"
#include "test_paths.hpp"

using namespace mtdgame;

namespace {

// Random layered privilege DAG with `privs` privilege nodes (last is the
// goal) and random exploits between lower and higher indices.
AttackGraph random_dag(SplitMix64& rng, int privs, int exploits) {
  std::vector<AgNode> nodes;
  std::vector<AgEdge> edges;
  for (int i = 0; i < privs; ++i) {
    nodes.push_back({"p" + std::to_string(i),
                     i + 1 == privs ? NodeKind::Goal : NodeKind::Privilege, "", {}});
  }
  for (int k = 0; k < exploits; ++k) {
    const int a = static_cast<int>(rng.below(privs - 1));
    const int b = a + 1 + static_cast<int>(rng.below(privs - 1 - a));
    const std::string id = "e" + std::to_string(k);
    nodes.push_back({id, NodeKind::Exploit, "", "v" + std::to_string(k)});
    edges.push_back({"p" + std::to_string(a), id, EdgeKind::Post});
    edges.push_back({id, "p" + std::to_string(b), EdgeKind::Pre});
    // Occasionally a second enabling privilege.
    if (rng.uniform() < 0.2 && a > 0) {
      edges.push_back({"p" + std::to_string(rng.below(a)), id, EdgeKind::Post});
    }
  }
  return AttackGraph(nodes, edges, "p0", "p" + std::to_string(privs - 1));
}

}  // namespace

TEST_SUITE("attack_graph") {

TEST_CASE("example network file loads with three exploits and four states") {
  AttackGraph g = load_attack_graph(data_path("example/graph.json"));
  int exploits = 0, states = 0;
  for (const auto& n : g.nodes()) {
    exploits += n.kind == NodeKind::Exploit;
    states += n.is_state();
  }
  CHECK(exploits == 3);
  CHECK(states == 4);
  CHECK(g.initial() == "LDAP:user");
  CHECK(g.goal() == "FTP:root");
  CHECK(validate_graph(g).ok());
}

TEST_CASE("empty node list is rejected as having no initial state") {
  CHECK_THROWS_AS(load_attack_graph(test_data("empty_nodes.json")), ValidationError);
  auto report = validate_graph(read_attack_graph(test_data("empty_nodes.json")));
  CHECK(report.has("no initial state"));
  CHECK_THROWS_WITH_AS(load_attack_graph(test_data("empty_nodes.json")),
                       doctest::Contains("no initial state"), ValidationError);
}

TEST_CASE("pre edge between two privileges is an edge kind violation") {
  auto report = validate_graph(read_attack_graph(test_data("edge_kind_violation.json")));
  CHECK(report.has("edge kind violation"));
  CHECK_THROWS_WITH_AS(load_attack_graph(test_data("edge_kind_violation.json")),
                       doctest::Contains("edge kind violation"), ValidationError);
}

TEST_CASE("privilege cycle violates monotonicity") {
  auto report = validate_graph(read_attack_graph(test_data("privilege_cycle.json")));
  CHECK(report.has("monotonicity"));
  CHECK(report.to_string().find("LDAP:root") != std::string::npos);
}

TEST_CASE("exploit without vuln_ref is reported") {
  auto report = validate_graph(read_attack_graph(test_data("missing_vuln_ref.json")));
  CHECK(report.has("missing vulnerability reference"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(read_attack_graph(test_data("malformed.json")), ParseError);
  CHECK_THROWS_AS(read_attack_graph(test_data("unknown_field.json")), ParseError);
  CHECK_THROWS_AS(read_attack_graph(test_data("does_not_exist.json")), ParseError);
  nlohmann::json bad_kind = {
      {"nodes", {{{"id", "a"}, {"kind", "router"}, {"label", ""}}}},
      {"edges", nlohmann::json::array()},
      {"initial", "a"},
      {"goal", "a"}};
  CHECK_THROWS_AS(attack_graph_from_json(bad_kind), ParseError);
}

TEST_CASE("other structural violations") {
  std::vector<AgNode> nodes = {
      {"u", NodeKind::Privilege, "", {}},
      {"u", NodeKind::Privilege, "", {}},
      {"g", NodeKind::Goal, "", "stray"},
      {"x", NodeKind::Exploit, "", "v"},
  };
  std::vector<AgEdge> edges = {{"x", "g", EdgeKind::Pre}, {"nowhere", "x", EdgeKind::Post}};
  auto report = validate_graph(AttackGraph(nodes, edges, "g", "u"));
  CHECK(report.has("duplicate node id"));
  CHECK(report.has("unexpected vulnerability reference"));
  CHECK(report.has("dangling edge"));
  CHECK(report.has("exploit without source"));
  CHECK(report.has("initial kind"));
  CHECK(report.has("goal kind"));
}

TEST_CASE("unreachable goal is flagged") {
  std::vector<AgNode> nodes = {{"u", NodeKind::Privilege, "", {}},
                               {"r", NodeKind::Privilege, "", {}},
                               {"g", NodeKind::Goal, "", {}},
                               {"x", NodeKind::Exploit, "", "v"}};
  std::vector<AgEdge> edges = {{"u", "x", EdgeKind::Post}, {"x", "r", EdgeKind::Pre}};
  CHECK(validate_graph(AttackGraph(nodes, edges, "u", "g")).has("goal unreachable"));
}

TEST_CASE("fact nodes are accepted and ignored for exploit enabling") {
  std::vector<AgNode> nodes = {{"u", NodeKind::Privilege, "", {}},
                               {"f", NodeKind::Fact, "vulExists(LDAP)", {}},
                               {"g", NodeKind::Goal, "", {}},
                               {"x", NodeKind::Exploit, "", "v"}};
  std::vector<AgEdge> edges = {{"u", "x", EdgeKind::Post},
                               {"u", "f", EdgeKind::Post},
                               {"f", "g", EdgeKind::Pre},
                               {"x", "g", EdgeKind::Pre}};
  AttackGraph g(nodes, edges, "u", "g");
  CHECK(validate_graph(g).ok());
  CHECK(enumerate_attack_paths(g, "u", "g") == std::vector<ExploitPath>{{"x"}});
}

TEST_CASE("example network attack paths") {
  Scenario s = example_network();
  auto paths = enumerate_attack_paths(s.graph, "LDAP:user", "FTP:root");
  std::vector<ExploitPath> expected = {{"exploit-LDAP", "exploit-FTP"},
                                       {"exploit-LDAP", "exploit-Web", "exploit-FTP"}};
  CHECK(paths == expected);
}

TEST_CASE("identity and unreachable path queries") {
  Scenario s = example_network();
  CHECK(enumerate_attack_paths(s.graph, "LDAP:root", "LDAP:root") ==
        std::vector<ExploitPath>{ExploitPath{}});
  CHECK(enumerate_attack_paths(s.graph, "FTP:root", "LDAP:user").empty());
  CHECK_THROWS_AS(enumerate_attack_paths(s.graph, "LDAP:user", "nope"), UnknownKeyError);
  CHECK_THROWS_AS(enumerate_attack_paths(s.graph, "exploit-LDAP", "FTP:root"),
                  UnknownKeyError);
}

TEST_CASE("path enumeration matches brute-force walks on random DAGs") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int privs = 2 + static_cast<int>(rng.below(11));  // up to 12
    const int exploits = 1 + static_cast<int>(rng.below(20));
    AttackGraph g = random_dag(rng, privs, exploits);
    for (const auto& from : {std::string("p0"), std::string("p1")}) {
      const std::string to = "p" + std::to_string(privs - 1);
      auto got = enumerate_attack_paths(g, from, to);
      CHECK(got == oracle::brute_force_paths(g, from, to));
      // Consecutive exploits chain through a shared privilege.
      for (const auto& path : got) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          auto via = g.exploit_targets(path[i]).front();
          auto sources = g.exploit_sources(path[i + 1]);
          CHECK(std::find(sources.begin(), sources.end(), via) != sources.end());
        }
      }
    }
  }
}

TEST_CASE("validation is idempotent and round-trips through files") {
  Scenario s = example_network();
  CHECK(validate_graph(s.graph).ok());
  CHECK(validate_graph(s.graph).ok());
  auto tmp = std::filesystem::temp_directory_path() / "mtdgame_graph_roundtrip.json";
  write_attack_graph(s.graph, tmp);
  AttackGraph back = load_attack_graph(tmp);
  CHECK(back.to_json() == s.graph.to_json());
  std::filesystem::remove(tmp);
}

TEST_CASE("privilege ranks increase along exploits") {
  Scenario s = example_network();
  auto ranks = privilege_ranks(s.graph);
  std::map<std::string, int> r(ranks.begin(), ranks.end());
  CHECK(r.size() == 4);
  CHECK(r["LDAP:user"] < r["LDAP:root"]);
  CHECK(r["LDAP:root"] < r["Web:root"]);
  CHECK(r["Web:root"] < r["FTP:root"]);
}

}  // TEST_SUITE
