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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace mtdgame {

enum class NodeKind { Fact, Exploit, Privilege, Goal };
enum class EdgeKind { Pre, Post };

std::string_view to_string(NodeKind kind);
std::string_view to_string(EdgeKind kind);

struct AgNode {
  std::string id;
  NodeKind kind = NodeKind::Fact;
  std::string label;
  // Catalog key of the exploited vulnerability; set iff kind == Exploit.
  std::optional<std::string> vuln_ref;

  bool is_state() const {
    return kind == NodeKind::Privilege || kind == NodeKind::Goal;
  }
};

// Pre: Fact/Exploit -> Privilege/Goal. Post: Privilege/Goal -> Fact/Exploit.
struct AgEdge {
  std::string from;
  std::string to;
  EdgeKind kind = EdgeKind::Pre;
};

struct Violation {
  std::string code;     // stable short tag, e.g. "monotonicity"
  std::string message;  // human readable, names the offending ids
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view code) const;
  std::string to_string() const;
};

using ExploitPath = std::vector<std::string>;

/// Attack graph: typed nodes joined by pre/post-condition edges.
///
/// Exploit e is enabled at privilege s when a Post edge s -> e exists, and
/// grants the privilege t named by its single Pre edge e -> t. Fact nodes
/// are accepted but play no role in enabling exploits.
class AttackGraph {
 public:
  AttackGraph() = default;
  AttackGraph(std::vector<AgNode> nodes, std::vector<AgEdge> edges,
              std::string initial, std::string goal);

  const std::vector<AgNode>& nodes() const { return nodes_; }
  const std::vector<AgEdge>& edges() const { return edges_; }
  const std::string& initial() const { return initial_; }
  const std::string& goal() const { return goal_; }

  // nullptr when absent.
  const AgNode* find(std::string_view id) const;

  // Exploits enabled at privilege `state`, in node declaration order.
  std::vector<std::string> exploits_from(std::string_view state) const;
  // Privileges granted by `exploit` (exactly one on a valid graph).
  std::vector<std::string> exploit_targets(std::string_view exploit) const;
  // Privileges enabling `exploit`, in node declaration order.
  std::vector<std::string> exploit_sources(std::string_view exploit) const;

  nlohmann::json to_json() const;

 private:
  std::vector<AgNode> nodes_;
  std::vector<AgEdge> edges_;
  std::string initial_;
  std::string goal_;
};

// Structural parse only; throws ParseError. No invariants are checked.
AttackGraph attack_graph_from_json(const nlohmann::json& doc);
AttackGraph read_attack_graph(const std::filesystem::path& path);

// Parse + validate; throws ParseError or ValidationError.
AttackGraph load_attack_graph(const std::filesystem::path& path);

void write_attack_graph(const AttackGraph& g,
                        const std::filesystem::path& path);

ValidationReport validate_graph(const AttackGraph& g);

/// Every simple privilege path from `from` to `to`, as the exploit ids it
/// traverses, sorted lexicographically. from == to yields {[]}.
/// Throws UnknownKeyError if either id is not a Privilege/Goal node.
std::vector<ExploitPath> enumerate_attack_paths(const AttackGraph& g,
                                                std::string_view from,
                                                std::string_view to);

// Topological rank of every Privilege/Goal node over the exploit relation.
// Requires an acyclic graph; ids absent from the result were on a cycle.
std::vector<std::pair<std::string, int>> privilege_ranks(const AttackGraph& g);

}  // namespace mtdgame
