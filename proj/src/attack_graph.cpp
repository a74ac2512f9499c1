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

#include "mtdgame/attack_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json_util.hpp"
#include "mtdgame/errors.hpp"

namespace mtdgame {
namespace {

using nlohmann::json;

NodeKind parse_node_kind(const std::string& s) {
  if (s == "fact") return NodeKind::Fact;
  if (s == "exploit") return NodeKind::Exploit;
  if (s == "privilege") return NodeKind::Privilege;
  if (s == "goal") return NodeKind::Goal;
  throw ParseError("unknown node kind \"" + s + "\"");
}

EdgeKind parse_edge_kind(const std::string& s) {
  if (s == "pre") return EdgeKind::Pre;
  if (s == "post") return EdgeKind::Post;
  throw ParseError("unknown edge kind \"" + s + "\"");
}

bool is_condition(NodeKind k) {
  return k == NodeKind::Fact || k == NodeKind::Exploit;
}
bool is_state(NodeKind k) {
  return k == NodeKind::Privilege || k == NodeKind::Goal;
}

// Privilege-level view of the graph: state -> [(exploit, granted state)].
struct StepIndex {
  std::map<std::string, std::vector<std::pair<std::string, std::string>>>
      steps;
};

StepIndex build_steps(const AttackGraph& g) {
  StepIndex index;
  for (const auto& n : g.nodes()) {
    if (n.kind != NodeKind::Exploit) continue;
    auto targets = g.exploit_targets(n.id);
    for (const auto& src : g.exploit_sources(n.id)) {
      for (const auto& dst : targets) index.steps[src].emplace_back(n.id, dst);
    }
  }
  return index;
}

void add(ValidationReport& r, std::string code, std::string message) {
  r.violations.push_back({std::move(code), std::move(message)});
}

}  // namespace

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Fact: return "fact";
    case NodeKind::Exploit: return "exploit";
    case NodeKind::Privilege: return "privilege";
    case NodeKind::Goal: return "goal";
  }
  return "?";
}

std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::Pre ? "pre" : "post";
}

bool ValidationReport::has(std::string_view code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok\n";
  std::ostringstream os;
  for (const auto& v : violations) os << v.code << ": " << v.message << "\n";
  return os.str();
}

AttackGraph::AttackGraph(std::vector<AgNode> nodes, std::vector<AgEdge> edges,
                         std::string initial, std::string goal)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      initial_(std::move(initial)),
      goal_(std::move(goal)) {}

const AgNode* AttackGraph::find(std::string_view id) const {
  for (const auto& n : nodes_) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

std::vector<std::string> AttackGraph::exploits_from(
    std::string_view state) const {
  std::set<std::string_view> enabled;
  for (const auto& e : edges_) {
    if (e.kind == EdgeKind::Post && e.from == state) enabled.insert(e.to);
  }
  std::vector<std::string> out;
  for (const auto& n : nodes_) {
    if (n.kind == NodeKind::Exploit && enabled.count(n.id)) {
      out.push_back(n.id);
    }
  }
  return out;
}

std::vector<std::string> AttackGraph::exploit_targets(
    std::string_view exploit) const {
  std::vector<std::string> out;
  for (const auto& e : edges_) {
    if (e.kind != EdgeKind::Pre || e.from != exploit) continue;
    const AgNode* t = find(e.to);
    if (t && t->is_state() &&
        std::find(out.begin(), out.end(), e.to) == out.end()) {
      out.push_back(e.to);
    }
  }
  return out;
}

std::vector<std::string> AttackGraph::exploit_sources(
    std::string_view exploit) const {
  std::set<std::string_view> sources;
  for (const auto& e : edges_) {
    if (e.kind == EdgeKind::Post && e.to == exploit) sources.insert(e.from);
  }
  std::vector<std::string> out;
  for (const auto& n : nodes_) {
    if (n.is_state() && sources.count(n.id)) out.push_back(n.id);
  }
  return out;
}

nlohmann::json AttackGraph::to_json() const {
  json nodes = json::array();
  for (const auto& n : nodes_) {
    json jn = {{"id", n.id}, {"kind", to_string(n.kind)}, {"label", n.label}};
    if (n.vuln_ref) jn["vuln_ref"] = *n.vuln_ref;
    nodes.push_back(std::move(jn));
  }
  json edges = json::array();
  for (const auto& e : edges_) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", to_string(e.kind)}});
  }
  return {{"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"initial", initial_},
          {"goal", goal_}};
}

AttackGraph attack_graph_from_json(const nlohmann::json& doc) {
  detail::require_object(doc, "attack graph",
                         {"nodes", "edges", "initial", "goal"});
  const auto& jnodes = detail::field(doc, "attack graph", "nodes");
  const auto& jedges = detail::field(doc, "attack graph", "edges");
  if (!jnodes.is_array()) throw ParseError("attack graph: nodes must be an array");
  if (!jedges.is_array()) throw ParseError("attack graph: edges must be an array");

  std::vector<AgNode> nodes;
  for (const auto& jn : jnodes) {
    detail::require_object(jn, "node", {"id", "kind", "label", "vuln_ref"});
    AgNode n;
    n.id = detail::string_field(jn, "node", "id");
    n.kind = parse_node_kind(detail::string_field(jn, "node", "kind"));
    n.label = detail::string_field(jn, "node", "label");
    if (jn.contains("vuln_ref")) {
      n.vuln_ref = detail::string_field(jn, "node", "vuln_ref");
    }
    nodes.push_back(std::move(n));
  }
  std::vector<AgEdge> edges;
  for (const auto& je : jedges) {
    detail::require_object(je, "edge", {"from", "to", "kind"});
    edges.push_back({detail::string_field(je, "edge", "from"),
                     detail::string_field(je, "edge", "to"),
                     parse_edge_kind(detail::string_field(je, "edge", "kind"))});
  }
  // initial/goal may be absent on a degenerate graph; validation reports it.
  std::string initial = doc.contains("initial")
                            ? detail::string_field(doc, "attack graph", "initial")
                            : std::string{};
  std::string goal = doc.contains("goal")
                         ? detail::string_field(doc, "attack graph", "goal")
                         : std::string{};
  return AttackGraph(std::move(nodes), std::move(edges), std::move(initial),
                     std::move(goal));
}

AttackGraph read_attack_graph(const std::filesystem::path& path) {
  try {
    return attack_graph_from_json(detail::read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

AttackGraph load_attack_graph(const std::filesystem::path& path) {
  AttackGraph g = read_attack_graph(path);
  ValidationReport report = validate_graph(g);
  if (!report.ok()) {
    throw ValidationError(path.string() + ": " + report.violations.front().code +
                          "\n" + report.to_string());
  }
  return g;
}

void write_attack_graph(const AttackGraph& g,
                        const std::filesystem::path& path) {
  detail::write_text_file(path, detail::dump_json(g.to_json()));
}

ValidationReport validate_graph(const AttackGraph& g) {
  ValidationReport r;

  std::unordered_map<std::string, const AgNode*> by_id;
  for (const auto& n : g.nodes()) {
    if (!by_id.emplace(n.id, &n).second) {
      add(r, "duplicate node id", "node \"" + n.id + "\" declared twice");
    }
    if (n.kind == NodeKind::Exploit && !n.vuln_ref) {
      add(r, "missing vulnerability reference",
          "exploit \"" + n.id + "\" has no vuln_ref");
    }
    if (n.kind != NodeKind::Exploit && n.vuln_ref) {
      add(r, "unexpected vulnerability reference",
          "non-exploit node \"" + n.id + "\" carries vuln_ref");
    }
  }

  const AgNode* initial = g.initial().empty() ? nullptr : g.find(g.initial());
  if (!initial) {
    add(r, "no initial state",
        g.initial().empty() ? "initial state not set"
                            : "initial \"" + g.initial() + "\" is not a node");
  } else if (initial->kind != NodeKind::Privilege) {
    add(r, "initial kind", "initial \"" + g.initial() + "\" is not a privilege");
  }
  const AgNode* goal = g.goal().empty() ? nullptr : g.find(g.goal());
  if (!goal) {
    add(r, "no goal state",
        g.goal().empty() ? "goal state not set"
                         : "goal \"" + g.goal() + "\" is not a node");
  } else if (goal->kind != NodeKind::Goal) {
    add(r, "goal kind", "goal \"" + g.goal() + "\" is not a goal node");
  }

  for (const auto& e : g.edges()) {
    auto f = by_id.find(e.from);
    auto t = by_id.find(e.to);
    if (f == by_id.end() || t == by_id.end()) {
      add(r, "dangling edge", "edge " + e.from + " -> " + e.to +
                                  " references an unknown node");
      continue;
    }
    NodeKind fk = f->second->kind;
    NodeKind tk = t->second->kind;
    bool fine = e.kind == EdgeKind::Pre ? is_condition(fk) && is_state(tk)
                                        : is_state(fk) && is_condition(tk);
    if (!fine) {
      add(r, "edge kind violation",
          std::string(to_string(e.kind)) + " edge " + e.from + " (" +
              std::string(to_string(fk)) + ") -> " + e.to + " (" +
              std::string(to_string(tk)) + ")");
    }
  }

  for (const auto& n : g.nodes()) {
    if (n.kind != NodeKind::Exploit) continue;
    auto targets = g.exploit_targets(n.id);
    if (targets.size() != 1) {
      add(r, "exploit target", "exploit \"" + n.id + "\" grants " +
                                   std::to_string(targets.size()) +
                                   " privileges, expected 1");
    }
    if (g.exploit_sources(n.id).empty()) {
      add(r, "exploit without source",
          "exploit \"" + n.id + "\" is not enabled by any privilege");
    }
  }

  // Monotonicity: the privilege relation induced by exploits is acyclic.
  if (privilege_ranks(g).size() !=
      static_cast<std::size_t>(std::count_if(
          g.nodes().begin(), g.nodes().end(),
          [](const AgNode& n) { return n.is_state(); }))) {
    std::set<std::string> ranked;
    for (const auto& [id, _] : privilege_ranks(g)) ranked.insert(id);
    std::string on_cycle;
    for (const auto& n : g.nodes()) {
      if (n.is_state() && !ranked.count(n.id)) {
        on_cycle += (on_cycle.empty() ? "" : ", ") + n.id;
      }
    }
    add(r, "monotonicity", "privilege cycle through or behind: " + on_cycle);
  } else if (initial && goal && initial->is_state() && goal->is_state() &&
             enumerate_attack_paths(g, g.initial(), g.goal()).empty()) {
    add(r, "goal unreachable",
        "goal \"" + g.goal() + "\" is not reachable from \"" + g.initial() + "\"");
  }
  return r;
}

std::vector<ExploitPath> enumerate_attack_paths(const AttackGraph& g,
                                                std::string_view from,
                                                std::string_view to) {
  for (auto id : {from, to}) {
    const AgNode* n = g.find(id);
    if (!n || !n->is_state()) {
      throw UnknownKeyError("unknown privilege node \"" + std::string(id) + "\"");
    }
  }
  StepIndex index = build_steps(g);
  std::vector<ExploitPath> out;
  ExploitPath path;
  std::set<std::string> on_path;

  auto dfs = [&](auto&& self, const std::string& at) -> void {
    if (at == to) {
      out.push_back(path);
      return;
    }
    auto it = index.steps.find(at);
    if (it == index.steps.end()) return;
    for (const auto& [exploit, next] : it->second) {
      if (on_path.count(next)) continue;
      on_path.insert(next);
      path.push_back(exploit);
      self(self, next);
      path.pop_back();
      on_path.erase(next);
    }
  };
  on_path.insert(std::string(from));
  dfs(dfs, std::string(from));

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<std::string, int>> privilege_ranks(const AttackGraph& g) {
  StepIndex index = build_steps(g);
  std::map<std::string, int> indegree;
  for (const auto& n : g.nodes()) {
    if (n.is_state()) indegree.emplace(n.id, 0);
  }
  for (const auto& [src, steps] : index.steps) {
    if (!indegree.count(src)) continue;
    for (const auto& [_, dst] : steps) {
      if (indegree.count(dst)) ++indegree[dst];
    }
  }
  // Kahn's algorithm in layers; rank = longest distance from a source.
  std::vector<std::pair<std::string, int>> ranks;
  std::vector<std::string> layer;
  for (const auto& n : g.nodes()) {
    if (n.is_state() && indegree[n.id] == 0) layer.push_back(n.id);
  }
  for (int rank = 0; !layer.empty(); ++rank) {
    std::vector<std::string> next;
    for (const auto& id : layer) {
      ranks.emplace_back(id, rank);
      auto it = index.steps.find(id);
      if (it == index.steps.end()) continue;
      for (const auto& [_, dst] : it->second) {
        auto d = indegree.find(dst);
        if (d != indegree.end() && --d->second == 0) next.push_back(dst);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  return ranks;
}

}  // namespace mtdgame
