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

#include "mtdgame/scenario_gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mtdgame/errors.hpp"

namespace mtdgame {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr int kMaxAttempts = 100;

constexpr std::array<const char*, 8> kServices = {
    "ssh", "http", "ftp", "ldap", "smb", "mysql", "dns", "smtp"};

std::string padded(int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*d", width, value);
  return buf;
}

std::string vm_name(int v) { return "vm" + std::to_string(v + 1); }
std::string priv_id(int v, bool root) {
  return vm_name(v) + (root ? ":root" : ":user");
}

AccessComplexity sample_ac(SplitMix64& rng, const std::array<double, 3>& w) {
  const double total = w[0] + w[1] + w[2];
  const double u = rng.uniform() * total;
  if (u < w[0]) return AccessComplexity::Easy;
  if (u < w[0] + w[1] || w[2] == 0.0) return AccessComplexity::Medium;
  return AccessComplexity::High;
}

Scenario generate_once(const ScenarioSpec& spec, SplitMix64& rng) {
  const int vms = spec.n_vms;
  std::vector<int> layer_of(vms);
  std::vector<std::vector<int>> layers(spec.n_layers);
  for (int v = 0; v < vms; ++v) {
    layer_of[v] = v % spec.n_layers;
    layers[layer_of[v]].push_back(v);
  }
  const int goal_vm = layers.back().front();

  std::vector<AgNode> nodes;
  for (int v = 0; v < vms; ++v) {
    for (bool root : {false, true}) {
      const bool is_goal = root && v == goal_vm;
      nodes.push_back({priv_id(v, root),
                       is_goal ? NodeKind::Goal : NodeKind::Privilege,
                       std::string(root ? "root" : "user") + " on " + vm_name(v),
                       std::nullopt});
    }
  }

  std::vector<AgEdge> edges;
  std::vector<VulnRecord> records;
  const int width = spec.n_vulns >= 1000 ? 4 : 3;
  for (int k = 0; k < spec.n_vulns; ++k) {
    const int target_vm = static_cast<int>(rng.below(static_cast<std::uint64_t>(vms)));
    const int layer = layer_of[target_vm];
    const char* service = kServices[rng.below(kServices.size())];
    const double raw = spec.cia_lo + rng.uniform() * (spec.cia_hi - spec.cia_lo);
    const double cia =
        std::min(spec.cia_hi, std::max(spec.cia_lo, std::round(raw * 10.0) / 10.0));
    const AccessComplexity ac = sample_ac(rng, spec.ac_weights);

    // Source VMs for a remote step into target_vm.
    std::vector<int> sources;
    if (layer > 0) {
      sources = layers[layer - 1];
    } else if (target_vm != 0) {
      sources = {0};
    }
    const bool local = sources.empty() || rng.uniform() < 0.25;

    std::string from, to;
    if (local) {
      from = priv_id(target_vm, false);
      to = priv_id(target_vm, true);
    } else {
      const int src = sources[rng.below(sources.size())];
      from = priv_id(src, rng.uniform() < 0.5);
      to = priv_id(target_vm, rng.uniform() < 0.3);
    }

    const std::string key = "v" + padded(k + 1, width);
    const std::string exploit = "x" + padded(k + 1, width);
    records.push_back({key, "SYN-" + std::to_string(spec.seed) + "-" + padded(k + 1, 4),
                       vm_name(target_vm), service, cia, ac});
    nodes.push_back({exploit, NodeKind::Exploit,
                     std::string(local ? "escalate " : "remote ") + service + " on " +
                         vm_name(target_vm),
                     key});
    edges.push_back({from, exploit, EdgeKind::Post});
    edges.push_back({exploit, to, EdgeKind::Pre});
  }

  return {AttackGraph(std::move(nodes), std::move(edges), priv_id(0, false),
                      priv_id(goal_vm, true)),
          Catalog(std::move(records))};
}

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return splitmix64_mix(state_);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

void ScenarioSpec::validate() const {
  if (n_vms < 1) throw ConfigError("n_vms must be >= 1");
  if (n_vulns < 1) throw ConfigError("n_vulns must be >= 1");
  if (n_layers < 1) throw ConfigError("n_layers must be >= 1");
  if (n_layers > n_vms) throw ConfigError("n_layers must not exceed n_vms");
  if (!(cia_lo >= 0.0 && cia_lo <= cia_hi && cia_hi <= 10.0)) {
    throw ConfigError("cia range must satisfy 0 <= lo <= hi <= 10");
  }
  double total = 0.0;
  for (double w : ac_weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ConfigError("ac weights must be finite and nonnegative");
    }
    total += w;
  }
  if (!(total > 0.0)) throw ConfigError("ac weights must not all be zero");
}

Scenario generate_scenario(const ScenarioSpec& spec) {
  spec.validate();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SplitMix64 rng(splitmix64_mix(spec.seed) ^
                   splitmix64_mix(static_cast<std::uint64_t>(attempt) + 1));
    Scenario s = generate_once(spec, rng);
    if (validate_graph(s.graph).ok()) return s;
  }
  throw ValidationError("could not generate a scenario with a reachable goal in " +
                        std::to_string(kMaxAttempts) + " attempts");
}

Scenario example_network() {
  auto priv = [](std::string id, std::string label) {
    return AgNode{std::move(id), NodeKind::Privilege, std::move(label), std::nullopt};
  };
  auto exploit = [](std::string id, std::string label, std::string vuln) {
    return AgNode{std::move(id), NodeKind::Exploit, std::move(label), std::move(vuln)};
  };
  std::vector<AgNode> nodes = {
      priv("LDAP:user", "priv(attacker, (LDAP: user))"),
      priv("LDAP:root", "priv(attacker, (LDAP: root))"),
      priv("Web:root", "priv(attacker, (Web: root))"),
      {"FTP:root", NodeKind::Goal, "priv(attacker, (FTP: root))", std::nullopt},
      exploit("exploit-LDAP", "local privilege escalation on LDAP", "dirtycow"),
      exploit("exploit-Web", "cross-site scripting on Web", "web-xss"),
      exploit("exploit-FTP", "remote code execution on FTP", "ftp-rce"),
  };
  std::vector<AgEdge> edges = {
      {"LDAP:user", "exploit-LDAP", EdgeKind::Post},
      {"exploit-LDAP", "LDAP:root", EdgeKind::Pre},
      {"LDAP:root", "exploit-Web", EdgeKind::Post},
      {"exploit-Web", "Web:root", EdgeKind::Pre},
      {"LDAP:root", "exploit-FTP", EdgeKind::Post},
      {"Web:root", "exploit-FTP", EdgeKind::Post},
      {"exploit-FTP", "FTP:root", EdgeKind::Pre},
  };
  std::vector<VulnRecord> records = {
      {"dirtycow", "CVE-2016-5195", "LDAP", "Local Priv Esc", 5.0, AccessComplexity::Medium},
      {"web-xss", "CVE-2017-5095", "Web", "Cross Site Scripting", 7.0, AccessComplexity::Easy},
      {"ftp-rce", "CVE-2015-3306", "FTP", "Remote Code Execution", 10.0,
       AccessComplexity::Medium},
  };
  return {AttackGraph(std::move(nodes), std::move(edges), "LDAP:user", "FTP:root"),
          Catalog(std::move(records))};
}

}  // namespace mtdgame
