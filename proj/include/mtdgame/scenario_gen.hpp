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

#include <array>
#include <cstdint>

#include "mtdgame/attack_graph.hpp"
#include "mtdgame/vuln_catalog.hpp"

namespace mtdgame {

/// Counter-based splitmix64 stream. The n-th output depends only on
/// (seed, n), so streams are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

struct ScenarioSpec {
  std::uint64_t seed = 7;
  int n_vms = 3;
  int n_vulns = 100;
  int n_layers = 3;
  double cia_lo = 0.0;
  double cia_hi = 10.0;
  std::array<double, 3> ac_weights{1.0, 1.0, 1.0};  // easy, medium, high

  // Throws ConfigError.
  void validate() const;
};

struct Scenario {
  AttackGraph graph;
  Catalog catalog;
};

/// Layered synthetic network. VMs are assigned round-robin to layers and
/// each has a user and a root privilege; the attacker starts as user on the
/// first VM and the goal is root on the first VM of the last layer. Every
/// vulnerability becomes one exploit: a local user->root escalation, or a
/// remote step from a privilege on the previous layer (from the first VM
/// for the other first-layer VMs). CIA scores are uniform in the range,
/// rounded to one decimal. Retries internally until the goal is reachable;
/// throws ValidationError after 100 failed attempts.
Scenario generate_scenario(const ScenarioSpec& spec);

// The three-VM LDAP/Web/FTP network with its vulnerability table.
Scenario example_network();

}  // namespace mtdgame
