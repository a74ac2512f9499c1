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

#include <nlohmann/json.hpp>

#include "mtdgame/vuln_catalog.hpp"

namespace mtdgame {

struct GameConfig {
  double gamma = 0.9;
  // Probability that an exploit attempt against a monitored service is
  // blocked.
  double p_detect = 0.95;
  // Attacker's payoff for idling while the defender monitors.
  double monitor_cost = 0.5;
  AcProbabilityMap ac_map;
  // Sup-norm stopping tolerance. Zero runs exactly max_iters backups.
  double epsilon = 1e-6;
  int max_iters = 10000;
  // Worker threads for backups and candidate evaluation. Results do not
  // depend on this value.
  int threads = 1;

  // Throws ConfigError on any out-of-range field.
  void validate() const;
  nlohmann::json to_json() const;
};

// Overlays the fields present in `doc` onto `base`; unknown fields are a
// ParseError.
GameConfig game_config_from_json(const nlohmann::json& doc,
                                 GameConfig base = {});
GameConfig load_game_config(const std::filesystem::path& path,
                            GameConfig base = {});

}  // namespace mtdgame
