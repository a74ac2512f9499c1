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

#include "mtdgame/game_config.hpp"

#include <cmath>

#include "json_util.hpp"
#include "mtdgame/errors.hpp"

namespace mtdgame {

void GameConfig::validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw ConfigError("gamma must lie in (0, 1]");
  }
  if (!(p_detect >= 0.0 && p_detect <= 1.0)) {
    throw ConfigError("p_detect must lie in [0, 1]");
  }
  if (!(monitor_cost >= 0.0) || !std::isfinite(monitor_cost)) {
    throw ConfigError("monitor_cost must be finite and >= 0");
  }
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be finite and >= 0");
  }
  if (max_iters < 1) throw ConfigError("max_iters must be positive");
  if (threads < 1) throw ConfigError("threads must be positive");
  ac_map.validate();
}

nlohmann::json GameConfig::to_json() const {
  return {{"gamma", gamma},
          {"p_detect", p_detect},
          {"monitor_cost", monitor_cost},
          {"ac_map",
           {{"easy", ac_map.easy}, {"medium", ac_map.medium}, {"high", ac_map.high}}},
          {"epsilon", epsilon},
          {"max_iters", max_iters},
          {"threads", threads}};
}

GameConfig game_config_from_json(const nlohmann::json& doc, GameConfig base) {
  constexpr auto what = "config";
  detail::require_object(doc, what,
                         {"gamma", "p_detect", "monitor_cost", "ac_map",
                          "epsilon", "max_iters", "threads"});
  GameConfig cfg = base;
  if (doc.contains("gamma")) cfg.gamma = detail::number_field(doc, what, "gamma");
  if (doc.contains("p_detect")) {
    cfg.p_detect = detail::number_field(doc, what, "p_detect");
  }
  if (doc.contains("monitor_cost")) {
    cfg.monitor_cost = detail::number_field(doc, what, "monitor_cost");
  }
  if (doc.contains("epsilon")) {
    cfg.epsilon = detail::number_field(doc, what, "epsilon");
  }
  for (const char* key : {"max_iters", "threads"}) {
    if (!doc.contains(key)) continue;
    const auto& v = doc.at(key);
    if (!v.is_number_integer()) {
      throw ParseError(std::string("config: field \"") + key +
                       "\" must be an integer");
    }
    (std::string_view(key) == "max_iters" ? cfg.max_iters : cfg.threads) =
        v.get<int>();
  }
  if (doc.contains("ac_map")) {
    const auto& m = doc.at("ac_map");
    detail::require_object(m, "config.ac_map", {"easy", "medium", "high"});
    if (m.contains("easy")) cfg.ac_map.easy = detail::number_field(m, "ac_map", "easy");
    if (m.contains("medium")) {
      cfg.ac_map.medium = detail::number_field(m, "ac_map", "medium");
    }
    if (m.contains("high")) cfg.ac_map.high = detail::number_field(m, "ac_map", "high");
  }
  return cfg;
}

GameConfig load_game_config(const std::filesystem::path& path, GameConfig base) {
  auto doc = detail::read_json_file(path);
  try {
    return game_config_from_json(doc, base);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace mtdgame
