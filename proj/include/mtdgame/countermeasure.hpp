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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mtdgame/game_config.hpp"
#include "mtdgame/markov_game.hpp"
#include "mtdgame/vuln_catalog.hpp"

namespace mtdgame {

enum class PlacementStrategy { Naive, Strategic };

std::string_view to_string(PlacementStrategy s);

// A set of patched vulnerabilities, in the order they were selected.
struct Placement {
  PlacementStrategy strategy = PlacementStrategy::Naive;
  int coverage_pct = 0;
  std::vector<std::string> patched;
};

// ceil(pct / 100 * total); throws std::invalid_argument for pct outside
// [0, 100].
std::size_t patch_budget(int coverage_pct, std::size_t total);

// Highest-CIA vulnerabilities first, ties by ascending key.
Placement naive_placement(const Catalog& catalog, int coverage_pct);

/// Greedy interdiction: at each step patch the vulnerability whose removal
/// minimizes the exact equilibrium value at the initial state, ties by
/// ascending key. Candidates of one step are solved on cfg.threads workers.
Placement strategic_placement(const MarkovGame& game, const GameConfig& cfg,
                              int coverage_pct);

// The first `budget` greedy picks. A shorter budget yields a prefix.
std::vector<std::string> greedy_interdiction(const MarkovGame& game,
                                             const GameConfig& cfg,
                                             std::size_t budget);

// Exact equilibrium value at the initial state after patching.
double evaluate_placement(const MarkovGame& game, const GameConfig& cfg,
                          const Placement& placement);

struct SweepRow {
  int coverage_pct = 0;
  double naive_value = 0.0;
  double strategic_value = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::optional<std::uint64_t> seed;
  GameConfig config;

  // Header `coverage_pct,naive_value,strategic_value`, six decimals, LF.
  std::string to_csv() const;
  nlohmann::json to_json() const;
};

/// Evaluates both strategies at every coverage level. Coverages must be
/// strictly increasing within [0, 100]; every catalog entry must be
/// exploitable in the game so both strategies share one budget base.
SweepReport run_sweep(const MarkovGame& game, const Catalog& catalog,
                      const GameConfig& cfg, const std::vector<int>& coverages,
                      std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace mtdgame
