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

#include "mtdgame/countermeasure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>

#include "mtdgame/errors.hpp"
#include "mtdgame/game_solver.hpp"
#include "mtdgame/parallel.hpp"

namespace mtdgame {
namespace {

double initial_value(const MarkovGame& game, const GameConfig& cfg,
                     const std::set<std::string>& patched) {
  GameConfig single = cfg;
  single.threads = 1;
  MarkovGame restricted = restrict_game(game, patched);
  return solve_exact(restricted, single).values[restricted.initial()];
}

// Avoids printing "-0.000000" for solver noise around zero.
double printable(double v) { return std::abs(v) < 5e-7 ? 0.0 : v; }

}  // namespace

std::string_view to_string(PlacementStrategy s) {
  return s == PlacementStrategy::Naive ? "naive" : "strategic";
}

std::size_t patch_budget(int coverage_pct, std::size_t total) {
  if (coverage_pct < 0 || coverage_pct > 100) {
    throw std::invalid_argument("coverage must lie in [0, 100]");
  }
  return (static_cast<std::size_t>(coverage_pct) * total + 99) / 100;
}

Placement naive_placement(const Catalog& catalog, int coverage_pct) {
  std::vector<const VulnRecord*> order;
  for (const auto& r : catalog.records()) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](const VulnRecord* a, const VulnRecord* b) {
    if (a->cia != b->cia) return a->cia > b->cia;
    return a->key < b->key;
  });
  Placement p{PlacementStrategy::Naive, coverage_pct, {}};
  const std::size_t budget = patch_budget(coverage_pct, catalog.size());
  for (std::size_t i = 0; i < budget; ++i) p.patched.push_back(order[i]->key);
  return p;
}

std::vector<std::string> greedy_interdiction(const MarkovGame& game,
                                             const GameConfig& cfg,
                                             std::size_t budget) {
  std::set<std::string> patched;
  std::vector<std::string> picks;
  budget = std::min(budget, game.vulnerabilities().size());
  while (picks.size() < budget) {
    std::vector<std::string> candidates;
    for (const auto& key : game.vulnerabilities()) {
      if (!patched.count(key)) candidates.push_back(key);
    }
    std::vector<double> values(candidates.size());
    parallel_for(candidates.size(), cfg.threads, [&](std::size_t i) {
      std::set<std::string> trial = patched;
      trial.insert(candidates[i]);
      values[i] = initial_value(game, cfg, trial);
    });
    // Fixed key order; strict comparison keeps the lowest key on ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      if (values[i] < values[best]) best = i;
    }
    patched.insert(candidates[best]);
    picks.push_back(candidates[best]);
  }
  return picks;
}

Placement strategic_placement(const MarkovGame& game, const GameConfig& cfg,
                              int coverage_pct) {
  const std::size_t budget = patch_budget(coverage_pct, game.vulnerabilities().size());
  return {PlacementStrategy::Strategic, coverage_pct,
          greedy_interdiction(game, cfg, budget)};
}

double evaluate_placement(const MarkovGame& game, const GameConfig& cfg,
                          const Placement& placement) {
  std::set<std::string> patched(placement.patched.begin(), placement.patched.end());
  MarkovGame restricted = restrict_game(game, patched);
  return solve_exact(restricted, cfg).values[restricted.initial()];
}

SweepReport run_sweep(const MarkovGame& game, const Catalog& catalog,
                      const GameConfig& cfg, const std::vector<int>& coverages,
                      std::optional<std::uint64_t> seed) {
  if (coverages.empty()) throw std::invalid_argument("no coverage levels given");
  for (std::size_t i = 0; i < coverages.size(); ++i) {
    if (coverages[i] < 0 || coverages[i] > 100) {
      throw std::invalid_argument("coverage must lie in [0, 100]");
    }
    if (i > 0 && coverages[i] <= coverages[i - 1]) {
      throw std::invalid_argument("coverages must be strictly increasing");
    }
  }
  for (const auto& r : catalog.records()) {
    if (!game.vulnerabilities().count(r.key)) {
      throw ValidationError("catalog entry \"" + r.key + "\" has no exploit in the game");
    }
  }

  // Greedy picks are prefix-consistent, so one run serves every budget.
  const std::size_t max_budget =
      patch_budget(coverages.back(), game.vulnerabilities().size());
  const std::vector<std::string> order = greedy_interdiction(game, cfg, max_budget);

  SweepReport report;
  report.seed = seed;
  report.config = cfg;
  for (int pct : coverages) {
    Placement naive = naive_placement(catalog, pct);
    Placement strategic{PlacementStrategy::Strategic, pct, {}};
    const std::size_t budget = patch_budget(pct, game.vulnerabilities().size());
    strategic.patched.assign(order.begin(),
                             order.begin() + static_cast<std::ptrdiff_t>(budget));
    report.rows.push_back({pct, evaluate_placement(game, cfg, naive),
                           evaluate_placement(game, cfg, strategic)});
  }
  return report;
}

std::string SweepReport::to_csv() const {
  std::string out = "coverage_pct,naive_value,strategic_value\n";
  char line[128];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%d,%.6f,%.6f\n", r.coverage_pct,
                  printable(r.naive_value), printable(r.strategic_value));
    out += line;
  }
  return out;
}

nlohmann::json SweepReport::to_json() const {
  auto jrows = nlohmann::json::array();
  for (const auto& r : rows) {
    jrows.push_back({{"coverage_pct", r.coverage_pct},
                     {"naive_value", r.naive_value},
                     {"strategic_value", r.strategic_value}});
  }
  nlohmann::json doc = {{"rows", std::move(jrows)}, {"config", config.to_json()}};
  doc["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  return doc;
}

}  // namespace mtdgame
