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

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mtdgame/game_solver.hpp"
#include "mtdgame/markov_game.hpp"

namespace mtdgame {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // violations, non-convergence
inline constexpr int kExitUsage = 2;   // bad flags, unreadable or malformed input

/// Entry point of the `mtdgame` tool. `args` excludes the program name.
/// Subcommands: validate, paths, solve, policy, sweep, gen.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Machine-readable solve report: values and per-state policies keyed by
// action name.
nlohmann::json solution_report(const MarkovGame& game,
                               const EquilibriumSolution& solution);

}  // namespace mtdgame
