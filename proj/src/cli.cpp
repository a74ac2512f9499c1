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

#include "mtdgame/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "json_util.hpp"
#include "mtdgame/attack_graph.hpp"
#include "mtdgame/countermeasure.hpp"
#include "mtdgame/errors.hpp"
#include "mtdgame/game_config.hpp"
#include "mtdgame/scenario_gen.hpp"
#include "mtdgame/vuln_catalog.hpp"

namespace mtdgame {
namespace {

namespace fs = std::filesystem;

// Raised for flag combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string catalog;
  std::string config;
  std::string out;
  std::string mode = "exact";
  std::optional<double> gamma;
  std::optional<double> epsilon;
  std::optional<int> max_iters;
  std::optional<int> threads;
  std::optional<std::string> coverages;
  std::optional<std::uint64_t> seed;
  std::string from;
  std::string to;
  ScenarioSpec spec;
  std::string ac_weights;
  bool fixture = false;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", std::abs(v) < 5e-7 ? 0.0 : v);
  return buf;
}

GameConfig resolve_config(const Options& o) {
  GameConfig cfg;
  if (!o.config.empty()) cfg = load_game_config(o.config, cfg);
  if (o.gamma) cfg.gamma = *o.gamma;
  if (o.epsilon) cfg.epsilon = *o.epsilon;
  if (o.max_iters) cfg.max_iters = *o.max_iters;
  if (o.threads) cfg.threads = *o.threads;
  cfg.validate();
  return cfg;
}

std::vector<int> parse_coverages(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in --coverages");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("bad coverage \"" + item + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--coverages must list at least one level");
  return out;
}

std::array<double, 3> parse_weights(const std::string& text) {
  std::array<double, 3> w{};
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &w[0], &w[1], &w[2], &tail) != 3) {
    throw UsageError("--ac-weights expects three comma-separated numbers");
  }
  return w;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    detail::write_text_file(o.out, text);
  }
}

struct Inputs {
  AttackGraph graph;
  Catalog catalog;
  std::optional<std::uint64_t> seed;
};

Inputs load_inputs(const Options& o, bool allow_generated) {
  if (o.graph.empty() && o.catalog.empty() && allow_generated && o.seed) {
    ScenarioSpec spec;
    spec.seed = *o.seed;
    Scenario s = generate_scenario(spec);
    return {std::move(s.graph), std::move(s.catalog), o.seed};
  }
  if (o.graph.empty() || o.catalog.empty()) {
    throw UsageError("--graph and --catalog are required");
  }
  return {load_attack_graph(o.graph), load_catalog(o.catalog), o.seed};
}

int cmd_validate(const Options& o, std::ostream& out) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  AttackGraph g = read_attack_graph(o.graph);
  ValidationReport report = validate_graph(g);
  if (!o.catalog.empty()) {
    Catalog catalog = load_catalog(o.catalog);
    for (const auto& n : g.nodes()) {
      if (n.vuln_ref && !catalog.contains(*n.vuln_ref)) {
        report.violations.push_back(
            {"dangling vulnerability reference",
             "exploit \"" + n.id + "\" references unknown \"" + *n.vuln_ref + "\""});
      }
    }
  }
  out << report.to_string();
  return report.ok() ? kExitOk : kExitDomain;
}

int cmd_paths(const Options& o, std::ostream& out) {
  if (o.graph.empty()) throw UsageError("--graph is required");
  AttackGraph g = load_attack_graph(o.graph);
  const std::string from = o.from.empty() ? g.initial() : o.from;
  const std::string to = o.to.empty() ? g.goal() : o.to;
  for (const auto& path : enumerate_attack_paths(g, from, to)) {
    std::string line;
    for (const auto& e : path) line += (line.empty() ? "" : " -> ") + e;
    out << (line.empty() ? "(empty)" : line) << "\n";
  }
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out, bool policy_view) {
  const GameConfig cfg = resolve_config(o);
  const SolveMode mode = parse_solve_mode(o.mode);
  Inputs in = load_inputs(o, false);
  MarkovGame game = build_game(in.graph, in.catalog, cfg);
  EquilibriumSolution sol = solve(game, cfg, mode);

  if (policy_view) {
    for (std::size_t s = 0; s < game.size(); ++s) {
      const GameState& st = game.state(s);
      out << st.node << (st.terminal ? " [terminal]" : "")
          << "  V=" << fixed6(sol.values[s]) << "\n";
      for (std::size_t i = 0; i < st.rows(); ++i) {
        out << "  attacker " << st.attacker[i].name() << " "
            << fixed6(sol.attacker_policy[s][i]) << "\n";
      }
      for (std::size_t j = 0; j < st.cols(); ++j) {
        out << "  defender " << st.defender[j].name() << " "
            << fixed6(sol.defender_policy[s][j]) << "\n";
      }
    }
  } else {
    const std::string text = detail::dump_json(solution_report(game, sol));
    if (o.out.empty()) {
      out << text;
    } else {
      detail::write_text_file(o.out, text);
      out << "V*(" << game.state(game.initial()).node
          << ") = " << fixed6(sol.values[game.initial()]) << " [" << to_string(mode)
          << ", " << sol.iterations << " iterations, residual " << sol.residual
          << (sol.converged ? "" : ", NOT CONVERGED") << "]\n";
    }
  }
  return sol.converged ? kExitOk : kExitDomain;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const GameConfig cfg = resolve_config(o);
  const std::vector<int> coverages =
      parse_coverages(o.coverages.value_or("10,20,30,40,50"));
  Inputs in = load_inputs(o, true);
  MarkovGame game = build_game(in.graph, in.catalog, cfg);
  SweepReport report = run_sweep(game, in.catalog, cfg, coverages, in.seed);
  emit(o, report.to_csv(), out);
  if (!o.out.empty()) {
    detail::write_text_file(o.out + ".meta.json", detail::dump_json(report.to_json()));
    for (const auto& r : report.rows) {
      out << r.coverage_pct << "%  naive " << fixed6(r.naive_value) << "  strategic "
          << fixed6(r.strategic_value) << "\n";
    }
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw UsageError("--out directory is required");
  Scenario s;
  if (o.fixture) {
    s = example_network();
  } else {
    ScenarioSpec spec = o.spec;
    if (o.seed) spec.seed = *o.seed;
    if (!o.ac_weights.empty()) spec.ac_weights = parse_weights(o.ac_weights);
    s = generate_scenario(spec);
  }
  fs::create_directories(o.out);
  write_attack_graph(s.graph, fs::path(o.out) / "graph.json");
  write_catalog(s.catalog, fs::path(o.out) / "catalog.json");
  out << "wrote " << (fs::path(o.out) / "graph.json").string() << " and "
      << (fs::path(o.out) / "catalog.json").string() << "\n";
  return kExitOk;
}

}  // namespace

nlohmann::json solution_report(const MarkovGame& game,
                               const EquilibriumSolution& solution) {
  auto states = nlohmann::json::array();
  for (std::size_t s = 0; s < game.size(); ++s) {
    const GameState& st = game.state(s);
    auto attacker = nlohmann::json::array();
    for (std::size_t i = 0; i < st.rows(); ++i) {
      attacker.push_back({{"action", st.attacker[i].name()},
                          {"probability", solution.attacker_policy[s][i]}});
    }
    auto defender = nlohmann::json::array();
    for (std::size_t j = 0; j < st.cols(); ++j) {
      defender.push_back({{"action", st.defender[j].name()},
                          {"probability", solution.defender_policy[s][j]}});
    }
    states.push_back({{"id", st.node},
                      {"terminal", st.terminal},
                      {"value", solution.values[s]},
                      {"attacker_policy", std::move(attacker)},
                      {"defender_policy", std::move(defender)}});
  }
  return {{"mode", to_string(solution.mode)},
          {"converged", solution.converged},
          {"iterations", solution.iterations},
          {"residual", solution.residual},
          {"gamma", game.gamma()},
          {"initial", game.state(game.initial()).node},
          {"initial_value", solution.values[game.initial()]},
          {"states", std::move(states)}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Markov-game analysis of attack graphs and countermeasures", "mtdgame"};
  app.require_subcommand(1);
  Options o;

  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--graph", o.graph, "Attack-graph JSON file");
    cmd->add_option("--catalog", o.catalog, "Vulnerability catalog JSON file");
  };
  auto add_game = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "Game configuration JSON file");
    cmd->add_option("--gamma", o.gamma, "Discount factor");
    cmd->add_option("--epsilon", o.epsilon, "Sup-norm stopping tolerance");
    cmd->add_option("--max-iters", o.max_iters, "Backup limit");
    cmd->add_option("--threads", o.threads, "Worker threads");
  };

  auto* validate = app.add_subcommand("validate", "Check an attack graph (and catalog)");
  add_inputs(validate);

  auto* paths = app.add_subcommand("paths", "List attack paths between privileges");
  paths->add_option("--graph", o.graph, "Attack-graph JSON file");
  paths->add_option("--from", o.from, "Start privilege (default: initial)");
  paths->add_option("--to", o.to, "End privilege (default: goal)");

  auto* solve_cmd = app.add_subcommand("solve", "Solve the Markov game, write a JSON report");
  auto* policy = app.add_subcommand("policy", "Solve and print per-state policies");
  for (auto* cmd : {solve_cmd, policy}) {
    add_inputs(cmd);
    add_game(cmd);
    cmd->add_option("--mode", o.mode, "exact | pure")->check(CLI::IsMember({"exact", "pure"}));
  }
  solve_cmd->add_option("--out", o.out, "Report path (default: standard output)");

  auto* sweep = app.add_subcommand("sweep", "Naive vs strategic patching over coverage levels");
  add_inputs(sweep);
  add_game(sweep);
  sweep->add_option("--coverages", o.coverages, "Comma-separated percentages");
  sweep->add_option("--seed", o.seed, "Generate the scenario from this seed instead of files");
  sweep->add_option("--out", o.out, "CSV path (default: standard output)");

  auto* gen = app.add_subcommand("gen", "Write a synthetic scenario");
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--vms", o.spec.n_vms, "Number of VMs");
  gen->add_option("--vulns", o.spec.n_vulns, "Number of vulnerabilities");
  gen->add_option("--layers", o.spec.n_layers, "Number of network layers");
  gen->add_option("--cia-lo", o.spec.cia_lo, "Lowest CIA score");
  gen->add_option("--cia-hi", o.spec.cia_hi, "Highest CIA score");
  gen->add_option("--ac-weights", o.ac_weights, "easy,medium,high sampling weights");
  gen->add_flag("--fixture", o.fixture, "Write the built-in three-VM example instead");
  gen->add_option("--out", o.out, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (paths->parsed()) return cmd_paths(o, out);
    if (solve_cmd->parsed()) return cmd_solve(o, out, false);
    if (policy->parsed()) return cmd_solve(o, out, true);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    // ParseError, ConfigError, UnknownKeyError, UsageError, bad arguments.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mtdgame
