// Copyright 2026 The fppc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: exit 0 on pass, 1 on fail, 2 on error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fppc/service.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

void emit(const fppc::Json& doc) { std::cout << fppc::canonical_dump(doc) << '\n'; }

std::vector<int> parse_node_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw fppc::FormatError("--path expects comma-separated node ids, got '" + text + "'");
    }
  }
  return ids;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leader-follower topology checks and funnel-control simulation"};
  app.require_subcommand(1);

  std::string scenario_arg;
  bool lemma1 = false;
  bool theorem1 = false;
  bool theorem2 = false;
  auto* check = app.add_subcommand("check", "Evaluate a convergence condition");
  check->add_option("scenario", scenario_arg, "Scenario file or built-in name")->required();
  auto* f1 = check->add_flag("--lemma1", lemma1, "Tree degree condition only");
  auto* f2 = check->add_flag("--theorem1", theorem1, "Leaderless-subgraph condition only");
  auto* f3 = check->add_flag("--theorem2", theorem2, "Follower-end condition only");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);

  std::optional<int> edge_arg;
  std::string path_arg;
  bool on_star = false;
  auto* decompose = app.add_subcommand("decompose", "Show the cycle decomposition of an anchor");
  decompose->add_option("scenario", scenario_arg, "Scenario file or built-in name")->required();
  auto* o_edge = decompose->add_option("--edge", edge_arg, "Anchor edge id");
  auto* o_path = decompose->add_option("--path", path_arg, "Anchor path as node ids a,b,c");
  o_edge->excludes(o_path);
  decompose->add_flag("--star", on_star, "Decompose within the maximum follower-end subgraph");

  std::string out_dir;
  std::optional<double> dt_arg;
  std::optional<double> horizon_arg;
  std::string integrator_arg;
  std::string policy_arg;
  auto* sim = app.add_subcommand("simulate", "Integrate the closed loop");
  sim->add_option("scenario", scenario_arg, "Scenario file or built-in name")->required();
  sim->add_option("--out", out_dir, "Directory for trajectory.csv and summary.json")->required();
  sim->add_option("--dt", dt_arg, "Step size override");
  sim->add_option("--horizon", horizon_arg, "Final time override");
  sim->add_option("--integrator", integrator_arg, "rk4 or euler")
      ->check(CLI::IsMember({"rk4", "euler"}));
  sim->add_option("--policy", policy_arg, "Violation policy: halt or record")
      ->check(CLI::IsMember({"halt", "record"}));

  std::size_t max_leaders = 0;
  auto* suggest = app.add_subcommand("suggest", "Search leader sets that pass the condition");
  suggest->add_option("graph", scenario_arg, "Graph or scenario file, or built-in name")->required();
  suggest->add_option("--max-leaders", max_leaders, "Largest leader set to try")->required();

  std::string export_dir;
  auto* list = app.add_subcommand("scenarios", "List or export the built-in scenarios");
  list->add_option("--export", export_dir, "Write one <name>.json per scenario here");

  int port = fppc::port_from_environment();
  std::string host = "0.0.0.0";
  int budget_s = static_cast<int>(fppc::kDefaultSimulationBudget.count());
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--port", port, "Listen port (default FORMATION_PPC_PORT or 8080)");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--sim-budget", budget_s, "Wall-clock limit per simulation, seconds")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (*check) {
      fppc::CheckMode mode = fppc::CheckMode::Combined;
      if (lemma1) mode = fppc::CheckMode::Lemma1;
      if (theorem1) mode = fppc::CheckMode::Theorem1;
      if (theorem2) mode = fppc::CheckMode::Theorem2;
      const fppc::Scenario s = fppc::load_scenario(scenario_arg);
      const fppc::Json doc = fppc::check_document(s.graph, mode);
      emit(doc);
      return fppc::check_passed(doc) ? kExitPass : kExitFail;
    }
    if (*decompose) {
      if (!edge_arg && path_arg.empty()) throw fppc::FormatError("give --edge or --path");
      const fppc::Scenario s = fppc::load_scenario(scenario_arg);
      std::optional<fppc::MaxFollowerEndSubgraph> star;
      if (on_star) star = fppc::max_follower_end_subgraph(s.graph);
      const fppc::LeaderFollowerGraph& g = star ? star->subgraph : s.graph;
      if (edge_arg) {
        if (!g.has_edge(*edge_arg)) {
          throw fppc::GraphError(fppc::GraphError::Kind::UnknownEdge,
                                 "edge " + std::to_string(*edge_arg) + " is not in the graph");
        }
        emit(fppc::to_json(fppc::complete_decomposition(g, *edge_arg)));
      } else {
        const fppc::FlfPath p = fppc::make_path(g, parse_node_list(path_arg));
        emit(fppc::to_json(fppc::complete_decomposition(g, p)));
      }
      return kExitPass;
    }
    if (*sim) {
      fppc::Scenario s = fppc::load_scenario(scenario_arg);
      fppc::Json overrides = fppc::to_json(s.sim);
      if (dt_arg) overrides["dt"] = *dt_arg;
      if (horizon_arg) overrides["horizon"] = *horizon_arg;
      if (!integrator_arg.empty()) overrides["integrator"] = integrator_arg;
      if (!policy_arg.empty()) overrides["violation_policy"] = policy_arg;
      s.sim = fppc::sim_from_json(overrides);
      fppc::validate_scenario(s, true);
      const fppc::Trajectory traj =
          fppc::simulate(s.graph, s.formation, s.ppc, s.sim, *s.initial_positions);
      std::filesystem::create_directories(out_dir);
      {
        std::ofstream csv(std::filesystem::path(out_dir) / "trajectory.csv");
        if (!csv) throw std::runtime_error("cannot write into " + out_dir);
        fppc::write_trajectory_csv(csv, traj);
      }
      const fppc::Json summary = fppc::trajectory_summary(traj);
      write_file(std::filesystem::path(out_dir) / "summary.json", fppc::canonical_dump(summary) + "\n");
      emit(summary);
      return traj.violations.empty() ? kExitPass : kExitFail;
    }
    if (*suggest) {
      const fppc::Scenario s = fppc::load_scenario(scenario_arg);
      const fppc::Json doc = fppc::suggest_document(s.graph, max_leaders);
      emit(doc);
      return doc["assignments"].empty() ? kExitFail : kExitPass;
    }
    if (*list) {
      const fppc::Json doc = fppc::scenarios_document();
      if (!export_dir.empty()) {
        std::filesystem::create_directories(export_dir);
        for (const fppc::Json& s : doc["scenarios"]) {
          const std::string name = s["name"].get<std::string>();
          write_file(std::filesystem::path(export_dir) / (name + ".json"), s.dump(2) + "\n");
        }
      }
      fppc::Json names = fppc::Json::array();
      for (const std::string& n : fppc::builtin_scenario_names()) names.push_back(n);
      emit({{"scenarios", names}});
      return kExitPass;
    }
    if (*serve) {
      fppc::ServerOptions options;
      options.host = host;
      options.port = port;
      options.simulation_budget = std::chrono::seconds(budget_s);
      fppc::run_server(options);
      return kExitPass;
    }
  } catch (const std::exception& e) {
    std::cerr << fppc::error_response(e).body << '\n';
    return kExitError;
  }
  return kExitError;
}
