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

#include "fppc/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fppc {

namespace {

std::vector<Node> numbered_nodes(int count, const std::vector<int>& leaders) {
  std::vector<Node> nodes;
  for (int id = 1; id <= count; ++id) {
    const bool lead = std::find(leaders.begin(), leaders.end(), id) != leaders.end();
    nodes.push_back({id, lead ? NodeRole::Leader : NodeRole::Follower});
  }
  return nodes;
}

PpcConfig uniform_ppc(double rho0, double rho_inf, double decay) {
  PpcConfig c;
  c.defaults.funnel = {rho0, rho_inf, decay};
  c.defaults.gain = 1.0;
  return c;
}

// Desired relative positions p_head - p_tail for the robot network, by edge.
const std::vector<std::vector<double>>& robot_displacements() {
  static const std::vector<std::vector<double>> d{
      {-9.8, 0.0}, {0.0, -9.8}, {9.8, 9.8}, {9.8, -9.8}, {0.0, 9.8},  {9.8, -9.8},
      {9.8, 9.8},  {9.8, 0.0},  {9.8, -9.8}, {9.8, 9.8}, {9.8, 9.8}};
  return d;
}

Scenario robot_scenario(const std::string& name, const std::vector<int>& leaders) {
  LeaderFollowerGraph g = robot_graph(leaders);
  FormationSpec f;
  f.dimension = 2;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    f.displacements[g.edge_at(k).id] = robot_displacements()[k];
  }
  Eigen::MatrixXd p0 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.node_count()), 2);
  return Scenario{name, std::move(g), std::move(f), uniform_ppc(15.1, 0.1, 1.0), SimConfig{},
                  std::move(p0)};
}

Scenario structure_only(const std::string& name, LeaderFollowerGraph g) {
  FormationSpec f = FormationSpec::uniform(g, 1, 0.0);
  return Scenario{name, std::move(g), std::move(f), uniform_ppc(1.0, 0.1, 1.0), SimConfig{},
                  std::nullopt};
}

}  // namespace

void validate_scenario(const Scenario& s, bool for_simulation) {
  validate(s.graph);
  validate_formation(s.graph, s.formation);
  s.ppc.validate();
  for (const auto& [edge_id, _] : s.ppc.overrides) {
    if (!s.graph.has_edge(edge_id)) {
      throw FormationError("ppc override for unknown edge " + std::to_string(edge_id));
    }
  }
  s.sim.validate();
  if (!for_simulation) return;
  if (!s.initial_positions) {
    throw SimulationError(SimulationError::Kind::InvalidInput, "scenario has no initial positions");
  }
  const Eigen::MatrixXd& p = *s.initial_positions;
  if (p.rows() != static_cast<Eigen::Index>(s.graph.node_count()) ||
      p.cols() != s.formation.dimension) {
    throw SimulationError(SimulationError::Kind::InvalidInput,
                          "initial positions must be n x d");
  }
  const Eigen::MatrixXd x =
      incidence_matrix(s.graph).cast<double>().transpose() * p - s.formation.displacement_matrix(s.graph);
  for (std::size_t k = 0; k < s.graph.edge_count(); ++k) {
    const int id = s.graph.edge_at(k).id;
    const double r = rho(s.ppc.for_edge(id).funnel, 0.0);
    if (!(x.row(static_cast<Eigen::Index>(k)).cwiseAbs().maxCoeff() < r)) {
      throw SimulationError(SimulationError::Kind::InitialViolation,
                            "initial error of edge " + std::to_string(id) +
                                " lies outside its funnel");
    }
  }
}

LeaderFollowerGraph example1_graph() {
  return validate(numbered_nodes(5, {}), {{1, 2, 1}, {2, 1, 3}, {3, 1, 4}, {4, 1, 5}});
}

LeaderFollowerGraph fig2_left_graph() {
  return validate(numbered_nodes(5, {}),
                  {{1, 1, 2}, {2, 1, 3}, {3, 2, 3}, {4, 2, 5}, {5, 5, 4}, {6, 4, 3}});
}

LeaderFollowerGraph fig2_right_graph() {
  return validate(numbered_nodes(5, {}), {{1, 1, 3},
                                          {2, 3, 4},
                                          {3, 1, 4},
                                          {4, 1, 2},
                                          {5, 2, 3},
                                          {6, 2, 4},
                                          {7, 2, 5}});
}

LeaderFollowerGraph platoon_graph() {
  std::vector<Edge> edges;
  for (int k = 1; k <= 8; ++k) edges.push_back({k, k + 1, k});
  return validate(numbered_nodes(9, {3, 4, 7, 9}), std::move(edges));
}

LeaderFollowerGraph robot_graph(const std::vector<int>& leaders) {
  return validate(numbered_nodes(11, leaders), {{1, 5, 3},
                                                {2, 5, 2},
                                                {3, 6, 2},
                                                {4, 7, 6},
                                                {5, 5, 4},
                                                {6, 8, 4},
                                                {7, 9, 8},
                                                {8, 5, 1},
                                                {9, 5, 10},
                                                {10, 5, 11},
                                                {11, 7, 3}});
}

LeaderFollowerGraph cycle_graph(std::size_t m) {
  if (m < 3) throw std::invalid_argument("cycle needs at least three nodes");
  const int count = static_cast<int>(m);
  std::vector<Edge> edges;
  for (int k = 1; k <= count; ++k) edges.push_back({k, k % count + 1, k});
  return validate(numbered_nodes(count, {}), std::move(edges));
}

std::vector<std::string> builtin_scenario_names() {
  return {"graphA", "graphB", "graphC", "example1", "fig2left", "fig2right"};
}

Scenario builtin_scenario(const std::string& name) {
  if (name == "graphA") return robot_scenario(name, kGraphALeaders);
  if (name == "graphB") return robot_scenario(name, kGraphBLeaders);
  if (name == "graphC") {
    LeaderFollowerGraph g = platoon_graph();
    FormationSpec f = FormationSpec::uniform(g, 1, 30.0);
    Eigen::MatrixXd p0(9, 1);
    p0 << 0, 20, 60, 105, 125, 145, 185, 205, 250;
    return Scenario{name, std::move(g), std::move(f), uniform_ppc(20.1, 0.1, 1.0), SimConfig{},
                    std::move(p0)};
  }
  if (name == "example1") return structure_only(name, example1_graph());
  if (name == "fig2left") return structure_only(name, fig2_left_graph());
  if (name == "fig2right") return structure_only(name, fig2_right_graph());
  throw std::out_of_range("unknown scenario '" + name + "'");
}

}  // namespace fppc
