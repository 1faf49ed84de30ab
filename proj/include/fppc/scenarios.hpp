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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fppc/formation.hpp"
#include "fppc/graph.hpp"
#include "fppc/ppc.hpp"
#include "fppc/sim.hpp"

namespace fppc {

/// Everything needed to check and simulate one network.
struct Scenario {
  std::string name;
  LeaderFollowerGraph graph;
  FormationSpec formation;
  PpcConfig ppc;
  SimConfig sim;
  std::optional<Eigen::MatrixXd> initial_positions;  // n x d
};

/// Cross-checks the sections; with `for_simulation` also requires initial
/// positions strictly inside the funnels.
void validate_scenario(const Scenario& scenario, bool for_simulation);

/// Five-node star, every node a follower: e1 = (2 -> 1), e2..e4 = (1 -> 3..5).
LeaderFollowerGraph example1_graph();
/// Triangle e1 e2 e3 glued to the square e3 e4 e5 e6 along e3.
LeaderFollowerGraph fig2_left_graph();
/// Two triangles on e4 (e1 e4 e5 and e3 e4 e6), chord e2, pendant e7.
LeaderFollowerGraph fig2_right_graph();
/// Nine-vehicle line, edge k = (k+1 -> k), leaders 3, 4, 7, 9.
LeaderFollowerGraph platoon_graph();
/// Eleven-robot network with the given leaders.
LeaderFollowerGraph robot_graph(const std::vector<int>& leaders);
/// Leaderless cycle 1..m, edge k = (k+1 -> k mod m).
LeaderFollowerGraph cycle_graph(std::size_t m);

inline const std::vector<int> kGraphALeaders{2, 3, 7, 8, 9};
inline const std::vector<int> kGraphBLeaders{5, 6, 7, 8, 9};

/// graphA, graphB, graphC, example1, fig2left, fig2right.
std::vector<std::string> builtin_scenario_names();
/// Throws std::out_of_range for unknown names.
Scenario builtin_scenario(const std::string& name);

}  // namespace fppc
