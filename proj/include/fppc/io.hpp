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
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "fppc/formation.hpp"
#include "fppc/graph.hpp"
#include "fppc/ppc.hpp"
#include "fppc/scenarios.hpp"
#include "fppc/sim.hpp"
#include "fppc/topology.hpp"

namespace fppc {

using Json = nlohmann::json;

inline constexpr int kScenarioFormatVersion = 1;

/// Structurally malformed input: bad JSON, missing keys, wrong types.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const LeaderFollowerGraph& graph);
/// {"nodes":[{"id","role"}],"edges":[{"id","head","tail"}]}; an edge may give
/// "endpoints":[a,b] instead, oriented head = a. Connectivity is enforced.
LeaderFollowerGraph graph_from_json(const Json& j);

Json to_json(const FormationSpec& formation);
FormationSpec formation_from_json(const Json& j);

/// {"default":{"rho0","rho_inf","l","gain"},"edges":{"<id>":{...}}}; edge
/// entries override individual default fields.
Json to_json(const PpcConfig& config);
PpcConfig ppc_from_json(const Json& j);

Json to_json(const SimConfig& sim);
SimConfig sim_from_json(const Json& j);

Json to_json(const Scenario& scenario);
/// Accepts either a full scenario or a bare graph document.
Scenario scenario_from_json(const Json& j);

Json to_json(const FlfPath& path);
Json to_json(const Decomposition& decomposition);
Json to_json(const ConditionReport& report);
Json to_json(const MaxFollowerEndSubgraph& star);

/// {max_normalized_error, violations, final_errors, ...}.
Json trajectory_summary(const Trajectory& trajectory);
/// Every `stride`-th sample (plus the last) of times, edge errors, radii and
/// positions.
Json trajectory_series(const Trajectory& trajectory, std::size_t stride);
/// time, p_<node>_<dim>..., xbar_<edge>_<dim>..., rho_<edge>..., u_<leader>_<dim>...
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

/// Sorted keys, floating-point values rounded to 9 significant digits.
std::string canonical_dump(const Json& j);

Json parse_json(const std::string& text);
/// Reads a scenario file, or falls back to a built-in scenario name.
Scenario load_scenario(const std::string& path_or_name);

}  // namespace fppc
