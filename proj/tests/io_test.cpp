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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fppc/io.hpp"

namespace fppc {
namespace {

TEST(ScenarioJson, BuiltinsRoundTrip) {
  for (const std::string& name : builtin_scenario_names()) {
    const Scenario s = builtin_scenario(name);
    const Json j = to_json(s);
    EXPECT_EQ(j["format_version"], kScenarioFormatVersion);
    const Scenario back = scenario_from_json(parse_json(j.dump()));
    EXPECT_EQ(back.name, name);
    EXPECT_TRUE(back.graph == s.graph) << name;
    EXPECT_EQ(to_json(back), j) << name;
    EXPECT_NO_THROW(validate_scenario(back, false));
  }
}

TEST(ScenarioJson, BareGraphAndEndpointsForm) {
  const Json j = parse_json(R"({"nodes":[{"id":1,"role":"follower"},{"id":2,"role":"leader"}],
                               "edges":[{"id":7,"endpoints":[2,1]}]})");
  const Scenario s = scenario_from_json(j);
  EXPECT_EQ(s.graph.edge(7).head, 2);
  EXPECT_EQ(s.graph.edge(7).tail, 1);
  EXPECT_TRUE(s.graph.is_leader(2));
  EXPECT_FALSE(s.initial_positions.has_value());
}

TEST(ScenarioJson, PpcOverridesInheritDefaults) {
  const PpcConfig c = ppc_from_json(
      parse_json(R"({"default":{"rho0":5,"rho_inf":0.2,"l":2,"gain":1.5},"edges":{"3":{"gain":4}}})"));
  EXPECT_EQ(c.defaults.funnel.rho0, 5.0);
  EXPECT_EQ(c.for_edge(3).gain, 4.0);
  EXPECT_EQ(c.for_edge(3).funnel.decay, 2.0);
  EXPECT_EQ(c.for_edge(9).gain, 1.5);
}

TEST(ScenarioJson, MalformedInputIsAFormatError) {
  EXPECT_THROW(parse_json("{not json"), FormatError);
  EXPECT_THROW(graph_from_json(parse_json(R"({"nodes":[]})")), FormatError);
  EXPECT_THROW(graph_from_json(parse_json(R"({"nodes":[{"id":1,"role":"boss"}],"edges":[]})")),
               FormatError);
  EXPECT_THROW(graph_from_json(parse_json(R"({"nodes":[{"id":"x","role":"leader"}],"edges":[]})")),
               FormatError);
  EXPECT_THROW(sim_from_json(parse_json(R"({"integrator":"leapfrog"})")), FormatError);
  EXPECT_THROW(formation_from_json(parse_json(R"({"dimension":1,"displacements":{"a":[1]}})")),
               FormatError);
  Json s = to_json(builtin_scenario("graphC"));
  s["format_version"] = 2;
  EXPECT_THROW(scenario_from_json(s), FormatError);
  s = to_json(builtin_scenario("graphC"));
  s["initial_positions"].erase("4");
  EXPECT_THROW(scenario_from_json(s), FormatError);
}

TEST(ScenarioJson, InvariantViolationsKeepTheirOwnType) {
  const Json disconnected = parse_json(
      R"({"nodes":[{"id":1,"role":"follower"},{"id":2,"role":"follower"},{"id":3,"role":"leader"}],
          "edges":[{"id":1,"head":1,"tail":2}]})");
  EXPECT_THROW(graph_from_json(disconnected), GraphError);
}

TEST(CanonicalJson, SortedKeysAndNineDigits) {
  const Json j = {{"b", 1.0 / 3.0}, {"a", {{"z", 2}, {"y", 0.1 + 0.2}}}};
  EXPECT_EQ(canonical_dump(j), R"({"a":{"y":0.3,"z":2},"b":0.333333333})");
  EXPECT_EQ(canonical_dump(parse_json(canonical_dump(j))), canonical_dump(j));
}

TEST(Reports, ConditionReportSchema) {
  const Json r = to_json(check_theorem2(robot_graph(kGraphALeaders)));
  EXPECT_EQ(r["verdict"], "fail");
  EXPECT_EQ(r["edges"][0]["E_i"], 5);
  EXPECT_EQ(r["edges"][0]["margin"], 3);
  EXPECT_TRUE(r["paths"][0].contains("bypass"));
  EXPECT_TRUE(r["paths"][0].contains("F_i"));
  EXPECT_EQ(r["witness"]["kind"], "edge");
  const Json ok = to_json(check_theorem2(platoon_graph()));
  EXPECT_TRUE(ok["witness"].is_null());
}

TEST(Trajectories, CsvHeaderAndSummary) {
  const Scenario s = builtin_scenario("graphC");
  SimConfig sim = s.sim;
  sim.horizon = 0.01;
  const Trajectory t = simulate(s.graph, s.formation, s.ppc, sim, *s.initial_positions);
  std::ostringstream out;
  write_trajectory_csv(out, t);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("time,p_1_0,p_2_0", 0), 0u);
  EXPECT_NE(header.find(",xbar_8_0,rho_1,"), std::string::npos);
  EXPECT_NE(header.find(",u_3_0,u_4_0,u_7_0,u_9_0"), std::string::npos);
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 11);
  const Json summary = trajectory_summary(t);
  EXPECT_TRUE(summary["violations"].empty());
  EXPECT_EQ(summary["final_errors"].size(), 8u);
  EXPECT_LT(summary["max_normalized_error"].get<double>(), 1.0);
  const Json series = trajectory_series(t, 4);
  EXPECT_EQ(series["times"].size(), 4u);  // samples 0, 4, 8 and the last
}

TEST(Loading, FilesAndBuiltinNames) {
  const auto dir = std::filesystem::temp_directory_path() / "fppc_io_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "mine.json";
  std::ofstream(file) << to_json(builtin_scenario("graphB")).dump(2);
  const Scenario s = load_scenario(file.string());
  EXPECT_EQ(s.name, "graphB");
  EXPECT_EQ(load_scenario("graphC").graph.node_count(), 9u);
  EXPECT_THROW(load_scenario("no-such-thing"), FormatError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace fppc
