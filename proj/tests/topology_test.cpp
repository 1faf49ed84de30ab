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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fppc/scenarios.hpp"
#include "fppc/topology.hpp"
#include "oracles.hpp"

namespace fppc {
namespace {

using Ids = std::vector<int>;

std::vector<Ids> sorted_cycles(const Decomposition& d) {
  std::vector<Ids> out;
  for (const Cycle& c : d.cycles) out.push_back(c.sorted_edges());
  std::sort(out.begin(), out.end());
  return out;
}

Ids sorted(Ids v) {
  std::sort(v.begin(), v.end());
  return v;
}

const PathMargin* find_path(const ConditionReport& r, const Ids& nodes) {
  for (const PathMargin& p : r.paths) {
    Ids rev(p.path.nodes.rbegin(), p.path.nodes.rend());
    if (p.path.nodes == nodes || rev == nodes) return &p;
  }
  return nullptr;
}

TEST(Decomposition, TriangleOnSquareFromTheShortSide) {
  const LeaderFollowerGraph g = fig2_left_graph();
  const Decomposition d = complete_decomposition(g, 1);
  EXPECT_EQ(sorted_cycles(d), (std::vector<Ids>{{1, 2, 3}}));
  EXPECT_EQ(sorted(d.leftover), (Ids{4, 5, 6}));
  EXPECT_EQ(d.margin(), -1 + 1 - 2);
}

TEST(Decomposition, SharedEdgeSeesBothCycles) {
  const LeaderFollowerGraph g = fig2_left_graph();
  const Decomposition d = complete_decomposition(g, 3);
  EXPECT_EQ(sorted_cycles(d), (std::vector<Ids>{{1, 2, 3}, {3, 4, 5, 6}}));
  EXPECT_TRUE(d.leftover.empty());
}

TEST(Decomposition, LongCycleIsNeverSelected) {
  const LeaderFollowerGraph g = fig2_left_graph();
  const Ids big{1, 2, 4, 5, 6};
  for (int anchor : {1, 2}) {
    for (const Ids& c : sorted_cycles(complete_decomposition(g, anchor))) EXPECT_NE(c, big);
  }
  const auto all = cycles_through(g, 1);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[1].sorted_edges(), big);
}

TEST(Decomposition, TwoTrianglesAndOnePendantNeighbor) {
  const LeaderFollowerGraph g = fig2_right_graph();
  const Decomposition d = complete_decomposition(g, 4);
  EXPECT_EQ(sorted_cycles(d), (std::vector<Ids>{{1, 4, 5}, {3, 4, 6}}));
  EXPECT_EQ(sorted(d.leftover), (Ids{2, 7}));
  EXPECT_EQ(d.neighbor_leftover, (Ids{7}));
}

TEST(Decomposition, TreeAnchorsHaveNoCycles) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const LeaderFollowerGraph t = oracle::random_tree(rng, 2 + trial % 9, 0.3);
    for (const Edge& e : t.edges()) {
      const Decomposition d = complete_decomposition(t, e.id);
      EXPECT_TRUE(d.cycles.empty());
      EXPECT_EQ(d.margin(), static_cast<int>(edge_neighbors(t, e.id).size()) - 2);
    }
  }
}

TEST(Decomposition, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 6;
    const int m = std::min(n + trial % 5, n * (n - 1) / 2);
    const LeaderFollowerGraph g = oracle::random_connected(rng, n, m, 0.0);
    for (const Edge& e : g.edges()) {
      const auto sets = oracle::anchor_sets(g, e.id);
      const Decomposition d = complete_decomposition(g, e.id);
      EXPECT_EQ(oracle::decomposition_problems(g, sets, d), std::vector<std::string>{});
      EXPECT_EQ(d.margin(), oracle::margin(g, sets));
    }
  }
}

TEST(Paths, DetectionAndEnumeration) {
  const LeaderFollowerGraph a = robot_graph(kGraphALeaders);
  EXPECT_TRUE(is_flf_path(a, make_path(a, {5, 2, 6})));
  EXPECT_FALSE(is_flf_path(a, make_path(a, {5, 4})));
  EXPECT_TRUE(is_flf_path(a, make_path(a, {5, 4}), true));
  EXPECT_FALSE(is_flf_path(a, make_path(a, {2, 6, 7})));
  EXPECT_THROW(make_path(a, {5, 6}), TopologyError);
  EXPECT_THROW(make_path(a, {5, 2, 5}), TopologyError);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 7;
    const LeaderFollowerGraph g =
        oracle::random_connected(rng, n, std::min(n + 2, n * (n - 1) / 2), 0.5);
    for (bool bare : {false, true}) {
      std::vector<Ids> got;
      for (const FlfPath& p : enumerate_flf_paths(g, bare)) got.push_back(p.nodes);
      EXPECT_EQ(got, oracle::flf_paths(g, bare));
    }
  }
}

TEST(Paths, NeighborhoodUsesEndpointsOnly) {
  const LeaderFollowerGraph a = robot_graph(kGraphALeaders);
  EXPECT_EQ(flf_neighborhood(a, make_path(a, {5, 2, 6})), (Ids{1, 4, 5, 8, 9, 10}));
}

TEST(FollowerEnd, RobotAndPlatoonReductions) {
  const auto a = max_follower_end_subgraph(robot_graph(kGraphALeaders));
  EXPECT_EQ(a.removed_nodes, (Ids{8, 9}));
  EXPECT_EQ(a.removed_edges, (Ids{6, 7}));
  const auto b = max_follower_end_subgraph(robot_graph(kGraphBLeaders));
  EXPECT_EQ(b.removed_nodes, (Ids{8, 9}));
  const auto c = max_follower_end_subgraph(platoon_graph());
  EXPECT_EQ(c.removed_nodes, (Ids{9}));
  EXPECT_EQ(c.removed_edges, (Ids{8}));
  EXPECT_TRUE(leaders_on_flf_paths(c.subgraph));
}

TEST(FollowerEnd, PeelingMatchesSubsetSearch) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 9;
    const int m = std::min(n - 1 + trial % 4, n * (n - 1) / 2);
    const LeaderFollowerGraph g = oracle::random_connected(rng, n, m, 0.6);
    const auto fast = max_follower_end_subgraph(g, false);
    EXPECT_EQ(fast.removed_nodes, oracle::mfes_removed_nodes(g));
    EXPECT_EQ(fast.removed_nodes, max_follower_end_subgraph_brute_force(g).removed_nodes);
  }
}

TEST(Conditions, RobotGraphAFails) {
  const ConditionReport r = check_theorem2(robot_graph(kGraphALeaders));
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.edges.size(), 4u);
  for (const EdgeMargin& e : r.edges) {
    EXPECT_EQ(e.cycle_term, 0);
    EXPECT_EQ(e.neighbor_leftover, 5);
    EXPECT_EQ(e.margin, 3);
  }
  ASSERT_EQ(r.paths.size(), 2u);
  const PathMargin* p1 = find_path(r, {5, 2, 6});
  ASSERT_NE(p1, nullptr);
  EXPECT_FALSE(p1->bypass);
  EXPECT_EQ(p1->cycle_term, -1);
  EXPECT_EQ(p1->neighbor_leftover, 4);
  EXPECT_EQ(p1->margin, 1);
  const PathMargin* p2 = find_path(r, {5, 3, 7, 6});
  ASSERT_NE(p2, nullptr);
  EXPECT_TRUE(p2->bypass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->margin, 3);
}

TEST(Conditions, RobotGraphBPasses) {
  const ConditionReport r = check_theorem2(robot_graph(kGraphBLeaders));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.edges.empty());
  EXPECT_EQ(r.paths.size(), 16u);
  const PathMargin* p4 = find_path(r, {2, 5, 3});
  ASSERT_NE(p4, nullptr);
  EXPECT_EQ(p4->cycle_term, -1);
  EXPECT_EQ(p4->neighbor_leftover, 0);
  const PathMargin* p3 = find_path(r, {2, 6, 7, 3});
  ASSERT_NE(p3, nullptr);
  EXPECT_TRUE(p3->bypass);
  for (const PathMargin& p : r.paths) {
    const bool hub = p.path.nodes.size() == 3 && p.path.nodes[1] == 5;
    if (!hub) continue;
    const int a = p.path.nodes.front();
    const int b = p.path.nodes.back();
    const bool outer_only = a != 2 && a != 3 && b != 2 && b != 3;
    if (outer_only) {
      EXPECT_EQ(p.neighbor_leftover, 0);
    }
  }
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Conditions, PlatoonPasses) {
  const ConditionReport r = check_theorem2(platoon_graph());
  EXPECT_TRUE(r.pass);
  for (const EdgeMargin& e : r.edges) EXPECT_LE(e.margin, 0);
  for (const PathMargin& p : r.paths) EXPECT_TRUE(p.bypass || p.margin <= 0);
}

TEST(Conditions, LeaderlessCyclesAndStar) {
  const ConditionReport tri = check_theorem1(cycle_graph(3));
  EXPECT_TRUE(tri.pass);
  // The worst case over subgraphs is a lone edge, not the full triangle.
  for (const EdgeMargin& e : tri.edges) EXPECT_EQ(e.margin, -2);
  for (const EdgeMargin& e : check_theorem2(cycle_graph(3)).edges) EXPECT_EQ(e.margin, -3);
  const ConditionReport star = check_theorem1(example1_graph());
  EXPECT_FALSE(star.pass);
  EXPECT_EQ(star.witness->margin, 1);
  const ConditionReport lemma = check_lemma1(example1_graph());
  EXPECT_FALSE(lemma.pass);
  EXPECT_THROW(check_lemma1(cycle_graph(4)), TopologyError);
}

TEST(Conditions, LeaderlessSubgraphCheckMatchesOracle) {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + trial % 6;
    const int m = std::min(n + trial % 4, n * (n - 1) / 2);
    const LeaderFollowerGraph g = oracle::random_connected(rng, n, m, 0.35);
    const ConditionReport r = check_theorem1(g);
    const oracle::LeaderlessResult o = oracle::leaderless_subgraph_check(g);
    EXPECT_EQ(r.pass, o.pass);
    std::vector<std::pair<int, int>> got;
    for (const EdgeMargin& e : r.edges) got.emplace_back(e.edge, e.margin);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, o.worst);
  }
}

TEST(Conditions, TreeConditionsAgree) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const LeaderFollowerGraph t = oracle::random_tree(rng, 2 + trial % 12, 0.3);
    const bool lemma = check_lemma1(t).pass;
    EXPECT_EQ(lemma, check_theorem1(t).pass);
    EXPECT_EQ(lemma, oracle::tree_degree_check(t));
  }
}

TEST(Conditions, ReportInvariants) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + trial % 7;
    const LeaderFollowerGraph g =
        oracle::random_connected(rng, n, std::min(n + trial % 3, n * (n - 1) / 2), 0.5);
    const ConditionReport r = check_theorem2(g);
    if (r.pass) {
      for (const EdgeMargin& e : r.edges) EXPECT_LE(e.margin, 0);
      for (const PathMargin& p : r.paths) EXPECT_TRUE(p.bypass || p.margin <= 0);
      EXPECT_FALSE(r.witness.has_value());
    } else {
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_GT(r.witness->margin, 0);
    }
  }
}

TEST(Conditions, EnumerationCapIsEnforced) {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (int id = 1; id <= 24; ++id) nodes.push_back({id, NodeRole::Follower});
  for (int id = 2; id <= 24; ++id) edges.push_back({id - 1, 1, id});
  edges.push_back({24, 2, 3});
  const LeaderFollowerGraph wide = validate(nodes, edges);
  try {
    check_theorem1(wide);
    FAIL() << "expected the cap to trigger";
  } catch (const TopologyError& e) {
    EXPECT_EQ(e.kind(), TopologyError::Kind::EnumerationCap);
  }
}

TEST(Suggest, FindsPassingLeaderSetsInOrder) {
  const auto sets = suggest_leaders(robot_graph({}), 5);
  ASSERT_FALSE(sets.empty());
  for (std::size_t i = 1; i < sets.size(); ++i) {
    const auto& a = sets[i - 1];
    const auto& b = sets[i];
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
  for (const auto& s : sets) EXPECT_TRUE(check_theorem2(robot_graph(s)).pass);
  EXPECT_NE(std::find(sets.begin(), sets.end(), kGraphBLeaders), sets.end());
  EXPECT_EQ(std::find(sets.begin(), sets.end(), kGraphALeaders), sets.end());
}

}  // namespace
}  // namespace fppc
