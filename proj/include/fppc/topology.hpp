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
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fppc/graph.hpp"

namespace fppc {

class TopologyError : public std::runtime_error {
 public:
  enum class Kind { NotATree, EnumerationCap, InvalidPath };

  TopologyError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Followers considered by the leaderless-subgraph quantification.
inline constexpr std::size_t kFollowerEnumerationCap = 20;
/// Nodes considered by exhaustive leader selection.
inline constexpr std::size_t kLeaderSearchCap = 16;
/// Graphs up to this size get their follower-end subgraph certified by
/// exhaustive subset search.
inline constexpr std::size_t kBruteForceCertifyCap = 12;
/// Upper bound on cycles or paths produced by a single enumeration.
inline constexpr std::size_t kEnumerationLimit = 1'000'000;

/// Simple cycle, edges and nodes listed in traversal order.
struct Cycle {
  std::vector<int> edges;
  std::vector<int> nodes;

  std::size_t length() const noexcept { return edges.size(); }
  std::vector<int> sorted_edges() const;
};

/// Simple path given by its node sequence and the connecting edges.
struct FlfPath {
  std::vector<int> nodes;
  std::vector<int> edges;

  std::size_t length() const noexcept { return edges.size(); }
  /// A single follower-follower edge seen as a path with no leader interior.
  bool is_bare() const noexcept { return nodes.size() == 2; }
  friend bool operator==(const FlfPath&, const FlfPath&) = default;
};

/// Resolves a node sequence into a path of `graph` (edges filled in).
/// Throws TopologyError::InvalidPath if consecutive nodes are not adjacent or
/// a node repeats.
FlfPath make_path(const LeaderFollowerGraph& graph, const std::vector<int>& node_ids);

/// True iff the endpoints are followers and every interior node is a leader.
/// A bare follower-follower edge qualifies only when `allow_bare` is set.
bool is_flf_path(const LeaderFollowerGraph& graph, const FlfPath& path, bool allow_bare = false);

/// All FLF paths, each oriented from its smaller endpoint id, sorted
/// lexicographically by node list. Bare FF edges are included on request.
std::vector<FlfPath> enumerate_flf_paths(const LeaderFollowerGraph& graph,
                                         bool include_bare = false);

/// Edges off the path touching one of its two end nodes, ascending.
std::vector<int> flf_neighborhood(const LeaderFollowerGraph& graph, const FlfPath& path);

/// Every simple cycle containing the anchor, shortest first and then by
/// ascending sorted edge-id list.
std::vector<Cycle> cycles_through(const LeaderFollowerGraph& graph, int edge_id);
std::vector<Cycle> cycles_through(const LeaderFollowerGraph& graph, const FlfPath& path);

using Anchor = std::variant<int, FlfPath>;

/// Cycle set plus leftover edges, relative to an edge or a path anchor.
struct Decomposition {
  Anchor anchor;
  std::size_t anchor_length = 1;      // edges in the anchor
  std::vector<Cycle> cycles;          // selected cycles
  std::vector<int> leftover;          // edges in no selected cycle, anchor excluded
  std::vector<int> anchor_neighbors;  // neighborhood of the anchor
  std::vector<int> neighbor_leftover; // neighborhood edges left over

  /// Sum over selected cycles of min(|C| - 2|anchor| - 2, 2).
  int cycle_term() const;
  /// cycle_term() + |neighbor_leftover| - 2; non-positive means the anchor
  /// error cannot grow at the funnel boundary in the worst case.
  int margin() const { return cycle_term() + static_cast<int>(neighbor_leftover.size()) - 2; }
  /// Some selected cycle is shorter than twice the anchor length.
  bool has_short_cycle() const;
};

/// Shortest-cycle decomposition: a cycle is admissible when no strictly
/// shorter anchor cycle shares an anchor-neighborhood edge with it; admissible
/// cycles are accepted in (length, edge list) order while their neighborhood
/// intersections stay pairwise disjoint.
Decomposition complete_decomposition(const LeaderFollowerGraph& graph, int edge_id);
Decomposition complete_decomposition(const LeaderFollowerGraph& graph, const FlfPath& path);

int worst_case_margin(const LeaderFollowerGraph& graph, int edge_id);
int worst_case_margin(const LeaderFollowerGraph& graph, const FlfPath& path);

struct MaxFollowerEndSubgraph {
  LeaderFollowerGraph subgraph;
  std::vector<int> removed_nodes;
  std::vector<int> removed_edges;
  std::vector<std::string> notes;
};

/// True iff every leader of `graph` is an interior node of some FLF path.
bool leaders_on_flf_paths(const LeaderFollowerGraph& graph);

/// Iteratively drops leaders lying on no FLF path. The surviving node set
/// contains every induced subgraph whose leaders all lie on FLF paths, so it
/// is the unique maximum. For graphs up to kBruteForceCertifyCap nodes the
/// result is re-checked by subset search when `certify` is set.
MaxFollowerEndSubgraph max_follower_end_subgraph(const LeaderFollowerGraph& graph,
                                                 bool certify = true);

/// Exhaustive search over node subsets; ties broken by the lexicographically
/// smallest removed set. Exponential.
MaxFollowerEndSubgraph max_follower_end_subgraph_brute_force(const LeaderFollowerGraph& graph);

enum class Condition { Lemma1, Theorem1, Theorem2 };
const char* to_string(Condition c);

struct EdgeMargin {
  int edge;
  int cycle_term;
  int neighbor_leftover;
  int margin;
  std::vector<int> subgraph_nodes;  // leaderless subgraph realising the margin
};

struct PathMargin {
  FlfPath path;
  bool bypass;
  int cycle_term;
  int neighbor_leftover;
  int margin;
};

struct Witness {
  std::optional<int> edge;
  std::optional<FlfPath> path;
  int margin;
  std::vector<int> subgraph_nodes;
};

struct ConditionReport {
  Condition condition;
  bool pass = true;
  std::vector<EdgeMargin> edges;
  std::vector<PathMargin> paths;
  std::optional<Witness> witness;
  std::vector<int> removed_nodes;  // follower-end reduction (theorem 2)
  std::vector<int> removed_edges;
  std::vector<std::string> notes;
};

/// Tree-only degree condition on the follower-induced subgraph.
ConditionReport check_lemma1(const LeaderFollowerGraph& graph);

/// Cycle condition over every leaderless induced subgraph, by enumeration of
/// the follower subsets that can influence each edge.
ConditionReport check_theorem1(const LeaderFollowerGraph& graph);

/// Edge condition on the follower-follower edges and path condition (with
/// the short-cycle bypass) on the FLF paths of the maximum follower-end
/// subgraph.
ConditionReport check_theorem2(const LeaderFollowerGraph& graph);

/// Leader sets of size <= max_leaders (roles of `graph` ignored) under which
/// check_theorem2 passes, by size then lexicographically.
std::vector<std::vector<int>> suggest_leaders(const LeaderFollowerGraph& graph,
                                              std::size_t max_leaders);

}  // namespace fppc
