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
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace fppc {

enum class NodeRole { Leader, Follower };

const char* to_string(NodeRole role);

struct Node {
  int id;
  NodeRole role;
};

/// An undirected edge with a fixed bookkeeping orientation. The head carries
/// +1 in the incidence matrix, the tail -1.
struct Edge {
  int id;
  int head;
  int tail;
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind {
    Disconnected,
    SelfLoop,
    DuplicateEdge,
    DanglingEndpoint,
    DuplicateNodeId,
    DuplicateEdgeId,
    UnknownNode,
    UnknownEdge,
    EmptySubset,
  };

  GraphError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(GraphError::Kind kind);

/// Leader-follower graph. Construction enforces the structural invariants
/// (unique ids, no self-loops, no multi-edges, no dangling endpoints);
/// connectivity is enforced by validate(). Immutable after construction.
///
/// Node and edge *indices* follow declaration order and are what the
/// incidence matrix rows/columns refer to.
class LeaderFollowerGraph {
 public:
  LeaderFollowerGraph(std::vector<Node> nodes, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const Node& node_at(std::size_t index) const { return nodes_.at(index); }
  const Edge& edge_at(std::size_t index) const { return edges_.at(index); }
  std::size_t node_index(int node_id) const;
  std::size_t edge_index(int edge_id) const;
  bool has_node(int node_id) const { return node_pos_.count(node_id) != 0; }
  bool has_edge(int edge_id) const { return edge_pos_.count(edge_id) != 0; }
  const Edge& edge(int edge_id) const { return edges_[edge_index(edge_id)]; }

  NodeRole role(int node_id) const { return nodes_[node_index(node_id)].role; }
  bool is_leader(int node_id) const { return role(node_id) == NodeRole::Leader; }
  bool is_leader_at(std::size_t index) const {
    return nodes_[index].role == NodeRole::Leader;
  }

  /// Edge indices incident to the node at `index`, in declaration order.
  const std::vector<std::size_t>& incident(std::size_t index) const {
    return incident_[index];
  }
  std::size_t degree(int node_id) const { return incident_[node_index(node_id)].size(); }

  /// Index of the endpoint of edge `edge_idx` opposite to node `node_idx`.
  std::size_t opposite(std::size_t edge_idx, std::size_t node_idx) const;
  std::size_t head_index(std::size_t edge_idx) const { return head_idx_[edge_idx]; }
  std::size_t tail_index(std::size_t edge_idx) const { return tail_idx_[edge_idx]; }

  /// Index of the edge joining two node indices, or npos.
  std::size_t edge_between(std::size_t a, std::size_t b) const;

  std::vector<int> leader_ids() const;
  std::vector<int> follower_ids() const;
  std::size_t leader_count() const;
  std::size_t follower_count() const { return node_count() - leader_count(); }

  bool is_connected() const;
  bool is_tree() const { return is_connected() && edge_count() + 1 == node_count(); }

  /// Same structure with the roles replaced (indexed by node declaration order).
  LeaderFollowerGraph with_roles(const std::vector<NodeRole>& roles) const;
  /// Same structure with exactly the given node ids as leaders.
  LeaderFollowerGraph with_leaders(const std::vector<int>& leader_ids) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<int, std::size_t> node_pos_;
  std::unordered_map<int, std::size_t> edge_pos_;
  std::vector<std::size_t> head_idx_;
  std::vector<std::size_t> tail_idx_;
  std::vector<std::vector<std::size_t>> incident_;
};

bool operator==(const LeaderFollowerGraph& a, const LeaderFollowerGraph& b);

/// Builds the graph and additionally requires a single connected component.
LeaderFollowerGraph validate(std::vector<Node> nodes, std::vector<Edge> edges);
const LeaderFollowerGraph& validate(const LeaderFollowerGraph& graph);

using IncidenceMatrix = Eigen::MatrixXi;
using EdgeLaplacian = Eigen::MatrixXi;

/// n x m matrix, +1 at the head of each edge and -1 at its tail.
IncidenceMatrix incidence_matrix(const LeaderFollowerGraph& graph);

/// D^T D.
EdgeLaplacian edge_laplacian(const LeaderFollowerGraph& graph);

/// Edge Laplacian assembled entry by entry from the shared-node rules
/// (2 on the diagonal, +1 for a shared node with the same direction, -1 for
/// opposite directions, 0 otherwise). Used to cross-check edge_laplacian().
EdgeLaplacian edge_laplacian_from_sharing_rules(const LeaderFollowerGraph& graph);

/// Rows of D belonging to leaders, in node declaration order.
Eigen::MatrixXi leader_rows(const LeaderFollowerGraph& graph);

/// Edge ids sharing exactly one node with `edge_id`, ascending.
std::vector<int> edge_neighbors(const LeaderFollowerGraph& graph, int edge_id);

struct EdgeClasses {
  std::vector<int> follower_follower;
  std::vector<int> leader_leader;
  std::vector<int> leader_follower;
};

EdgeClasses classify_edges(const LeaderFollowerGraph& graph);

/// Induced subgraph on the given node ids; roles are inherited and the
/// result may be disconnected. Node and edge order follow the parent graph.
LeaderFollowerGraph induced_subgraph(const LeaderFollowerGraph& graph,
                                     const std::vector<int>& node_ids);

}  // namespace fppc
