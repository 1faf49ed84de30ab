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

#include "fppc/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>
#include <utility>

namespace fppc {

const char* to_string(NodeRole role) {
  return role == NodeRole::Leader ? "leader" : "follower";
}

const char* to_string(GraphError::Kind kind) {
  switch (kind) {
    case GraphError::Kind::Disconnected: return "disconnected";
    case GraphError::Kind::SelfLoop: return "self_loop";
    case GraphError::Kind::DuplicateEdge: return "duplicate_edge";
    case GraphError::Kind::DanglingEndpoint: return "dangling_endpoint";
    case GraphError::Kind::DuplicateNodeId: return "duplicate_node_id";
    case GraphError::Kind::DuplicateEdgeId: return "duplicate_edge_id";
    case GraphError::Kind::UnknownNode: return "unknown_node";
    case GraphError::Kind::UnknownEdge: return "unknown_edge";
    case GraphError::Kind::EmptySubset: return "empty_subset";
  }
  return "unknown";
}

LeaderFollowerGraph::LeaderFollowerGraph(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  using K = GraphError::Kind;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!node_pos_.emplace(nodes_[i].id, i).second) {
      throw GraphError(K::DuplicateNodeId,
                       "duplicate node id " + std::to_string(nodes_[i].id));
    }
  }
  incident_.resize(nodes_.size());
  std::set<std::pair<int, int>> seen;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (!edge_pos_.emplace(e.id, k).second) {
      throw GraphError(K::DuplicateEdgeId, "duplicate edge id " + std::to_string(e.id));
    }
    if (e.head == e.tail) {
      throw GraphError(K::SelfLoop, "edge " + std::to_string(e.id) + " is a self-loop on node " +
                                        std::to_string(e.head));
    }
    auto h = node_pos_.find(e.head);
    auto t = node_pos_.find(e.tail);
    if (h == node_pos_.end() || t == node_pos_.end()) {
      const int missing = h == node_pos_.end() ? e.head : e.tail;
      throw GraphError(K::DanglingEndpoint, "edge " + std::to_string(e.id) +
                                                " references undeclared node " +
                                                std::to_string(missing));
    }
    if (!seen.emplace(std::minmax(e.head, e.tail)).second) {
      throw GraphError(K::DuplicateEdge, "edge " + std::to_string(e.id) + " duplicates {" +
                                             std::to_string(e.head) + "," +
                                             std::to_string(e.tail) + "}");
    }
    head_idx_.push_back(h->second);
    tail_idx_.push_back(t->second);
    incident_[h->second].push_back(k);
    incident_[t->second].push_back(k);
  }
}

std::size_t LeaderFollowerGraph::node_index(int node_id) const {
  auto it = node_pos_.find(node_id);
  if (it == node_pos_.end()) {
    throw GraphError(GraphError::Kind::UnknownNode, "unknown node id " + std::to_string(node_id));
  }
  return it->second;
}

std::size_t LeaderFollowerGraph::edge_index(int edge_id) const {
  auto it = edge_pos_.find(edge_id);
  if (it == edge_pos_.end()) {
    throw GraphError(GraphError::Kind::UnknownEdge, "unknown edge id " + std::to_string(edge_id));
  }
  return it->second;
}

std::size_t LeaderFollowerGraph::opposite(std::size_t edge_idx, std::size_t node_idx) const {
  return head_idx_[edge_idx] == node_idx ? tail_idx_[edge_idx] : head_idx_[edge_idx];
}

std::size_t LeaderFollowerGraph::edge_between(std::size_t a, std::size_t b) const {
  for (std::size_t k : incident_[a]) {
    if (opposite(k, a) == b) return k;
  }
  return npos;
}

std::vector<int> LeaderFollowerGraph::leader_ids() const {
  std::vector<int> out;
  for (const Node& n : nodes_) {
    if (n.role == NodeRole::Leader) out.push_back(n.id);
  }
  return out;
}

std::vector<int> LeaderFollowerGraph::follower_ids() const {
  std::vector<int> out;
  for (const Node& n : nodes_) {
    if (n.role == NodeRole::Follower) out.push_back(n.id);
  }
  return out;
}

std::size_t LeaderFollowerGraph::leader_count() const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const Node& n) { return n.role == NodeRole::Leader; }));
}

bool LeaderFollowerGraph::is_connected() const {
  if (nodes_.empty()) return false;
  std::vector<char> seen(nodes_.size(), 0);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t k : incident_[v]) {
      const std::size_t w = opposite(k, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == nodes_.size();
}

LeaderFollowerGraph LeaderFollowerGraph::with_roles(const std::vector<NodeRole>& roles) const {
  if (roles.size() != nodes_.size()) {
    throw std::invalid_argument("role vector size does not match node count");
  }
  std::vector<Node> nodes = nodes_;
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i].role = roles[i];
  return LeaderFollowerGraph(std::move(nodes), edges_);
}

LeaderFollowerGraph LeaderFollowerGraph::with_leaders(const std::vector<int>& leader_ids) const {
  std::vector<NodeRole> roles(nodes_.size(), NodeRole::Follower);
  for (int id : leader_ids) roles[node_index(id)] = NodeRole::Leader;
  return with_roles(roles);
}

bool operator==(const LeaderFollowerGraph& a, const LeaderFollowerGraph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    if (a.node_at(i).id != b.node_at(i).id || a.node_at(i).role != b.node_at(i).role) return false;
  }
  for (std::size_t k = 0; k < a.edge_count(); ++k) {
    const Edge& x = a.edge_at(k);
    const Edge& y = b.edge_at(k);
    if (x.id != y.id || x.head != y.head || x.tail != y.tail) return false;
  }
  return true;
}

LeaderFollowerGraph validate(std::vector<Node> nodes, std::vector<Edge> edges) {
  LeaderFollowerGraph graph(std::move(nodes), std::move(edges));
  validate(graph);
  return graph;
}

const LeaderFollowerGraph& validate(const LeaderFollowerGraph& graph) {
  if (!graph.is_connected()) {
    throw GraphError(GraphError::Kind::Disconnected,
                     "graph with " + std::to_string(graph.node_count()) +
                         " nodes is not connected");
  }
  return graph;
}

IncidenceMatrix incidence_matrix(const LeaderFollowerGraph& graph) {
  IncidenceMatrix d = IncidenceMatrix::Zero(static_cast<Eigen::Index>(graph.node_count()),
                                            static_cast<Eigen::Index>(graph.edge_count()));
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    d(static_cast<Eigen::Index>(graph.head_index(k)), col) = 1;
    d(static_cast<Eigen::Index>(graph.tail_index(k)), col) = -1;
  }
  return d;
}

EdgeLaplacian edge_laplacian(const LeaderFollowerGraph& graph) {
  const IncidenceMatrix d = incidence_matrix(graph);
  return d.transpose() * d;
}

EdgeLaplacian edge_laplacian_from_sharing_rules(const LeaderFollowerGraph& graph) {
  const auto m = static_cast<Eigen::Index>(graph.edge_count());
  EdgeLaplacian le = EdgeLaplacian::Zero(m, m);
  // +1 if the node is the edge's head, -1 if its tail, 0 if not an endpoint.
  auto sign_at = [&](std::size_t k, std::size_t v) {
    if (graph.head_index(k) == v) return 1;
    if (graph.tail_index(k) == v) return -1;
    return 0;
  };
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    le(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 2;
    for (std::size_t j = 0; j < graph.edge_count(); ++j) {
      if (i == j) continue;
      for (std::size_t v : {graph.head_index(i), graph.tail_index(i)}) {
        const int sj = sign_at(j, v);
        if (sj == 0) continue;
        // same direction with respect to the shared node: both point in or both out
        le(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            sign_at(i, v) == sj ? 1 : -1;
      }
    }
  }
  return le;
}

Eigen::MatrixXi leader_rows(const LeaderFollowerGraph& graph) {
  const IncidenceMatrix d = incidence_matrix(graph);
  Eigen::MatrixXi out(static_cast<Eigen::Index>(graph.leader_count()), d.cols());
  Eigen::Index r = 0;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    if (graph.is_leader_at(i)) out.row(r++) = d.row(static_cast<Eigen::Index>(i));
  }
  return out;
}

std::vector<int> edge_neighbors(const LeaderFollowerGraph& graph, int edge_id) {
  const std::size_t k = graph.edge_index(edge_id);
  std::vector<int> out;
  for (std::size_t v : {graph.head_index(k), graph.tail_index(k)}) {
    for (std::size_t j : graph.incident(v)) {
      if (j != k) out.push_back(graph.edge_at(j).id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeClasses classify_edges(const LeaderFollowerGraph& graph) {
  EdgeClasses out;
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    const bool hl = graph.is_leader_at(graph.head_index(k));
    const bool tl = graph.is_leader_at(graph.tail_index(k));
    const int id = graph.edge_at(k).id;
    if (hl && tl) {
      out.leader_leader.push_back(id);
    } else if (!hl && !tl) {
      out.follower_follower.push_back(id);
    } else {
      out.leader_follower.push_back(id);
    }
  }
  return out;
}

LeaderFollowerGraph induced_subgraph(const LeaderFollowerGraph& graph,
                                     const std::vector<int>& node_ids) {
  if (node_ids.empty()) {
    throw GraphError(GraphError::Kind::EmptySubset, "induced subgraph of an empty node set");
  }
  std::vector<char> keep(graph.node_count(), 0);
  for (int id : node_ids) keep[graph.node_index(id)] = 1;
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    if (keep[i]) nodes.push_back(graph.node_at(i));
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    if (keep[graph.head_index(k)] && keep[graph.tail_index(k)]) edges.push_back(graph.edge_at(k));
  }
  return LeaderFollowerGraph(std::move(nodes), std::move(edges));
}

}  // namespace fppc
