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

#include "fppc/topology.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <utility>

namespace fppc {

namespace {

using Mask = std::vector<char>;

// Anchor as seen by the cycle enumeration: a node sequence v1..vk and the
// k-1 edges joining it (k = 2 for a single edge).
struct AnchorShape {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
};

AnchorShape shape_of_edge(const LeaderFollowerGraph& g, int edge_id) {
  const std::size_t k = g.edge_index(edge_id);
  return {{g.head_index(k), g.tail_index(k)}, {k}};
}

AnchorShape shape_of_path(const LeaderFollowerGraph& g, const FlfPath& path) {
  AnchorShape s;
  for (int v : path.nodes) s.nodes.push_back(g.node_index(v));
  for (int e : path.edges) s.edges.push_back(g.edge_index(e));
  if (s.nodes.size() < 2 || s.edges.size() + 1 != s.nodes.size()) {
    throw TopologyError(TopologyError::Kind::InvalidPath, "path needs at least two nodes");
  }
  for (std::size_t i = 0; i + 1 < s.nodes.size(); ++i) {
    const std::size_t k = s.edges[i];
    const bool joins = (g.head_index(k) == s.nodes[i] && g.tail_index(k) == s.nodes[i + 1]) ||
                       (g.tail_index(k) == s.nodes[i] && g.head_index(k) == s.nodes[i + 1]);
    if (!joins) {
      throw TopologyError(TopologyError::Kind::InvalidPath,
                          "edge " + std::to_string(path.edges[i]) + " does not join nodes " +
                              std::to_string(path.nodes[i]) + " and " +
                              std::to_string(path.nodes[i + 1]));
    }
  }
  return s;
}

// Cycle with its edges as indices; kept alongside the id form for filtering.
struct RawCycle {
  std::vector<std::size_t> edges;  // traversal order
  std::vector<std::size_t> nodes;
  std::vector<int> key;            // sorted edge ids
};

std::vector<RawCycle> raw_cycles(const LeaderFollowerGraph& g, const AnchorShape& shape) {
  std::vector<RawCycle> out;
  Mask visited(g.node_count(), 0);
  Mask forbidden(g.edge_count(), 0);
  for (std::size_t k : shape.edges) forbidden[k] = 1;
  const std::size_t target = shape.nodes.front();
  const std::size_t start = shape.nodes.back();
  for (std::size_t i = 1; i < shape.nodes.size(); ++i) visited[shape.nodes[i]] = 1;

  std::vector<std::size_t> path_edges;
  std::vector<std::size_t> path_nodes;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    for (std::size_t k : g.incident(v)) {
      if (forbidden[k]) continue;
      const std::size_t w = g.opposite(k, v);
      if (w == target) {
        RawCycle c;
        c.edges = shape.edges;
        c.edges.insert(c.edges.end(), path_edges.begin(), path_edges.end());
        c.edges.push_back(k);
        c.nodes = shape.nodes;
        c.nodes.insert(c.nodes.end(), path_nodes.begin(), path_nodes.end());
        out.push_back(std::move(c));
        if (out.size() > kEnumerationLimit) {
          throw TopologyError(TopologyError::Kind::EnumerationCap,
                              "cycle enumeration exceeded " + std::to_string(kEnumerationLimit));
        }
        continue;
      }
      if (visited[w]) continue;
      visited[w] = 1;
      path_edges.push_back(k);
      path_nodes.push_back(w);
      walk(w);
      path_nodes.pop_back();
      path_edges.pop_back();
      visited[w] = 0;
    }
  };
  walk(start);

  for (RawCycle& c : out) {
    for (std::size_t k : c.edges) c.key.push_back(g.edge_at(k).id);
    std::sort(c.key.begin(), c.key.end());
  }
  std::sort(out.begin(), out.end(), [](const RawCycle& a, const RawCycle& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.key < b.key;
  });
  return out;
}

Cycle to_cycle(const LeaderFollowerGraph& g, const RawCycle& raw) {
  Cycle c;
  for (std::size_t k : raw.edges) c.edges.push_back(g.edge_at(k).id);
  for (std::size_t v : raw.nodes) c.nodes.push_back(g.node_at(v).id);
  return c;
}

// Edges off the anchor incident to its first or last node.
Mask anchor_neighborhood(const LeaderFollowerGraph& g, const AnchorShape& shape) {
  Mask in_anchor(g.edge_count(), 0);
  for (std::size_t k : shape.edges) in_anchor[k] = 1;
  Mask out(g.edge_count(), 0);
  for (std::size_t v : {shape.nodes.front(), shape.nodes.back()}) {
    for (std::size_t k : g.incident(v)) {
      if (!in_anchor[k]) out[k] = 1;
    }
  }
  return out;
}

std::vector<int> ids_of(const LeaderFollowerGraph& g, const Mask& edges) {
  std::vector<int> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k]) out.push_back(g.edge_at(k).id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Indices (into `cycles`, which is sorted by length) of the selected cycles.
std::vector<std::size_t> select_cycles(const std::vector<const RawCycle*>& cycles,
                                       const Mask& neighborhood) {
  std::vector<std::vector<std::size_t>> touch(cycles.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t k : cycles[c]->edges) {
      if (neighborhood[k]) touch[c].push_back(k);
    }
    std::sort(touch[c].begin(), touch[c].end());
  }
  auto overlaps = [&](std::size_t a, std::size_t b) {
    for (std::size_t k : touch[a]) {
      if (std::binary_search(touch[b].begin(), touch[b].end(), k)) return true;
    }
    return false;
  };
  std::vector<std::size_t> selected;
  Mask claimed(neighborhood.size(), 0);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    bool admissible = true;
    for (std::size_t s = 0; s < c && admissible; ++s) {
      if (cycles[s]->edges.size() < cycles[c]->edges.size() && overlaps(s, c)) admissible = false;
    }
    if (!admissible) continue;
    bool disjoint = true;
    for (std::size_t k : touch[c]) {
      if (claimed[k]) disjoint = false;
    }
    if (!disjoint) continue;
    for (std::size_t k : touch[c]) claimed[k] = 1;
    selected.push_back(c);
  }
  return selected;
}

// Decomposition of the subgraph of `g` whose nodes are `alive` (all nodes
// when empty); `cycles` are the anchor cycles of the full graph.
Decomposition decompose(const LeaderFollowerGraph& g, const AnchorShape& shape, Anchor anchor,
                        const std::vector<RawCycle>& cycles, const Mask& alive = {}) {
  auto node_alive = [&](std::size_t v) { return alive.empty() || alive[v]; };
  auto edge_alive = [&](std::size_t k) {
    return node_alive(g.head_index(k)) && node_alive(g.tail_index(k));
  };
  Mask neighborhood = anchor_neighborhood(g, shape);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!edge_alive(k)) neighborhood[k] = 0;
  }
  std::vector<const RawCycle*> live;
  for (const RawCycle& c : cycles) {
    if (std::all_of(c.nodes.begin(), c.nodes.end(), node_alive)) live.push_back(&c);
  }
  const std::vector<std::size_t> chosen = select_cycles(live, neighborhood);

  Decomposition d;
  d.anchor = std::move(anchor);
  d.anchor_length = shape.edges.size();
  Mask covered(g.edge_count(), 0);
  for (std::size_t k : shape.edges) covered[k] = 1;
  for (std::size_t c : chosen) {
    d.cycles.push_back(to_cycle(g, *live[c]));
    for (std::size_t k : live[c]->edges) covered[k] = 1;
  }
  Mask leftover(g.edge_count(), 0);
  Mask nleft(g.edge_count(), 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!edge_alive(k) || covered[k]) continue;
    leftover[k] = 1;
    if (neighborhood[k]) nleft[k] = 1;
  }
  d.leftover = ids_of(g, leftover);
  d.anchor_neighbors = ids_of(g, neighborhood);
  d.neighbor_leftover = ids_of(g, nleft);
  return d;
}

// Two internally disjoint leader-only routes from `leader` to distinct
// followers exist iff the leader is interior to an FLF path. Checked as a
// unit-capacity max flow of value 2 on the node-split graph.
bool on_flf_path(const LeaderFollowerGraph& g, std::size_t leader, const Mask& alive) {
  const std::size_t n = g.node_count();
  const std::size_t sink = 2 * n;
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out(2 * n + 1);
  auto add = [&](std::size_t a, std::size_t b) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, 1});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0});
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (g.is_leader_at(v)) {
      if (v != leader) add(2 * v, 2 * v + 1);
    } else {
      add(2 * v, sink);
    }
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const std::size_t a = g.head_index(k);
    const std::size_t b = g.tail_index(k);
    if (!alive[a] || !alive[b]) continue;
    if (g.is_leader_at(a)) add(2 * a + 1, 2 * b);
    if (g.is_leader_at(b)) add(2 * b + 1, 2 * a);
  }
  const std::size_t source = 2 * leader + 1;
  int flow = 0;
  while (flow < 2) {
    std::vector<std::size_t> via(2 * n + 1, static_cast<std::size_t>(-1));
    std::vector<char> seen(2 * n + 1, 0);
    std::queue<std::size_t> q;
    q.push(source);
    seen[source] = 1;
    while (!q.empty() && !seen[sink]) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t a : out[x]) {
        if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
          seen[arcs[a].to] = 1;
          via[arcs[a].to] = a;
          q.push(arcs[a].to);
        }
      }
    }
    if (!seen[sink]) break;
    for (std::size_t x = sink; x != source;) {
      const std::size_t a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
  return flow == 2;
}

bool qualifies(const LeaderFollowerGraph& g, const Mask& alive) {
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (alive[v] && g.is_leader_at(v) && !on_flf_path(g, v, alive)) return false;
  }
  return true;
}

LeaderFollowerGraph induce(const LeaderFollowerGraph& g, const Mask& alive) {
  std::vector<Node> nodes;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (alive[v]) nodes.push_back(g.node_at(v));
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (alive[g.head_index(k)] && alive[g.tail_index(k)]) edges.push_back(g.edge_at(k));
  }
  return LeaderFollowerGraph(std::move(nodes), std::move(edges));
}

MaxFollowerEndSubgraph finish(const LeaderFollowerGraph& g, const Mask& alive) {
  MaxFollowerEndSubgraph out{induce(g, alive), {}, {}, {}};
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (!alive[v]) out.removed_nodes.push_back(g.node_at(v).id);
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!alive[g.head_index(k)] || !alive[g.tail_index(k)]) {
      out.removed_edges.push_back(g.edge_at(k).id);
    }
  }
  std::sort(out.removed_nodes.begin(), out.removed_nodes.end());
  std::sort(out.removed_edges.begin(), out.removed_edges.end());
  return out;
}

// Leader cluster around `leader` that touches exactly one follower, through
// at least two edges: its cycles close on that follower instead of forming
// FLF paths.
std::optional<int> closed_loop_follower(const LeaderFollowerGraph& g, std::size_t leader,
                                        const Mask& alive) {
  Mask in_cluster(g.node_count(), 0);
  std::queue<std::size_t> q;
  q.push(leader);
  in_cluster[leader] = 1;
  std::set<std::size_t> followers;
  std::size_t contacts = 0;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t k : g.incident(v)) {
      const std::size_t w = g.opposite(k, v);
      if (!alive[w]) continue;
      if (g.is_leader_at(w)) {
        if (!in_cluster[w]) {
          in_cluster[w] = 1;
          q.push(w);
        }
      } else {
        followers.insert(w);
        ++contacts;
      }
    }
  }
  if (followers.size() == 1 && contacts >= 2) return g.node_at(*followers.begin()).id;
  return std::nullopt;
}

std::vector<std::size_t> follower_indices(const LeaderFollowerGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    if (!g.is_leader_at(v)) out.push_back(v);
  }
  return out;
}

Witness edge_witness(const EdgeMargin& r) { return {r.edge, std::nullopt, r.margin, r.subgraph_nodes}; }

ConditionReport theorem2(const LeaderFollowerGraph& graph, bool certify) {
  ConditionReport report;
  report.condition = Condition::Theorem2;
  MaxFollowerEndSubgraph star = max_follower_end_subgraph(graph, certify);
  report.removed_nodes = star.removed_nodes;
  report.removed_edges = star.removed_edges;
  report.notes = star.notes;
  const LeaderFollowerGraph& gs = star.subgraph;

  for (int e : classify_edges(gs).follower_follower) {
    const Decomposition by_edge = complete_decomposition(gs, e);
    const Edge& edge = gs.edge(e);
    const Decomposition by_path = complete_decomposition(gs, make_path(gs, {edge.head, edge.tail}));
    if (by_edge.margin() != by_path.margin() || by_edge.cycle_term() != by_path.cycle_term()) {
      throw std::logic_error("edge and generalized-path margins disagree on edge " +
                             std::to_string(e));
    }
    EdgeMargin r{e, by_edge.cycle_term(), static_cast<int>(by_edge.neighbor_leftover.size()),
                 by_edge.margin(), {}};
    if (r.margin > 0 && report.pass) {
      report.pass = false;
      report.witness = edge_witness(r);
    }
    report.edges.push_back(std::move(r));
  }

  const std::vector<FlfPath> paths = enumerate_flf_paths(gs);
  std::set<int> covered;
  for (const FlfPath& p : paths) {
    const Decomposition d = complete_decomposition(gs, p);
    PathMargin r{p, d.has_short_cycle(), d.cycle_term(),
                 static_cast<int>(d.neighbor_leftover.size()), d.margin()};
    if (!r.bypass && r.margin > 0 && report.pass) {
      report.pass = false;
      report.witness = Witness{std::nullopt, p, r.margin, {}};
    }
    covered.insert(p.edges.begin(), p.edges.end());
    report.paths.push_back(std::move(r));
  }
  const EdgeClasses classes = classify_edges(gs);
  for (const auto* group : {&classes.leader_follower, &classes.leader_leader}) {
    for (int e : *group) {
      if (!covered.count(e)) {
        report.notes.push_back("edge " + std::to_string(e) + " lies on no FLF path");
      }
    }
  }
  return report;
}

}  // namespace

std::vector<int> Cycle::sorted_edges() const {
  std::vector<int> out = edges;
  std::sort(out.begin(), out.end());
  return out;
}

FlfPath make_path(const LeaderFollowerGraph& graph, const std::vector<int>& node_ids) {
  if (node_ids.size() < 2) {
    throw TopologyError(TopologyError::Kind::InvalidPath, "path needs at least two nodes");
  }
  std::set<int> seen;
  FlfPath p;
  p.nodes = node_ids;
  for (std::size_t i = 0; i < node_ids.size(); ++i) {
    if (!graph.has_node(node_ids[i]) || !seen.insert(node_ids[i]).second) {
      throw TopologyError(TopologyError::Kind::InvalidPath,
                          "node " + std::to_string(node_ids[i]) + " is unknown or repeated");
    }
    if (i == 0) continue;
    const std::size_t k =
        graph.edge_between(graph.node_index(node_ids[i - 1]), graph.node_index(node_ids[i]));
    if (k == LeaderFollowerGraph::npos) {
      throw TopologyError(TopologyError::Kind::InvalidPath,
                          "nodes " + std::to_string(node_ids[i - 1]) + " and " +
                              std::to_string(node_ids[i]) + " are not adjacent");
    }
    p.edges.push_back(graph.edge_at(k).id);
  }
  return p;
}

bool is_flf_path(const LeaderFollowerGraph& graph, const FlfPath& path, bool allow_bare) {
  if (path.nodes.size() < 2) return false;
  if (path.is_bare() && !allow_bare) return false;
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    const bool end = i == 0 || i + 1 == path.nodes.size();
    if (graph.is_leader(path.nodes[i]) == end) return false;
  }
  return true;
}

std::vector<FlfPath> enumerate_flf_paths(const LeaderFollowerGraph& graph, bool include_bare) {
  std::vector<FlfPath> out;
  Mask visited(graph.node_count(), 0);
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> edges;
  auto emit = [&](std::size_t last, std::size_t k) {
    if (graph.node_at(nodes.front()).id > graph.node_at(last).id) return;
    FlfPath p;
    for (std::size_t v : nodes) p.nodes.push_back(graph.node_at(v).id);
    p.nodes.push_back(graph.node_at(last).id);
    for (std::size_t e : edges) p.edges.push_back(graph.edge_at(e).id);
    p.edges.push_back(graph.edge_at(k).id);
    out.push_back(std::move(p));
    if (out.size() > kEnumerationLimit) {
      throw TopologyError(TopologyError::Kind::EnumerationCap,
                          "FLF path enumeration exceeded " + std::to_string(kEnumerationLimit));
    }
  };
  std::function<void(std::size_t)> extend = [&](std::size_t v) {
    for (std::size_t k : graph.incident(v)) {
      const std::size_t w = graph.opposite(k, v);
      if (visited[w]) continue;
      if (!graph.is_leader_at(w)) {
        // a follower closes the path; bare edges only when requested
        if (nodes.size() > 1 || include_bare) emit(w, k);
        continue;
      }
      visited[w] = 1;
      nodes.push_back(w);
      edges.push_back(k);
      extend(w);
      edges.pop_back();
      nodes.pop_back();
      visited[w] = 0;
    }
  };
  for (std::size_t f : follower_indices(graph)) {
    visited[f] = 1;
    nodes.assign(1, f);
    edges.clear();
    extend(f);
    visited[f] = 0;
  }
  std::sort(out.begin(), out.end(),
            [](const FlfPath& a, const FlfPath& b) { return a.nodes < b.nodes; });
  return out;
}

std::vector<int> flf_neighborhood(const LeaderFollowerGraph& graph, const FlfPath& path) {
  return ids_of(graph, anchor_neighborhood(graph, shape_of_path(graph, path)));
}

std::vector<Cycle> cycles_through(const LeaderFollowerGraph& graph, int edge_id) {
  std::vector<Cycle> out;
  for (const RawCycle& c : raw_cycles(graph, shape_of_edge(graph, edge_id))) {
    out.push_back(to_cycle(graph, c));
  }
  return out;
}

std::vector<Cycle> cycles_through(const LeaderFollowerGraph& graph, const FlfPath& path) {
  std::vector<Cycle> out;
  for (const RawCycle& c : raw_cycles(graph, shape_of_path(graph, path))) {
    out.push_back(to_cycle(graph, c));
  }
  return out;
}

int Decomposition::cycle_term() const {
  int sum = 0;
  const int twice = 2 * static_cast<int>(anchor_length);
  for (const Cycle& c : cycles) sum += std::min(static_cast<int>(c.length()) - twice - 2, 2);
  return sum;
}

bool Decomposition::has_short_cycle() const {
  return std::any_of(cycles.begin(), cycles.end(),
                     [&](const Cycle& c) { return c.length() < 2 * anchor_length; });
}

Decomposition complete_decomposition(const LeaderFollowerGraph& graph, int edge_id) {
  const AnchorShape shape = shape_of_edge(graph, edge_id);
  return decompose(graph, shape, edge_id, raw_cycles(graph, shape));
}

Decomposition complete_decomposition(const LeaderFollowerGraph& graph, const FlfPath& path) {
  const AnchorShape shape = shape_of_path(graph, path);
  return decompose(graph, shape, path, raw_cycles(graph, shape));
}

int worst_case_margin(const LeaderFollowerGraph& graph, int edge_id) {
  return complete_decomposition(graph, edge_id).margin();
}

int worst_case_margin(const LeaderFollowerGraph& graph, const FlfPath& path) {
  return complete_decomposition(graph, path).margin();
}

bool leaders_on_flf_paths(const LeaderFollowerGraph& graph) {
  return qualifies(graph, Mask(graph.node_count(), 1));
}

MaxFollowerEndSubgraph max_follower_end_subgraph(const LeaderFollowerGraph& graph, bool certify) {
  Mask alive(graph.node_count(), 1);
  std::vector<std::string> notes;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> drop;
    for (std::size_t v = 0; v < graph.node_count(); ++v) {
      if (alive[v] && graph.is_leader_at(v) && !on_flf_path(graph, v, alive)) drop.push_back(v);
    }
    for (std::size_t v : drop) {
      if (auto f = closed_loop_follower(graph, v, alive)) {
        notes.push_back("leader " + std::to_string(graph.node_at(v).id) +
                        " only closes a leader loop on follower " + std::to_string(*f) +
                        "; treated as a cycle, not an FLF path");
      }
    }
    for (std::size_t v : drop) alive[v] = 0;
    changed = !drop.empty();
  }
  MaxFollowerEndSubgraph out = finish(graph, alive);
  out.notes = std::move(notes);
  if (certify && graph.node_count() <= kBruteForceCertifyCap) {
    const MaxFollowerEndSubgraph check = max_follower_end_subgraph_brute_force(graph);
    if (check.removed_nodes != out.removed_nodes) {
      throw std::logic_error("follower-end peeling disagrees with subset search");
    }
  }
  return out;
}

MaxFollowerEndSubgraph max_follower_end_subgraph_brute_force(const LeaderFollowerGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n > 24) {
    throw TopologyError(TopologyError::Kind::EnumerationCap,
                        "subset search limited to 24 nodes");
  }
  std::optional<Mask> best;
  std::vector<int> best_removed;
  std::size_t best_size = 0;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    Mask alive(n, 0);
    std::size_t size = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (bits & (1u << v)) {
        alive[v] = 1;
        ++size;
      }
    }
    if (best && size < best_size) continue;
    if (!qualifies(graph, alive)) continue;
    std::vector<int> removed;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) removed.push_back(graph.node_at(v).id);
    }
    std::sort(removed.begin(), removed.end());
    if (!best || size > best_size || removed < best_removed) {
      best = alive;
      best_size = size;
      best_removed = std::move(removed);
    }
  }
  return finish(graph, *best);
}

const char* to_string(Condition c) {
  switch (c) {
    case Condition::Lemma1: return "lemma1";
    case Condition::Theorem1: return "theorem1";
    case Condition::Theorem2: return "theorem2";
  }
  return "unknown";
}

ConditionReport check_lemma1(const LeaderFollowerGraph& graph) {
  if (!graph.is_tree()) {
    throw TopologyError(TopologyError::Kind::NotATree,
                        "lemma1 applies to trees only; use theorem1 for graphs with cycles");
  }
  ConditionReport report;
  report.condition = Condition::Lemma1;
  const std::vector<int> followers = graph.follower_ids();
  if (followers.empty()) return report;
  const LeaderFollowerGraph gf = induced_subgraph(graph, followers);
  std::vector<int> sorted = followers;
  std::sort(sorted.begin(), sorted.end());
  for (const Edge& e : gf.edges()) {
    const int degree = static_cast<int>(edge_neighbors(gf, e.id).size());
    EdgeMargin r{e.id, 0, degree, degree - 2, sorted};
    if (r.margin > 0 && report.pass) {
      report.pass = false;
      report.witness = edge_witness(r);
    }
    report.edges.push_back(std::move(r));
  }
  return report;
}

ConditionReport check_theorem1(const LeaderFollowerGraph& graph) {
  ConditionReport report;
  report.condition = Condition::Theorem1;
  const std::vector<int> followers = graph.follower_ids();
  if (followers.size() > kFollowerEnumerationCap) {
    throw TopologyError(TopologyError::Kind::EnumerationCap,
                        std::to_string(followers.size()) + " followers exceed the cap of " +
                            std::to_string(kFollowerEnumerationCap));
  }
  if (followers.empty()) return report;
  const LeaderFollowerGraph gf = induced_subgraph(graph, followers);

  for (std::size_t k = 0; k < gf.edge_count(); ++k) {
    const int edge_id = gf.edge_at(k).id;
    const AnchorShape shape = shape_of_edge(gf, edge_id);
    const std::vector<RawCycle> cycles = raw_cycles(gf, shape);
    // Only neighbors of the endpoints and nodes on anchor cycles can change
    // the margin of this edge.
    Mask relevant(gf.node_count(), 0);
    for (std::size_t v : shape.nodes) {
      for (std::size_t j : gf.incident(v)) relevant[gf.opposite(j, v)] = 1;
    }
    for (const RawCycle& c : cycles) {
      for (std::size_t v : c.nodes) relevant[v] = 1;
    }
    std::vector<std::size_t> free_nodes;
    for (std::size_t v = 0; v < gf.node_count(); ++v) {
      if (relevant[v] && v != shape.nodes[0] && v != shape.nodes[1]) free_nodes.push_back(v);
    }

    std::optional<EdgeMargin> worst;
    for (std::uint32_t bits = 0; bits < (1u << free_nodes.size()); ++bits) {
      Mask alive(gf.node_count(), 0);
      alive[shape.nodes[0]] = alive[shape.nodes[1]] = 1;
      for (std::size_t i = 0; i < free_nodes.size(); ++i) {
        if (bits & (1u << i)) alive[free_nodes[i]] = 1;
      }
      const Decomposition d = decompose(gf, shape, edge_id, cycles, alive);
      if (worst && d.margin() <= worst->margin) continue;
      std::vector<int> nodes;
      for (std::size_t v = 0; v < gf.node_count(); ++v) {
        if (alive[v]) nodes.push_back(gf.node_at(v).id);
      }
      std::sort(nodes.begin(), nodes.end());
      worst = EdgeMargin{edge_id, d.cycle_term(), static_cast<int>(d.neighbor_leftover.size()),
                         d.margin(), std::move(nodes)};
    }
    if (worst->margin > 0 && report.pass) {
      report.pass = false;
      report.witness = edge_witness(*worst);
    }
    report.edges.push_back(std::move(*worst));
  }
  return report;
}

ConditionReport check_theorem2(const LeaderFollowerGraph& graph) { return theorem2(graph, true); }

std::vector<std::vector<int>> suggest_leaders(const LeaderFollowerGraph& graph,
                                              std::size_t max_leaders) {
  const std::size_t n = graph.node_count();
  if (n > kLeaderSearchCap) {
    throw TopologyError(TopologyError::Kind::EnumerationCap,
                        std::to_string(n) + " nodes exceed the leader search cap of " +
                            std::to_string(kLeaderSearchCap));
  }
  if (max_leaders > n) {
    throw std::invalid_argument("max_leaders exceeds the node count");
  }
  std::vector<int> ids;
  for (const Node& v : graph.nodes()) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());

  std::vector<std::vector<int>> out;
  for (std::size_t count = 0; count <= max_leaders; ++count) {
    std::vector<std::size_t> pick(count);
    for (std::size_t i = 0; i < count; ++i) pick[i] = i;
    while (true) {
      std::vector<int> leaders;
      for (std::size_t i : pick) leaders.push_back(ids[i]);
      if (theorem2(graph.with_leaders(leaders), false).pass) out.push_back(leaders);
      // next combination in lexicographic order
      std::size_t i = count;
      while (i > 0 && pick[i - 1] == n - count + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < count; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace fppc
