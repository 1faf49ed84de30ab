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

#include "fppc/formation.hpp"

#include <cmath>
#include <queue>

namespace fppc {

FormationSpec FormationSpec::uniform(const LeaderFollowerGraph& graph, int dimension,
                                     double value) {
  FormationSpec spec;
  spec.dimension = dimension;
  for (const Edge& e : graph.edges()) {
    spec.displacements[e.id] = std::vector<double>(static_cast<std::size_t>(dimension), value);
  }
  return spec;
}

FormationSpec FormationSpec::from_anchors(const LeaderFollowerGraph& graph,
                                          std::map<int, std::vector<double>> anchors) {
  FormationSpec spec;
  if (anchors.empty()) throw FormationError("no anchors given");
  spec.dimension = static_cast<int>(anchors.begin()->second.size());
  for (const Edge& e : graph.edges()) {
    auto h = anchors.find(e.head);
    auto t = anchors.find(e.tail);
    if (h == anchors.end() || t == anchors.end()) {
      throw FormationError("missing anchor for an endpoint of edge " + std::to_string(e.id));
    }
    std::vector<double> d(h->second.size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = h->second[c] - t->second.at(c);
    spec.displacements[e.id] = std::move(d);
  }
  spec.anchors = std::move(anchors);
  return spec;
}

Eigen::MatrixXd FormationSpec::displacement_matrix(const LeaderFollowerGraph& graph) const {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(graph.edge_count()), dimension);
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    const int id = graph.edge_at(k).id;
    auto it = displacements.find(id);
    if (it == displacements.end()) {
      throw FormationError("no desired displacement for edge " + std::to_string(id));
    }
    if (static_cast<int>(it->second.size()) != dimension) {
      throw FormationError("displacement of edge " + std::to_string(id) + " has dimension " +
                           std::to_string(it->second.size()) + ", expected " +
                           std::to_string(dimension));
    }
    for (int c = 0; c < dimension; ++c) {
      out(static_cast<Eigen::Index>(k), c) = it->second[static_cast<std::size_t>(c)];
    }
  }
  return out;
}

void validate_formation(const LeaderFollowerGraph& graph, const FormationSpec& formation,
                        double tolerance) {
  if (formation.dimension <= 0) throw FormationError("formation dimension must be positive");
  const Eigen::MatrixXd des = formation.displacement_matrix(graph);
  for (const auto& [edge_id, _] : formation.displacements) {
    if (!graph.has_edge(edge_id)) {
      throw FormationError("displacement given for unknown edge " + std::to_string(edge_id));
    }
  }
  if (!formation.anchors.empty()) {
    for (std::size_t k = 0; k < graph.edge_count(); ++k) {
      const Edge& e = graph.edge_at(k);
      auto h = formation.anchors.find(e.head);
      auto t = formation.anchors.find(e.tail);
      if (h == formation.anchors.end() || t == formation.anchors.end()) {
        throw FormationError("anchors do not cover edge " + std::to_string(e.id));
      }
      for (int c = 0; c < formation.dimension; ++c) {
        const auto cc = static_cast<std::size_t>(c);
        const double diff = h->second.at(cc) - t->second.at(cc);
        if (std::abs(diff - des(static_cast<Eigen::Index>(k), c)) >
            tolerance * std::max(1.0, std::abs(diff))) {
          throw FormationError("anchors disagree with displacement of edge " +
                               std::to_string(e.id));
        }
      }
    }
  }
  // Zero edge error is realizable iff the displacements are cycle-consistent.
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(des.rows(), des.cols());
  realize_edge_errors(graph, des, zero, tolerance);
}

Eigen::MatrixXd realize_edge_errors(const LeaderFollowerGraph& graph,
                                    const Eigen::MatrixXd& desired_displacements,
                                    const Eigen::MatrixXd& edge_errors, double tolerance) {
  const auto n = static_cast<Eigen::Index>(graph.node_count());
  const Eigen::Index dim = desired_displacements.cols();
  // target relative position of each edge: head - tail
  const Eigen::MatrixXd target = desired_displacements + edge_errors;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, dim);
  std::vector<char> placed(graph.node_count(), 0);
  for (std::size_t root = 0; root < graph.node_count(); ++root) {
    if (placed[root]) continue;
    placed[root] = 1;
    std::queue<std::size_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (std::size_t k : graph.incident(v)) {
        const std::size_t w = graph.opposite(k, v);
        if (placed[w]) continue;
        const double sign = graph.head_index(k) == w ? 1.0 : -1.0;
        p.row(static_cast<Eigen::Index>(w)) =
            p.row(static_cast<Eigen::Index>(v)) + sign * target.row(static_cast<Eigen::Index>(k));
        placed[w] = 1;
        frontier.push(w);
      }
    }
  }
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    const Eigen::RowVectorXd rel = p.row(static_cast<Eigen::Index>(graph.head_index(k))) -
                                   p.row(static_cast<Eigen::Index>(graph.tail_index(k)));
    const double scale = std::max(1.0, target.row(kk).cwiseAbs().maxCoeff());
    if ((rel - target.row(kk)).cwiseAbs().maxCoeff() > tolerance * scale) {
      throw FormationError("edge values are not cycle-consistent at edge " +
                           std::to_string(graph.edge_at(k).id));
    }
  }
  return p;
}

}  // namespace fppc
