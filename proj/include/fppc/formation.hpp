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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fppc/graph.hpp"

namespace fppc {

class FormationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Target relative-position formation: one desired displacement
/// p_head - p_tail per edge, in `dimension` coordinates.
struct FormationSpec {
  int dimension = 1;
  std::map<int, std::vector<double>> displacements;  // edge id -> R^d
  std::map<int, std::vector<double>> anchors;        // optional node id -> R^d

  /// Uniform displacement on every edge (all coordinates equal to `value`).
  static FormationSpec uniform(const LeaderFollowerGraph& graph, int dimension, double value);
  /// Displacements derived from absolute anchors; anchors are retained.
  static FormationSpec from_anchors(const LeaderFollowerGraph& graph,
                                    std::map<int, std::vector<double>> anchors);

  /// m x d matrix of desired edge displacements in edge declaration order.
  Eigen::MatrixXd displacement_matrix(const LeaderFollowerGraph& graph) const;
};

/// Checks that every edge has a d-dimensional displacement, that anchors (if
/// any) reproduce it, and that displacements sum to zero around every cycle.
void validate_formation(const LeaderFollowerGraph& graph, const FormationSpec& formation,
                        double tolerance = 1e-9);

/// Node positions (n x d) whose edge errors D^T p - pbar_des equal
/// `edge_errors` (m x d). The first node is placed at the origin and the
/// remaining ones along a BFS spanning tree; non-tree edges must already be
/// consistent or FormationError is thrown.
Eigen::MatrixXd realize_edge_errors(const LeaderFollowerGraph& graph,
                                    const Eigen::MatrixXd& desired_displacements,
                                    const Eigen::MatrixXd& edge_errors,
                                    double tolerance = 1e-9);

}  // namespace fppc
