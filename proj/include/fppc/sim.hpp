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

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fppc/formation.hpp"
#include "fppc/graph.hpp"
#include "fppc/ppc.hpp"

namespace fppc {

enum class Integrator { Rk4, Euler };
enum class ViolationPolicy { Halt, RecordAndContinue };

const char* to_string(Integrator i);
const char* to_string(ViolationPolicy p);

struct SimConfig {
  double dt = 1e-3;
  double horizon = 10.0;
  Integrator integrator = Integrator::Rk4;
  ViolationPolicy policy = ViolationPolicy::RecordAndContinue;
  /// Saturation of the normalized error fed to the control law.
  double clamp = 1.0 - 1e-9;

  void validate() const;
};

class SimulationError : public std::runtime_error {
 public:
  enum class Kind { InitialViolation, Divergence, Timeout, InvalidInput };

  SimulationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// An edge coordinate leaving its funnel (recorded on entry into violation).
struct ViolationEvent {
  double time;
  int edge;
  int dimension;
  double value;
  double radius;
};

struct Trajectory {
  std::vector<int> node_ids;
  std::vector<int> edge_ids;
  std::vector<int> leader_ids;
  int dimension = 1;

  std::vector<double> times;
  std::vector<Eigen::MatrixXd> positions;    // n x d
  std::vector<Eigen::MatrixXd> edge_errors;  // m x d, D^T p - pbar_des
  std::vector<Eigen::VectorXd> radii;        // m
  std::vector<Eigen::MatrixXd> controls;     // n_l x d
  std::vector<ViolationEvent> violations;
  bool halted = false;

  std::size_t size() const noexcept { return times.size(); }
  /// max over samples, edges and coordinates of |xbar| / rho.
  double max_normalized_error() const;
};

struct SimControl {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Fixed-step integration of the node dynamics
///   p' = -D (D^T p - pbar_des) + B u,
/// with u from leader_control() re-evaluated at every stage. Edge errors are
/// recomputed from positions at each sample.
Trajectory simulate(const LeaderFollowerGraph& graph, const FormationSpec& formation,
                    const PpcConfig& ppc, const SimConfig& sim,
                    const Eigen::MatrixXd& initial_positions, const SimControl& control = {});

/// -L_e xbar.
Eigen::MatrixXd leaderless_edge_rhs(const LeaderFollowerGraph& graph,
                                    const Eigen::MatrixXd& edge_errors);

/// -L_e xbar + D_L^T u.
Eigen::MatrixXd edge_rhs(const LeaderFollowerGraph& graph, const Eigen::MatrixXd& edge_errors,
                         const Eigen::MatrixXd& leader_inputs);

enum class ProofFamily { LeaderlessStar, LeaderlessCycle };

struct ProofScenario {
  ProofFamily family = ProofFamily::LeaderlessCycle;
  std::size_t cycle_length = 3;  // ignored for the star
};

/// Initial condition realising the worst case of a decay-rate argument.
struct AdversarialCase {
  LeaderFollowerGraph graph;
  FormationSpec formation;
  Eigen::MatrixXd initial_positions;
  int anchor_edge;
  Eigen::VectorXd edge_errors;
};

/// Star: the four star edges all at rho0 - delta. Cycle of length m, edges
/// e1..em head to tail: e1 at a = rho0 - delta and
///   m = 3: e2 = e3 = -a/2;      m = 4: e3 = -a, e2 = e4 = 0;
///   m = 5: e3 = e4 = -a, e2 = e5 = a/2;
///   m >= 6: e2 = em = a, the remaining m-3 edges share -3a.
/// `delta` defaults to 1e-3 rho0.
AdversarialCase adversarial_init(const ProofScenario& scenario, const PerformanceFunnel& funnel,
                                 std::optional<double> delta = std::nullopt);

/// Worst-case adversarial positions built from explicit cycle edge errors;
/// throws FormationError unless they sum to zero.
AdversarialCase adversarial_cycle_from_errors(const std::vector<double>& edge_errors);

/// xbar'(0) / xbar(0) for the given edge (first coordinate), from one
/// evaluation of the edge dynamics at the first sample.
double measure_decay(const LeaderFollowerGraph& graph, const Trajectory& trajectory, int edge_id);

}  // namespace fppc
