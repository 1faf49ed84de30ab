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
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "fppc/graph.hpp"

namespace fppc {

/// Raised when a normalized error leaves the open interval (-1, 1).
class FunnelViolation : public std::runtime_error {
 public:
  FunnelViolation(const std::string& what, double normalized)
      : std::runtime_error(what), normalized_(normalized) {}
  double normalized() const noexcept { return normalized_; }

 private:
  double normalized_;
};

/// rho(t) = (rho0 - rho_inf) exp(-decay t) + rho_inf.
struct PerformanceFunnel {
  double rho0 = 1.0;
  double rho_inf = 0.1;
  double decay = 1.0;

  /// Throws std::invalid_argument unless all parameters are positive and
  /// rho0 > rho_inf.
  void validate() const;
};

double rho(const PerformanceFunnel& f, double t);
double rho_dot(const PerformanceFunnel& f, double t);

/// x / rho(t).
double normalize(double error, const PerformanceFunnel& f, double t);

/// ln((1 + x) / (1 - x)) on |x| < 1.
double transform(double normalized);

/// dT/dx * 1/rho(t) = 2 / ((1 - x^2) rho(t)).
double jacobian(double normalized, const PerformanceFunnel& f, double t);

/// -rho_dot / rho.
double alpha(const PerformanceFunnel& f, double t);

/// d/dt T(x/rho) along a trajectory with error `error` and rate `error_rate`.
double transformed_error_rate(double error, double error_rate, const PerformanceFunnel& f,
                              double t);

struct EdgeGains {
  PerformanceFunnel funnel;
  double gain = 1.0;
};

/// Funnel and gain per edge: a shared default with per-edge overrides. The
/// same scalar funnel applies independently in every coordinate.
struct PpcConfig {
  EdgeGains defaults;
  std::map<int, EdgeGains> overrides;

  const EdgeGains& for_edge(int edge_id) const;
  void validate() const;
};

/// Leader inputs (n_l x d, leaders in node declaration order):
///   u_j = -sum_{i incident to j} sigma_ji g_i J_i eps_i,
/// where sigma_ji is leader j's incidence entry in edge i. `edge_errors` is
/// m x d. With `clamp` set, normalized errors are saturated to +-clamp
/// instead of raising FunnelViolation.
Eigen::MatrixXd leader_control(const LeaderFollowerGraph& graph, const PpcConfig& config,
                               const Eigen::MatrixXd& edge_errors, double t,
                               std::optional<double> clamp = std::nullopt);

}  // namespace fppc
