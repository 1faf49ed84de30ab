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

#include "fppc/ppc.hpp"

#include <algorithm>
#include <cmath>

namespace fppc {

void PerformanceFunnel::validate() const {
  if (!(rho0 > 0.0) || !(rho_inf > 0.0) || !(decay > 0.0)) {
    throw std::invalid_argument("funnel parameters must be positive");
  }
  if (!(rho0 > rho_inf)) throw std::invalid_argument("funnel requires rho0 > rho_inf");
}

double rho(const PerformanceFunnel& f, double t) {
  return (f.rho0 - f.rho_inf) * std::exp(-f.decay * t) + f.rho_inf;
}

double rho_dot(const PerformanceFunnel& f, double t) {
  return -f.decay * (f.rho0 - f.rho_inf) * std::exp(-f.decay * t);
}

double normalize(double error, const PerformanceFunnel& f, double t) { return error / rho(f, t); }

double transform(double normalized) {
  if (!(std::abs(normalized) < 1.0)) {
    throw FunnelViolation("normalized error " + std::to_string(normalized) +
                              " outside the performance region",
                          normalized);
  }
  return std::log1p(normalized) - std::log1p(-normalized);
}

double jacobian(double normalized, const PerformanceFunnel& f, double t) {
  if (!(std::abs(normalized) < 1.0)) {
    throw FunnelViolation("normalized error " + std::to_string(normalized) +
                              " outside the performance region",
                          normalized);
  }
  return 2.0 / ((1.0 - normalized * normalized) * rho(f, t));
}

double alpha(const PerformanceFunnel& f, double t) { return -rho_dot(f, t) / rho(f, t); }

double transformed_error_rate(double error, double error_rate, const PerformanceFunnel& f,
                              double t) {
  return jacobian(normalize(error, f, t), f, t) * (error_rate + alpha(f, t) * error);
}

const EdgeGains& PpcConfig::for_edge(int edge_id) const {
  auto it = overrides.find(edge_id);
  return it == overrides.end() ? defaults : it->second;
}

void PpcConfig::validate() const {
  defaults.funnel.validate();
  if (!(defaults.gain > 0.0)) throw std::invalid_argument("gain must be positive");
  for (const auto& [id, g] : overrides) {
    g.funnel.validate();
    if (!(g.gain > 0.0)) {
      throw std::invalid_argument("gain of edge " + std::to_string(id) + " must be positive");
    }
  }
}

Eigen::MatrixXd leader_control(const LeaderFollowerGraph& graph, const PpcConfig& config,
                               const Eigen::MatrixXd& edge_errors, double t,
                               std::optional<double> clamp) {
  const Eigen::Index dim = edge_errors.cols();
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(graph.leader_count()), dim);
  Eigen::Index row = 0;
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    if (!graph.is_leader_at(v)) continue;
    for (std::size_t k : graph.incident(v)) {
      const EdgeGains& eg = config.for_edge(graph.edge_at(k).id);
      const double sigma = graph.head_index(k) == v ? 1.0 : -1.0;
      for (Eigen::Index c = 0; c < dim; ++c) {
        double x = normalize(edge_errors(static_cast<Eigen::Index>(k), c), eg.funnel, t);
        if (clamp) x = std::clamp(x, -*clamp, *clamp);
        try {
          u(row, c) -= sigma * eg.gain * jacobian(x, eg.funnel, t) * transform(x);
        } catch (const FunnelViolation& err) {
          throw FunnelViolation("edge " + std::to_string(graph.edge_at(k).id) + " at t=" +
                                    std::to_string(t) + ": " + err.what(),
                                err.normalized());
        }
      }
    }
    ++row;
  }
  return u;
}

}  // namespace fppc
