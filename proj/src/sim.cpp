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

#include "fppc/sim.hpp"

#include <cmath>

#include "fppc/scenarios.hpp"

namespace fppc {

const char* to_string(Integrator i) { return i == Integrator::Rk4 ? "rk4" : "euler"; }

const char* to_string(ViolationPolicy p) {
  return p == ViolationPolicy::Halt ? "halt" : "record";
}

void SimConfig::validate() const {
  if (!(dt > 0.0)) throw SimulationError(SimulationError::Kind::InvalidInput, "dt must be positive");
  if (!(horizon >= dt)) {
    throw SimulationError(SimulationError::Kind::InvalidInput, "horizon must be at least dt");
  }
  if (!(clamp > 0.0 && clamp < 1.0)) {
    throw SimulationError(SimulationError::Kind::InvalidInput, "clamp must lie in (0, 1)");
  }
}

double Trajectory::max_normalized_error() const {
  double worst = 0.0;
  for (std::size_t s = 0; s < times.size(); ++s) {
    for (Eigen::Index k = 0; k < edge_errors[s].rows(); ++k) {
      worst = std::max(worst, edge_errors[s].row(k).cwiseAbs().maxCoeff() / radii[s](k));
    }
  }
  return worst;
}

namespace {

struct Plant {
  const LeaderFollowerGraph& graph;
  const PpcConfig& ppc;
  Eigen::MatrixXd incidence;      // n x m
  Eigen::MatrixXd desired;        // m x d
  std::vector<Eigen::Index> leader_rows;
  std::vector<PerformanceFunnel> funnels;
  double clamp;

  Eigen::MatrixXd errors(const Eigen::MatrixXd& p) const {
    return incidence.transpose() * p - desired;
  }

  Eigen::MatrixXd input(const Eigen::MatrixXd& xbar, double t) const {
    return leader_control(graph, ppc, xbar, t, clamp);
  }

  Eigen::MatrixXd rate(const Eigen::MatrixXd& p, double t) const {
    const Eigen::MatrixXd xbar = errors(p);
    Eigen::MatrixXd pdot = -incidence * xbar;
    const Eigen::MatrixXd u = input(xbar, t);
    for (std::size_t j = 0; j < leader_rows.size(); ++j) {
      pdot.row(leader_rows[j]) += u.row(static_cast<Eigen::Index>(j));
    }
    return pdot;
  }

  Eigen::VectorXd radii(double t) const {
    Eigen::VectorXd r(static_cast<Eigen::Index>(funnels.size()));
    for (std::size_t k = 0; k < funnels.size(); ++k) r(static_cast<Eigen::Index>(k)) = rho(funnels[k], t);
    return r;
  }
};

}  // namespace

Trajectory simulate(const LeaderFollowerGraph& graph, const FormationSpec& formation,
                    const PpcConfig& ppc, const SimConfig& sim,
                    const Eigen::MatrixXd& initial_positions, const SimControl& control) {
  using K = SimulationError::Kind;
  sim.validate();
  ppc.validate();
  const int dim = formation.dimension;
  if (initial_positions.rows() != static_cast<Eigen::Index>(graph.node_count()) ||
      initial_positions.cols() != dim) {
    throw SimulationError(K::InvalidInput, "initial positions must be n x d");
  }

  Plant plant{graph, ppc, incidence_matrix(graph).cast<double>(),
              formation.displacement_matrix(graph), {}, {}, sim.clamp};
  for (std::size_t v = 0; v < graph.node_count(); ++v) {
    if (graph.is_leader_at(v)) plant.leader_rows.push_back(static_cast<Eigen::Index>(v));
  }
  for (const Edge& e : graph.edges()) plant.funnels.push_back(ppc.for_edge(e.id).funnel);

  Trajectory traj;
  for (const Node& v : graph.nodes()) traj.node_ids.push_back(v.id);
  for (const Edge& e : graph.edges()) traj.edge_ids.push_back(e.id);
  traj.leader_ids = graph.leader_ids();
  traj.dimension = dim;

  const Eigen::Index m = static_cast<Eigen::Index>(graph.edge_count());
  std::vector<char> outside(static_cast<std::size_t>(m * dim), 0);

  // Returns false once the halt policy should stop the run.
  auto record = [&](double t, const Eigen::MatrixXd& p) {
    const Eigen::MatrixXd xbar = plant.errors(p);
    const Eigen::VectorXd r = plant.radii(t);
    traj.times.push_back(t);
    traj.positions.push_back(p);
    traj.edge_errors.push_back(xbar);
    traj.radii.push_back(r);
    traj.controls.push_back(plant.input(xbar, t));
    bool keep_going = true;
    for (Eigen::Index k = 0; k < m; ++k) {
      for (int c = 0; c < dim; ++c) {
        const bool out = std::abs(xbar(k, c)) >= r(k);
        auto& flag = outside[static_cast<std::size_t>(k * dim + c)];
        if (out && !flag) {
          traj.violations.push_back({t, traj.edge_ids[static_cast<std::size_t>(k)], c, xbar(k, c), r(k)});
          if (sim.policy == ViolationPolicy::Halt) keep_going = false;
        }
        flag = out;
      }
    }
    return keep_going;
  };

  {
    const Eigen::MatrixXd x0 = plant.errors(initial_positions);
    const Eigen::VectorXd r0 = plant.radii(0.0);
    for (Eigen::Index k = 0; k < m; ++k) {
      for (int c = 0; c < dim; ++c) {
        if (!(std::abs(x0(k, c)) < r0(k))) {
          throw SimulationError(K::InitialViolation,
                                "initial error of edge " +
                                    std::to_string(traj.edge_ids[static_cast<std::size_t>(k)]) +
                                    " (coordinate " + std::to_string(c) + ") is " +
                                    std::to_string(x0(k, c)) + ", funnel radius " +
                                    std::to_string(r0(k)));
        }
      }
    }
  }

  const auto steps = static_cast<long>(std::llround(sim.horizon / sim.dt));
  const double h = sim.dt;
  Eigen::MatrixXd p = initial_positions;
  record(0.0, p);
  for (long s = 0; s < steps; ++s) {
    if (control.deadline && (s & 255) == 0 &&
        std::chrono::steady_clock::now() > *control.deadline) {
      throw SimulationError(K::Timeout, "simulation exceeded its wall-clock budget");
    }
    const double t = static_cast<double>(s) * h;
    if (sim.integrator == Integrator::Rk4) {
      const Eigen::MatrixXd k1 = plant.rate(p, t);
      const Eigen::MatrixXd k2 = plant.rate(p + 0.5 * h * k1, t + 0.5 * h);
      const Eigen::MatrixXd k3 = plant.rate(p + 0.5 * h * k2, t + 0.5 * h);
      const Eigen::MatrixXd k4 = plant.rate(p + h * k3, t + h);
      p += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } else {
      p += h * plant.rate(p, t);
    }
    if (!p.allFinite()) {
      throw SimulationError(K::Divergence,
                            "state became non-finite at t=" + std::to_string(t + h));
    }
    if (!record(static_cast<double>(s + 1) * h, p)) {
      traj.halted = true;
      break;
    }
  }
  return traj;
}

Eigen::MatrixXd leaderless_edge_rhs(const LeaderFollowerGraph& graph,
                                    const Eigen::MatrixXd& edge_errors) {
  return -edge_laplacian(graph).cast<double>() * edge_errors;
}

Eigen::MatrixXd edge_rhs(const LeaderFollowerGraph& graph, const Eigen::MatrixXd& edge_errors,
                         const Eigen::MatrixXd& leader_inputs) {
  Eigen::MatrixXd out = leaderless_edge_rhs(graph, edge_errors);
  if (leader_inputs.rows() > 0) {
    out += leader_rows(graph).cast<double>().transpose() * leader_inputs;
  }
  return out;
}

namespace {

AdversarialCase realize(LeaderFollowerGraph graph, const Eigen::VectorXd& errors) {
  FormationSpec formation = FormationSpec::uniform(graph, 1, 0.0);
  const Eigen::MatrixXd des = formation.displacement_matrix(graph);
  Eigen::MatrixXd p = realize_edge_errors(graph, des, errors);
  const int anchor = graph.edge_at(0).id;
  return AdversarialCase{std::move(graph), std::move(formation), std::move(p), anchor, errors};
}

}  // namespace

AdversarialCase adversarial_cycle_from_errors(const std::vector<double>& edge_errors) {
  const std::size_t m = edge_errors.size();
  if (m < 3) throw FormationError("a cycle needs at least three edges");
  Eigen::VectorXd x(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) x(static_cast<Eigen::Index>(i)) = edge_errors[i];
  return realize(cycle_graph(m), x);
}

AdversarialCase adversarial_init(const ProofScenario& scenario, const PerformanceFunnel& funnel,
                                 std::optional<double> delta) {
  const double gap = delta.value_or(1e-3 * funnel.rho0);
  const double a = funnel.rho0 - gap;
  if (!(gap > 0.0) || !(a > 0.0)) throw std::invalid_argument("gap must lie in (0, rho0)");
  if (scenario.family == ProofFamily::LeaderlessStar) {
    LeaderFollowerGraph star = example1_graph();
    return realize(star, Eigen::VectorXd::Constant(4, a));
  }
  const std::size_t m = scenario.cycle_length;
  if (m < 3) throw std::invalid_argument("cycle length must be at least 3");
  std::vector<double> x(m, 0.0);
  x[0] = a;
  switch (m) {
    case 3:
      x[1] = x[2] = -a / 2.0;
      break;
    case 4:
      x[2] = -a;
      break;
    case 5:
      x[2] = x[3] = -a;
      x[1] = x[4] = a / 2.0;
      break;
    default:
      x[1] = x[m - 1] = a;
      for (std::size_t i = 2; i + 1 < m; ++i) x[i] = -3.0 * a / static_cast<double>(m - 3);
      break;
  }
  return adversarial_cycle_from_errors(x);
}

double measure_decay(const LeaderFollowerGraph& graph, const Trajectory& trajectory, int edge_id) {
  if (trajectory.size() == 0) throw std::invalid_argument("empty trajectory");
  const auto k = static_cast<Eigen::Index>(graph.edge_index(edge_id));
  const Eigen::MatrixXd& x0 = trajectory.edge_errors.front();
  if (x0(k, 0) == 0.0) throw std::domain_error("initial error of the edge is zero");
  const Eigen::MatrixXd rate = edge_rhs(graph, x0, trajectory.controls.front());
  return rate(k, 0) / x0(k, 0);
}

}  // namespace fppc
