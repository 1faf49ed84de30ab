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

#include "fppc/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace fppc {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key '") + key + "'");
  return *it;
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("wrong type for '") + what + "'");
  }
}

int parse_id(const std::string& key) {
  std::size_t used = 0;
  int id = 0;
  try {
    id = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw FormatError("expected an integer key, got '" + key + "'");
  return id;
}

Json vec_json(const std::vector<double>& v) { return Json(v); }

std::vector<double> vec_from(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string("expected an array for '") + what + "'");
  return get_as<std::vector<double>>(j, what);
}

Json gains_json(const EdgeGains& g) {
  return {{"rho0", g.funnel.rho0}, {"rho_inf", g.funnel.rho_inf}, {"l", g.funnel.decay},
          {"gain", g.gain}};
}

EdgeGains gains_from(const Json& j, EdgeGains base) {
  if (!j.is_object()) throw FormatError("ppc entries must be objects");
  if (j.contains("rho0")) base.funnel.rho0 = get_as<double>(j["rho0"], "rho0");
  if (j.contains("rho_inf")) base.funnel.rho_inf = get_as<double>(j["rho_inf"], "rho_inf");
  if (j.contains("l")) base.funnel.decay = get_as<double>(j["l"], "l");
  if (j.contains("gain")) base.gain = get_as<double>(j["gain"], "gain");
  return base;
}

Json round_floats(const Json& j) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) return nullptr;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::strtod(buf, nullptr);
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const Json& x : j) out.push_back(round_floats(x));
    return out;
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = round_floats(it.value());
    return out;
  }
  return j;
}

Json edge_margin_json(const EdgeMargin& r) {
  Json j{{"edge", r.edge}, {"cycle_term", r.cycle_term}, {"E_i", r.neighbor_leftover},
         {"margin", r.margin}};
  if (!r.subgraph_nodes.empty()) j["subgraph"] = r.subgraph_nodes;
  return j;
}

Json matrix_rows(const Eigen::MatrixXd& m, Eigen::Index row) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(row, c));
  return out;
}

}  // namespace

Json to_json(const LeaderFollowerGraph& graph) {
  Json nodes = Json::array();
  for (const Node& n : graph.nodes()) nodes.push_back({{"id", n.id}, {"role", to_string(n.role)}});
  Json edges = Json::array();
  for (const Edge& e : graph.edges()) edges.push_back({{"id", e.id}, {"head", e.head}, {"tail", e.tail}});
  return {{"nodes", nodes}, {"edges", edges}};
}

LeaderFollowerGraph graph_from_json(const Json& j) {
  const Json& jn = require(j, "nodes");
  const Json& je = require(j, "edges");
  if (!jn.is_array() || !je.is_array()) throw FormatError("'nodes' and 'edges' must be arrays");
  std::vector<Node> nodes;
  for (const Json& n : jn) {
    const std::string role = get_as<std::string>(require(n, "role"), "role");
    if (role != "leader" && role != "follower") {
      throw FormatError("role must be 'leader' or 'follower', got '" + role + "'");
    }
    nodes.push_back({get_as<int>(require(n, "id"), "id"),
                     role == "leader" ? NodeRole::Leader : NodeRole::Follower});
  }
  std::vector<Edge> edges;
  for (const Json& e : je) {
    Edge edge{get_as<int>(require(e, "id"), "id"), 0, 0};
    if (e.contains("head") || e.contains("tail")) {
      edge.head = get_as<int>(require(e, "head"), "head");
      edge.tail = get_as<int>(require(e, "tail"), "tail");
    } else {
      const auto ends = get_as<std::vector<int>>(require(e, "endpoints"), "endpoints");
      if (ends.size() != 2) throw FormatError("'endpoints' must list two nodes");
      edge.head = ends[0];
      edge.tail = ends[1];
    }
    edges.push_back(edge);
  }
  return validate(std::move(nodes), std::move(edges));
}

Json to_json(const FormationSpec& f) {
  Json disp = Json::object();
  for (const auto& [id, v] : f.displacements) disp[std::to_string(id)] = vec_json(v);
  Json j{{"dimension", f.dimension}, {"displacements", disp}};
  if (!f.anchors.empty()) {
    Json anchors = Json::object();
    for (const auto& [id, v] : f.anchors) anchors[std::to_string(id)] = vec_json(v);
    j["anchors"] = anchors;
  }
  return j;
}

FormationSpec formation_from_json(const Json& j) {
  FormationSpec f;
  f.dimension = get_as<int>(require(j, "dimension"), "dimension");
  const Json& disp = require(j, "displacements");
  if (!disp.is_object()) throw FormatError("'displacements' must be an object");
  for (auto it = disp.begin(); it != disp.end(); ++it) {
    f.displacements[parse_id(it.key())] = vec_from(it.value(), "displacements");
  }
  if (j.contains("anchors")) {
    const Json& a = j["anchors"];
    if (!a.is_object()) throw FormatError("'anchors' must be an object");
    for (auto it = a.begin(); it != a.end(); ++it) {
      f.anchors[parse_id(it.key())] = vec_from(it.value(), "anchors");
    }
  }
  return f;
}

Json to_json(const PpcConfig& c) {
  Json edges = Json::object();
  for (const auto& [id, g] : c.overrides) edges[std::to_string(id)] = gains_json(g);
  return {{"default", gains_json(c.defaults)}, {"edges", edges}};
}

PpcConfig ppc_from_json(const Json& j) {
  PpcConfig c;
  if (!j.is_object()) throw FormatError("ppc config must be an object");
  if (j.contains("default")) c.defaults = gains_from(j["default"], c.defaults);
  if (j.contains("edges")) {
    const Json& e = j["edges"];
    if (!e.is_object()) throw FormatError("'edges' must be an object");
    for (auto it = e.begin(); it != e.end(); ++it) {
      c.overrides[parse_id(it.key())] = gains_from(it.value(), c.defaults);
    }
  }
  return c;
}

Json to_json(const SimConfig& s) {
  return {{"dt", s.dt},
          {"horizon", s.horizon},
          {"integrator", to_string(s.integrator)},
          {"violation_policy", to_string(s.policy)}};
}

SimConfig sim_from_json(const Json& j) {
  SimConfig s;
  if (!j.is_object()) throw FormatError("sim config must be an object");
  if (j.contains("dt")) s.dt = get_as<double>(j["dt"], "dt");
  if (j.contains("horizon")) s.horizon = get_as<double>(j["horizon"], "horizon");
  if (j.contains("integrator")) {
    const std::string name = get_as<std::string>(j["integrator"], "integrator");
    if (name == "rk4") {
      s.integrator = Integrator::Rk4;
    } else if (name == "euler") {
      s.integrator = Integrator::Euler;
    } else {
      throw FormatError("integrator must be 'rk4' or 'euler'");
    }
  }
  if (j.contains("violation_policy")) {
    const std::string name = get_as<std::string>(j["violation_policy"], "violation_policy");
    if (name == "halt") {
      s.policy = ViolationPolicy::Halt;
    } else if (name == "record" || name == "record-and-continue") {
      s.policy = ViolationPolicy::RecordAndContinue;
    } else {
      throw FormatError("violation_policy must be 'halt' or 'record'");
    }
  }
  return s;
}

Json to_json(const Scenario& s) {
  Json j{{"format_version", kScenarioFormatVersion},
         {"name", s.name},
         {"graph", to_json(s.graph)},
         {"formation", to_json(s.formation)},
         {"ppc", to_json(s.ppc)},
         {"sim", to_json(s.sim)}};
  if (s.initial_positions) {
    Json p = Json::object();
    for (std::size_t i = 0; i < s.graph.node_count(); ++i) {
      p[std::to_string(s.graph.node_at(i).id)] =
          matrix_rows(*s.initial_positions, static_cast<Eigen::Index>(i));
    }
    j["initial_positions"] = p;
  }
  return j;
}

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("scenario must be a JSON object");
  if (!j.contains("graph")) {
    LeaderFollowerGraph g = graph_from_json(j);
    FormationSpec f = FormationSpec::uniform(g, 1, 0.0);
    return Scenario{"", std::move(g), std::move(f), PpcConfig{}, SimConfig{}, std::nullopt};
  }
  if (j.contains("format_version") &&
      get_as<int>(j["format_version"], "format_version") != kScenarioFormatVersion) {
    throw FormatError("unsupported format_version");
  }
  LeaderFollowerGraph g = graph_from_json(j["graph"]);
  FormationSpec f = j.contains("formation") ? formation_from_json(j["formation"])
                                            : FormationSpec::uniform(g, 1, 0.0);
  if (f.displacements.empty() && !f.anchors.empty()) f = FormationSpec::from_anchors(g, f.anchors);
  PpcConfig ppc = j.contains("ppc") ? ppc_from_json(j["ppc"]) : PpcConfig{};
  SimConfig sim = j.contains("sim") ? sim_from_json(j["sim"]) : SimConfig{};
  std::optional<Eigen::MatrixXd> p0;
  if (j.contains("initial_positions")) {
    const Json& jp = j["initial_positions"];
    if (!jp.is_object()) throw FormatError("'initial_positions' must be an object");
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.node_count()), f.dimension);
    std::vector<char> given(g.node_count(), 0);
    for (auto it = jp.begin(); it != jp.end(); ++it) {
      const int id = parse_id(it.key());
      if (!g.has_node(id)) throw FormatError("initial position for unknown node " + it.key());
      const std::vector<double> v = vec_from(it.value(), "initial_positions");
      if (static_cast<int>(v.size()) != f.dimension) {
        throw FormatError("initial position of node " + it.key() + " has the wrong dimension");
      }
      const std::size_t row = g.node_index(id);
      for (int c = 0; c < f.dimension; ++c) {
        p(static_cast<Eigen::Index>(row), c) = v[static_cast<std::size_t>(c)];
      }
      given[row] = 1;
    }
    for (std::size_t i = 0; i < given.size(); ++i) {
      if (!given[i]) {
        throw FormatError("missing initial position for node " + std::to_string(g.node_at(i).id));
      }
    }
    p0 = std::move(p);
  }
  std::string name = j.contains("name") ? get_as<std::string>(j["name"], "name") : "";
  return Scenario{std::move(name), std::move(g), std::move(f), std::move(ppc), sim, std::move(p0)};
}

Json to_json(const FlfPath& path) { return {{"nodes", path.nodes}, {"edges", path.edges}}; }

Json to_json(const Decomposition& d) {
  Json anchor;
  if (const int* e = std::get_if<int>(&d.anchor)) {
    anchor = {{"edge", *e}};
  } else {
    anchor = {{"path", to_json(std::get<FlfPath>(d.anchor))}};
  }
  Json cycles = Json::array();
  for (const Cycle& c : d.cycles) {
    cycles.push_back({{"edges", c.edges}, {"nodes", c.nodes}, {"length", c.length()}});
  }
  const std::string nkey = std::holds_alternative<int>(d.anchor) ? "E_i" : "F_i";
  return {{"anchor", anchor},
          {"cycles", cycles},
          {"leftover", d.leftover},
          {"neighbors", d.anchor_neighbors},
          {nkey, d.neighbor_leftover},
          {"cycle_term", d.cycle_term()},
          {"margin", d.margin()},
          {"short_cycle", d.has_short_cycle()}};
}

Json to_json(const ConditionReport& r) {
  Json edges = Json::array();
  for (const EdgeMargin& e : r.edges) edges.push_back(edge_margin_json(e));
  Json paths = Json::array();
  for (const PathMargin& p : r.paths) {
    paths.push_back({{"nodes", p.path.nodes},
                     {"edges", p.path.edges},
                     {"bypass", p.bypass},
                     {"cycle_term", p.cycle_term},
                     {"F_i", p.neighbor_leftover},
                     {"margin", p.margin}});
  }
  Json witness = nullptr;
  if (r.witness) {
    const Witness& w = *r.witness;
    if (w.edge) {
      witness = {{"kind", "edge"}, {"edge", *w.edge}};
    } else {
      witness = {{"kind", "path"}, {"nodes", w.path->nodes}, {"edges", w.path->edges}};
    }
    witness["margin"] = w.margin;
    if (!w.subgraph_nodes.empty()) witness["subgraph"] = w.subgraph_nodes;
  }
  Json j{{"condition", to_string(r.condition)},
         {"verdict", r.pass ? "pass" : "fail"},
         {"edges", edges},
         {"paths", paths},
         {"witness", witness},
         {"notes", r.notes}};
  if (r.condition == Condition::Theorem2) {
    j["removed_nodes"] = r.removed_nodes;
    j["removed_edges"] = r.removed_edges;
  }
  return j;
}

Json to_json(const MaxFollowerEndSubgraph& star) {
  return {{"graph", to_json(star.subgraph)},
          {"removed_nodes", star.removed_nodes},
          {"removed_edges", star.removed_edges},
          {"notes", star.notes}};
}

Json trajectory_summary(const Trajectory& t) {
  Json violations = Json::array();
  for (const ViolationEvent& v : t.violations) {
    violations.push_back({{"time", v.time},
                          {"edge", v.edge},
                          {"dimension", v.dimension},
                          {"value", v.value},
                          {"radius", v.radius}});
  }
  Json final_errors = Json::object();
  if (t.size() > 0) {
    for (std::size_t k = 0; k < t.edge_ids.size(); ++k) {
      final_errors[std::to_string(t.edge_ids[k])] =
          matrix_rows(t.edge_errors.back(), static_cast<Eigen::Index>(k));
    }
  }
  return {{"max_normalized_error", t.max_normalized_error()},
          {"violations", violations},
          {"final_errors", final_errors},
          {"final_time", t.size() > 0 ? t.times.back() : 0.0},
          {"samples", t.size()},
          {"halted", t.halted}};
}

Json trajectory_series(const Trajectory& t, std::size_t stride) {
  if (stride == 0) stride = 1;
  std::vector<std::size_t> picks;
  for (std::size_t s = 0; s < t.size(); s += stride) picks.push_back(s);
  if (t.size() > 0 && picks.back() != t.size() - 1) picks.push_back(t.size() - 1);

  Json times = Json::array();
  Json errors = Json::object();
  Json radii = Json::object();
  Json positions = Json::object();
  for (std::size_t s : picks) times.push_back(t.times[s]);
  for (std::size_t k = 0; k < t.edge_ids.size(); ++k) {
    Json ex = Json::array();
    Json rk = Json::array();
    for (std::size_t s : picks) {
      ex.push_back(matrix_rows(t.edge_errors[s], static_cast<Eigen::Index>(k)));
      rk.push_back(t.radii[s](static_cast<Eigen::Index>(k)));
    }
    errors[std::to_string(t.edge_ids[k])] = ex;
    radii[std::to_string(t.edge_ids[k])] = rk;
  }
  for (std::size_t i = 0; i < t.node_ids.size(); ++i) {
    Json px = Json::array();
    for (std::size_t s : picks) px.push_back(matrix_rows(t.positions[s], static_cast<Eigen::Index>(i)));
    positions[std::to_string(t.node_ids[i])] = px;
  }
  return {{"stride", stride},
          {"times", times},
          {"edge_errors", errors},
          {"radii", radii},
          {"positions", positions}};
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
  out << "time";
  for (int id : t.node_ids) {
    for (int c = 0; c < t.dimension; ++c) out << ",p_" << id << '_' << c;
  }
  for (int id : t.edge_ids) {
    for (int c = 0; c < t.dimension; ++c) out << ",xbar_" << id << '_' << c;
  }
  for (int id : t.edge_ids) out << ",rho_" << id;
  for (int id : t.leader_ids) {
    for (int c = 0; c < t.dimension; ++c) out << ",u_" << id << '_' << c;
  }
  out << '\n';
  char buf[40];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out << ',' << buf;
  };
  for (std::size_t s = 0; s < t.size(); ++s) {
    std::snprintf(buf, sizeof buf, "%.12g", t.times[s]);
    out << buf;
    const Eigen::MatrixXd& p = t.positions[s];
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      for (Eigen::Index c = 0; c < p.cols(); ++c) put(p(i, c));
    }
    const Eigen::MatrixXd& x = t.edge_errors[s];
    for (Eigen::Index k = 0; k < x.rows(); ++k) {
      for (Eigen::Index c = 0; c < x.cols(); ++c) put(x(k, c));
    }
    for (Eigen::Index k = 0; k < t.radii[s].size(); ++k) put(t.radii[s](k));
    const Eigen::MatrixXd& u = t.controls[s];
    for (Eigen::Index j = 0; j < u.rows(); ++j) {
      for (Eigen::Index c = 0; c < u.cols(); ++c) put(u(j, c));
    }
    out << '\n';
  }
}

std::string canonical_dump(const Json& j) { return round_floats(j).dump(); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) {
    std::ifstream in(path_or_name);
    std::stringstream buf;
    buf << in.rdbuf();
    Scenario s = scenario_from_json(parse_json(buf.str()));
    if (s.name.empty()) s.name = std::filesystem::path(path_or_name).stem().string();
    return s;
  }
  for (const std::string& name : builtin_scenario_names()) {
    if (name == path_or_name) return builtin_scenario(name);
  }
  throw FormatError("no scenario file or built-in scenario named '" + path_or_name + "'");
}

}  // namespace fppc
