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

#include "fppc/service.hpp"

#include <cstdlib>
#include <iostream>
#include <stdexcept>

#include "httplib.h"

namespace fppc {

namespace {

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Scenario named_scenario(const std::string& name) {
  for (const std::string& known : builtin_scenario_names()) {
    if (known == name) return builtin_scenario(name);
  }
  throw NotFound("unknown scenario '" + name + "'");
}

// {"scenario": name | object} or a bare {"graph": ...}.
Scenario scenario_from_request(const Json& request) {
  if (!request.is_object()) throw FormatError("request body must be a JSON object");
  if (request.contains("scenario")) {
    const Json& s = request["scenario"];
    if (s.is_string()) return named_scenario(s.get<std::string>());
    return scenario_from_json(s);
  }
  if (request.contains("graph")) return scenario_from_json(request);
  throw FormatError("request needs a 'graph' or a 'scenario'");
}

std::size_t size_field(const Json& request, const char* key, std::size_t fallback) {
  if (!request.contains(key)) return fallback;
  const Json& v = request[key];
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(std::string("'") + key + "' must be a non-negative integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

Response ok(const Json& body) { return {200, canonical_dump(body)}; }

template <typename Fn>
Response guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return error_response(e);
  }
}

}  // namespace

CheckMode parse_check_mode(const std::string& name) {
  if (name == "combined") return CheckMode::Combined;
  if (name == "lemma1") return CheckMode::Lemma1;
  if (name == "theorem1") return CheckMode::Theorem1;
  if (name == "theorem2") return CheckMode::Theorem2;
  throw FormatError("condition must be one of combined, lemma1, theorem1, theorem2");
}

Json check_document(const LeaderFollowerGraph& graph, CheckMode mode) {
  switch (mode) {
    case CheckMode::Lemma1:
      return to_json(check_lemma1(graph));
    case CheckMode::Theorem1:
      return to_json(check_theorem1(graph));
    case CheckMode::Theorem2:
      return to_json(check_theorem2(graph));
    case CheckMode::Combined:
      break;
  }
  const ConditionReport t1 = check_theorem1(graph);
  const ConditionReport t2 = check_theorem2(graph);
  Json doc{{"condition", "combined"},
           {"verdict", t1.pass && t2.pass ? "pass" : "fail"},
           {"theorem1", to_json(t1)},
           {"theorem2", to_json(t2)}};
  doc["witness"] = !t2.pass ? doc["theorem2"]["witness"] : doc["theorem1"]["witness"];
  return doc;
}

bool check_passed(const Json& document) { return document.at("verdict") == "pass"; }

Json simulate_document(const Scenario& scenario, std::size_t stride,
                       std::optional<std::chrono::steady_clock::duration> budget) {
  validate_scenario(scenario, true);
  SimControl control;
  if (budget) control.deadline = std::chrono::steady_clock::now() + *budget;
  const Trajectory traj = simulate(scenario.graph, scenario.formation, scenario.ppc, scenario.sim,
                                   *scenario.initial_positions, control);
  return {{"name", scenario.name},
          {"summary", trajectory_summary(traj)},
          {"series", trajectory_series(traj, stride)}};
}

Json suggest_document(const LeaderFollowerGraph& graph, std::size_t max_leaders) {
  return {{"max_leaders", max_leaders}, {"assignments", suggest_leaders(graph, max_leaders)}};
}

Json scenarios_document() {
  Json list = Json::array();
  for (const std::string& name : builtin_scenario_names()) list.push_back(to_json(builtin_scenario(name)));
  return {{"scenarios", list}};
}

int status_for(const std::exception& e) {
  if (dynamic_cast<const FormatError*>(&e)) return 400;
  if (dynamic_cast<const NotFound*>(&e)) return 404;
  if (const auto* t = dynamic_cast<const TopologyError*>(&e)) {
    return t->kind() == TopologyError::Kind::EnumerationCap ? 413 : 422;
  }
  if (const auto* s = dynamic_cast<const SimulationError*>(&e)) {
    return s->kind() == SimulationError::Kind::Timeout ? 408 : 422;
  }
  if (dynamic_cast<const GraphError*>(&e) || dynamic_cast<const FormationError*>(&e) ||
      dynamic_cast<const FunnelViolation*>(&e) || dynamic_cast<const std::invalid_argument*>(&e) ||
      dynamic_cast<const std::domain_error*>(&e)) {
    return 422;
  }
  return 500;
}

Response error_response(const std::exception& e) {
  const int status = status_for(e);
  Json body{{"error", e.what()}, {"status", status}};
  if (const auto* g = dynamic_cast<const GraphError*>(&e)) body["kind"] = to_string(g->kind());
  return {status, canonical_dump(body)};
}

Response handle_check(const std::string& body) {
  return guarded([&] {
    const Json request = parse_json(body);
    const Scenario s = scenario_from_request(request);
    CheckMode mode = CheckMode::Combined;
    if (request.contains("options")) {
      const Json& options = request["options"];
      if (!options.is_object()) throw FormatError("'options' must be an object");
      if (options.contains("condition")) {
        if (!options["condition"].is_string()) throw FormatError("'condition' must be a string");
        mode = parse_check_mode(options["condition"].get<std::string>());
      }
    }
    return ok(check_document(s.graph, mode));
  });
}

Response handle_simulate(const std::string& body, std::chrono::steady_clock::duration budget) {
  return guarded([&] {
    const Json request = parse_json(body);
    const Scenario s = scenario_from_request(request);
    const std::size_t stride = size_field(request, "stride", kDefaultStride);
    if (stride == 0) throw FormatError("'stride' must be positive");
    return ok(simulate_document(s, stride, budget));
  });
}

Response handle_suggest(const std::string& body) {
  return guarded([&] {
    const Json request = parse_json(body);
    const Scenario s = scenario_from_request(request);
    if (!request.contains("k")) throw FormatError("missing key 'k'");
    return ok(suggest_document(s.graph, size_field(request, "k", 0)));
  });
}

Response handle_scenarios() {
  return guarded([] { return ok(scenarios_document()); });
}

Response handle_scenario(const std::string& name) {
  return guarded([&] { return ok(to_json(named_scenario(name))); });
}

int port_from_environment() {
  const char* raw = std::getenv("FORMATION_PPC_PORT");
  if (raw == nullptr || *raw == '\0') return kDefaultPort;
  char* end = nullptr;
  const long port = std::strtol(raw, &end, 10);
  if (*end != '\0' || port <= 0 || port > 65535) {
    std::cerr << "ignoring invalid FORMATION_PPC_PORT='" << raw << "'\n";
    return kDefaultPort;
  }
  return static_cast<int>(port);
}

void register_routes(httplib::Server& server,
                     std::chrono::steady_clock::duration simulation_budget) {
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Post("/api/check", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_check(req.body));
  });
  server.Post("/api/simulate",
              [reply, simulation_budget](const httplib::Request& req, httplib::Response& res) {
                reply(res, handle_simulate(req.body, simulation_budget));
              });
  server.Post("/api/suggest", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_suggest(req.body));
  });
  server.Get("/api/scenarios", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, handle_scenarios());
  });
  server.Get(R"(/api/scenarios/([A-Za-z0-9_\-]+))",
             [reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, handle_scenario(req.matches[1]));
             });
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

void run_server(const ServerOptions& options) {
  httplib::Server server;
  register_routes(server, options.simulation_budget);
  std::cerr << "listening on " << options.host << ':' << options.port << '\n';
  if (!server.listen(options.host, options.port)) {
    throw std::runtime_error("could not listen on port " + std::to_string(options.port));
  }
}

}  // namespace fppc
