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
#include <exception>
#include <optional>
#include <string>

#include "fppc/io.hpp"

namespace httplib {
class Server;
}  // namespace httplib

namespace fppc {

inline constexpr int kDefaultPort = 8080;
inline constexpr std::size_t kDefaultStride = 10;
inline constexpr std::chrono::seconds kDefaultSimulationBudget{30};

/// Which checker `check` runs. Combined runs both cycle checkers and fails
/// if either does.
enum class CheckMode { Combined, Lemma1, Theorem1, Theorem2 };

/// Parses "lemma1", "theorem1", "theorem2" or "combined".
CheckMode parse_check_mode(const std::string& name);

/// Report document shared by the CLI and the HTTP service.
Json check_document(const LeaderFollowerGraph& graph, CheckMode mode);
bool check_passed(const Json& document);

Json simulate_document(const Scenario& scenario, std::size_t stride,
                       std::optional<std::chrono::steady_clock::duration> budget);
Json suggest_document(const LeaderFollowerGraph& graph, std::size_t max_leaders);
Json scenarios_document();

struct Response {
  int status = 200;
  std::string body;
};

/// HTTP status for a failure escaping one of the operations above.
int status_for(const std::exception& e);
Response error_response(const std::exception& e);

/// Request handlers; pure functions of the request body.
Response handle_check(const std::string& body);
Response handle_simulate(const std::string& body,
                         std::chrono::steady_clock::duration budget = kDefaultSimulationBudget);
Response handle_suggest(const std::string& body);
Response handle_scenarios();
Response handle_scenario(const std::string& name);

/// FORMATION_PPC_PORT if set and valid, else kDefaultPort.
int port_from_environment();

struct ServerOptions {
  std::string host = "0.0.0.0";
  int port = kDefaultPort;
  std::chrono::steady_clock::duration simulation_budget = kDefaultSimulationBudget;
};

/// Installs the /api routes on an existing server.
void register_routes(httplib::Server& server,
                     std::chrono::steady_clock::duration simulation_budget);

/// Blocks serving the API until the process is stopped.
void run_server(const ServerOptions& options);

}  // namespace fppc
