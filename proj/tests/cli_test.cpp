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

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "fppc/service.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(FPPC_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("fppc_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check graphA").code, 1);
  EXPECT_EQ(run("check graphB").code, 0);
  EXPECT_EQ(run("check graphC").code, 0);
  EXPECT_EQ(run("check graphA --theorem1").code, 1);
  EXPECT_EQ(run("check example1 --lemma1").code, 1);
  EXPECT_EQ(run("check no-such-file.json").code, 2);
  EXPECT_EQ(run("check graphA --lemma1").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, OutputMatchesService) {
  const Outcome cli = run("check graphB --theorem2");
  const fppc::Response http = fppc::handle_check(R"({"scenario":"graphB","options":{"condition":"theorem2"}})");
  EXPECT_EQ(cli.out, http.body + "\n");
}

TEST(Cli, DecomposeEdgeAndPath) {
  const Outcome edge = run("decompose graphA --edge 5 --star");
  ASSERT_EQ(edge.code, 0);
  const fppc::Json e = fppc::Json::parse(edge.out);
  EXPECT_EQ(e["E_i"].size(), 5u);
  const Outcome path = run("decompose graphB --path 2,5,4");
  ASSERT_EQ(path.code, 0);
  EXPECT_TRUE(fppc::Json::parse(path.out).contains("F_i"));
  EXPECT_EQ(run("decompose graphB --path 2,1").code, 2);
  EXPECT_EQ(run("decompose graphA --edge 99").code, 2);
}

TEST(Cli, SimulateWritesArtifacts) {
  const fs::path dir = scratch("sim");
  const Outcome ok = run("simulate graphC --horizon 0.5 --out " + dir.string());
  EXPECT_EQ(ok.code, 0);
  const fppc::Json summary = fppc::Json::parse(slurp(dir / "summary.json"));
  EXPECT_TRUE(summary["violations"].empty());
  EXPECT_EQ(slurp(dir / "trajectory.csv").rfind("time,p_1_0", 0), 0u);
  EXPECT_EQ(run("simulate graphA --horizon 2 --out " + dir.string()).code, 1);
  EXPECT_EQ(run("simulate example1 --out " + dir.string()).code, 2);
  fs::remove_all(dir);
}

TEST(Cli, SuggestAndExport) {
  const Outcome s = run("suggest graphC --max-leaders 4");
  EXPECT_EQ(s.code, 0);
  EXPECT_FALSE(fppc::Json::parse(s.out)["assignments"].empty());
  const fs::path dir = scratch("export");
  ASSERT_EQ(run("scenarios --export " + dir.string()).code, 0);
  const fppc::Scenario back = fppc::load_scenario((dir / "graphB.json").string());
  EXPECT_TRUE(back.graph == fppc::builtin_scenario("graphB").graph);
  EXPECT_EQ(run("check " + (dir / "graphA.json").string()).code, 1);
  fs::remove_all(dir);
}

}  // namespace
