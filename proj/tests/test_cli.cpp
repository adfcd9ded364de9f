// Copyright 2026 The systole Authors
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

#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "systole/cli.hpp"
#include "systole/verify.hpp"

namespace systole {
namespace {

using json = nlohmann::json;

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "systole");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("systole_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

// Rationals must be "num/den" strings; floats only under *_approx keys.
void expect_exact_numbers(const json& j, const std::string& key = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) expect_exact_numbers(v, k);
  } else if (j.is_array()) {
    for (const auto& v : j) expect_exact_numbers(v, key);
  } else if (j.is_number_float()) {
    EXPECT_TRUE(key.size() > 7 && key.substr(key.size() - 7) == "_approx") << key;
  }
}

TEST(Cli, AnalyzeTheta) {
  const CliRun r = run({"analyze", "theta"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("systole length 2/3 (3 systoles)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("membership: W yes, V yes, V' yes"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeJsonFromFile) {
  const auto path = temp_file("dumbbell.graph",
                              "graph d\nvertices 2\nedge 0 0 0 1/3\nedge 1 1 1 1/3\nedge 2 0 1 1/3\n");
  const CliRun r = run({"--json", "analyze", path.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["systole_length"], "1/3");
  EXPECT_EQ(j["systoles"].size(), 2U);
  EXPECT_EQ(j["membership"]["W"], true);
  EXPECT_EQ(j["membership"]["V"], true);
  EXPECT_EQ(j["membership"]["V_prime"], false);
  EXPECT_EQ(j["lattice"]["index"], "1");
  expect_exact_numbers(j);
  // Global flags may also follow the subcommand.
  EXPECT_EQ(run({"analyze", path.string(), "--json"}).out, r.out);
}

TEST(Cli, RetractWithTrace) {
  const auto trace = std::filesystem::temp_directory_path() / "systole_cli_test_trace.json";
  const CliRun r = run({"retract", "dumbbell_unequal", "--trace", trace.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("u 10/7"), std::string::npos) << r.out;
  std::ifstream in(trace);
  const json j = json::parse(in);
  ASSERT_EQ(j["events"].size(), 2U);
  EXPECT_EQ(j["events"][0]["kind"], "NewSystoles");
  EXPECT_EQ(j["events"][0]["u"], "10/7");
  EXPECT_EQ(j["events"][1]["kind"], "StageComplete");
  EXPECT_EQ(j["events"][1]["u"], "2/1");
  EXPECT_EQ(j["final_systole_length"], "1/2");
  EXPECT_EQ(j["final"]["vertices"], 1);
  EXPECT_EQ(j["geometrically_fills"], true);
  expect_exact_numbers(j);
}

TEST(Cli, Dimension) {
  const auto path = temp_file("k4.graph",
                              "graph k4\nvertices 4\nedge 0 0 1 1/6\nedge 1 0 2 1/6\nedge 2 0 3 1/6\n"
                              "edge 3 1 2 1/6\nedge 4 1 3 1/6\nedge 5 2 3 1/6\n");
  const CliRun r = run({"dimension", "--json", path.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["systoles"], 4);
  EXPECT_EQ(j["vcd"], 3);
  EXPECT_EQ(j["exceeds"], false);
  EXPECT_EQ(j["gap"], "1/6");
}

TEST(Cli, MapCheck) {
  const CliRun r = run({"--json", "map-check", "cube"});
  ASSERT_EQ(r.status, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["F"], 6);
  EXPECT_EQ(j["flag_transitivity"]["aut_order"], 48);
  EXPECT_EQ(j["systoles_equal_faces"]["equal"], true);
  EXPECT_EQ(j["euler_relations"]["all"], true);
  const CliRun text = run({"map-check", "heawood_torus"});
  EXPECT_NE(text.out.find("systoles equal faces no"), std::string::npos) << text.out;
}

TEST(Cli, VerifyPaper) {
  const CliRun r = run({"verify-paper"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
  const CliRun one = run({"--json", "verify-paper", "--filter", "klein"});
  ASSERT_EQ(one.status, 0);
  const json j = json::parse(one.out);
  ASSERT_EQ(j["checks"].size(), 1U);
  EXPECT_EQ(j["checks"][0]["name"], "klein-chain");
  EXPECT_NE(j["checks"][0]["status"], "FAIL");
  EXPECT_EQ(run({"verify-paper", "--filter", "no-such-check"}).status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  const CliRun bad_flag = run({"analyze", "theta", "--bogus"});
  EXPECT_EQ(bad_flag.status, 2);
  EXPECT_NE(bad_flag.err.find("--bogus"), std::string::npos) << bad_flag.err;
  EXPECT_EQ(run({"analyze"}).status, 2);
  EXPECT_EQ(run({"analyze", "/no/such/file.graph"}).status, 2);
  EXPECT_EQ(run({"retract", "theta", "--max-events", "zero"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, DomainErrors) {
  const auto path = temp_file("lollipop.graph",
                              "graph l\nvertices 3\nedge 0 0 0 1/4\nedge 1 0 0 1/4\n"
                              "edge 2 0 1 1/4\nedge 3 1 2 1/4\nedge 4 2 2 1/8\nedge 5 2 2 1/8\n");
  const CliRun strict = run({"--json", "analyze", path.string()});
  EXPECT_EQ(strict.status, 1);
  EXPECT_EQ(json::parse(strict.out)["error"]["kind"], "InvalidGraph");
  EXPECT_EQ(run({"--permissive", "analyze", path.string()}).status, 0);

  const CliRun capped = run({"--json", "retract", "dumbbell_unequal", "--max-events", "1"});
  EXPECT_EQ(capped.status, 1);
  const json j = json::parse(capped.out);
  EXPECT_EQ(j["error"]["kind"], "CapExceeded");
  EXPECT_EQ(j["error"]["partial"]["events"].size(), 2U);

  const CliRun budget = run({"--cycle-cap", "3", "map-check", "heawood_torus"});
  EXPECT_EQ(budget.status, 1);
  EXPECT_NE(budget.err.find("BudgetExceeded"), std::string::npos) << budget.err;

  const auto bad = temp_file("zero.graph", "graph z\nvertices 1\nedge 0 0 0 0/1\nedge 1 0 0 1/1\n");
  const CliRun zero = run({"analyze", bad.string()});
  EXPECT_EQ(zero.status, 1);
  EXPECT_NE(zero.err.find("NonPositiveLength"), std::string::npos);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "analyze", "theta"},
           {"--json", "retract", "dumbbell_unequal"},
           {"--json", "map-check", "petersen_projective"},
           {"--json", "verify-paper"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Verify, ChecksAllPass) {
  const auto results = run_verification();
  EXPECT_EQ(results.size(), verification_check_names().size());
  for (const auto& r : results) EXPECT_NE(r.status, CheckStatus::Fail) << r.name;
}

}  // namespace
}  // namespace systole
