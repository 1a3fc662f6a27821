// Copyright 2026 The blotto-iu Authors.
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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path Dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("blotto_cli_test_" + std::to_string(getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string Write(const std::string& name, const std::string& body) {
  std::ofstream((Dir() / name)) << body;
  return (Dir() / name).string();
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the CLI with `args`, stdout and stderr captured to files.
int RunCli(const std::string& args) {
  const std::string cmd = std::string(BLOTTO_CLI_PATH) + " " + args + " >" +
                          (Dir() / "stdout.txt").string() + " 2>" + (Dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kGame = R"("game": {"budget_a": 1, "budget_b": 1.5, "values_a": [1, 2, 3, 1], "values_b": [2, 2, 1, 1]})";

TEST(CliTest, HelpAndUsageErrors) {
  EXPECT_EQ(RunCli("--help"), 0);
  EXPECT_EQ(RunCli("solve"), 2);  // --config missing
  EXPECT_EQ(RunCli("--config x.json"), 2);  // no subcommand
  const std::string cfg = Write("a.json", std::string("{") + kGame + "}");
  EXPECT_EQ(RunCli("solve --config " + cfg + " --format xml"), 2);
  EXPECT_EQ(RunCli("solve --config " + cfg + " --threads 0"), 2);
}

TEST(CliTest, ConfigErrorsExitTwo) {
  EXPECT_EQ(RunCli("solve --config /nonexistent/cfg.json"), 2);
  const std::string typo = Write("typo.json", "{\n  \"gmae\": {}\n}");
  EXPECT_EQ(RunCli("solve --config " + typo), 2);
  const std::string err = Slurp(Dir() / "stderr.txt");
  EXPECT_NE(err.find("gmae"), std::string::npos) << err;
  EXPECT_NE(err.find("line 2"), std::string::npos) << err;
  const std::string bad_eps =
      Write("eps.json", std::string("{") + kGame + R"(, "csf": {"kind": "power", "r": 3}, "eps": 0.7})");
  EXPECT_EQ(RunCli("delta --config " + bad_eps), 2);
  const std::string infeasible =
      Write("pay.json", std::string("{") + kGame + R"(, "x_a": [1, 1, 0, 0], "x_b": [0, 0, 0, 0]})");
  EXPECT_EQ(RunCli("payoff --config " + infeasible), 2);
}

TEST(CliTest, EverySubcommandProducesJson) {
  const std::string cfg = Write("all.json", std::string("{") + kGame + R"(,
    "csf": {"kind": "power", "r": 4}, "x_a": [0.25, 0.25, 0.25, 0.25], "x_b": [0.5, 0.5, 0.5, 0],
    "m_samples": 2000, "grid_points": 31, "eps": 0.1, "samples": 4,
    "sweep": {"axis": "R", "values": [2, 8]}})");
  for (const char* task : {"solve", "sample", "payoff", "exploit", "delta", "sweep"}) {
    ASSERT_EQ(RunCli(std::string(task) + " --config " + cfg), 0) << task << ": " << Slurp(Dir() / "stderr.txt");
    const json doc = json::parse(Slurp(Dir() / "stdout.txt"));
    EXPECT_EQ(doc["task"], task);
  }
}

TEST(CliTest, SweepCsvWritesSummaryAndDropsPartial) {
  const std::string cfg = Write("sweep.json", R"({
    "game": {"family": "two_tier", "n": 4},
    "sweep": {"axis": "budget_ratio", "values": [1.5, 3]},
    "repetitions": 2, "m_samples": 1000, "grid_points": 21, "out": "sweep.csv"})");
  ASSERT_EQ(RunCli("sweep --config " + cfg + " --format csv --seed 5"), 0) << Slurp(Dir() / "stderr.txt");
  const std::string csv = Slurp(Dir() / "sweep.csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "axis,value,seed,eps_a,eps_b,ci_a,ci_b,delta,ms");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.rfind("budget_ratio,", 0), 0u) << line;
    EXPECT_EQ(line.substr(line.size() - 3), ",,0") << line;  // no delta, no timing
  }
  EXPECT_EQ(rows, 4);
  const json summary = json::parse(Slurp(Dir() / "sweep.csv.summary.json"));
  EXPECT_EQ(summary["rows"].size(), 2u);
  EXPECT_FALSE(fs::exists(Dir() / "sweep.csv.partial.jsonl"));

  // --out wins over the config and is relative to the working directory.
  const std::string other = (Dir() / "other.json").string();
  ASSERT_EQ(RunCli("sweep --config " + cfg + " --seed 5 --out " + other), 0);
  EXPECT_EQ(json::parse(Slurp(other))["records"].size(), 4u);
}

TEST(CliTest, RepeatedRunsAreByteIdentical) {
  const std::string cfg = Write("det.json", R"({
    "game": {"family": "random_bounded", "n": 5},
    "csf": {"kind": "logit", "r": 30}, "eps": 0.05,
    "sweep": {"axis": "n", "values": [3, 6]},
    "repetitions": 3, "m_samples": 1500, "grid_points": 21})");
  for (int threads : {1, 8}) {
    const std::string t = std::to_string(threads);
    const auto a = (Dir() / ("det_a" + t + ".json")).string();
    const auto b = (Dir() / ("det_b" + t + ".json")).string();
    ASSERT_EQ(RunCli("sweep --config " + cfg + " --seed 9 --threads " + t + " --out " + a), 0);
    ASSERT_EQ(RunCli("sweep --config " + cfg + " --seed 9 --threads " + t + " --out " + b), 0);
    EXPECT_EQ(Slurp(a), Slurp(b));
  }
  EXPECT_EQ(Slurp(Dir() / "det_a1.json"), Slurp(Dir() / "det_a8.json"));
}

}  // namespace
