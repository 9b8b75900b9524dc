// Copyright 2026 The holodfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "holodfs/cli.hpp"

namespace holodfs::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out, err;
};

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("holodfs_cli_" + name);
  fs::remove_all(p);
  return p;
}

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "holodfs");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json report(const fs::path& dir) { return nlohmann::json::parse(slurp(dir / "report.json")); }

TEST(Cli, SynthesizeWritesSchedule) {
  const fs::path dir = scratch("synth");
  const Result r = invoke({"synthesize", "--gate", "H", "-o", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "schedule.txt"));
  const auto rep = report(dir);
  EXPECT_EQ(rep["command"], "synthesize");
  EXPECT_EQ(rep["config"]["gate"], "H");
  EXPECT_TRUE(rep.contains("timing_s"));
}

TEST(Cli, SynthesizeNmrBackendWritesProgram) {
  const fs::path dir = scratch("synth_nmr");
  const Result r = invoke({"synthesize", "--gate", "NOT", "--backend", "nmr-compiled", "-o", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "program.txt"));
  EXPECT_NE(slurp(dir / "program.txt").find("FREE"), std::string::npos);
}

TEST(Cli, UnknownGateIsConfigError) {
  const Result r = invoke({"synthesize", "--gate", "TOFFOLI", "-o", scratch("bad_gate").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, ZeroRepetitionsIsConfigError) {
  const Result r = invoke({"qpt", "--gate", "NOT", "-N", "0", "-o", scratch("n0").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("N"), std::string::npos);
}

TEST(Cli, UnknownConfigKeyRejected) {
  const fs::path dir = scratch("bad_key");
  fs::create_directories(dir);
  std::ofstream(dir / "cfg.json") << R"({"gate": "NOT", "colour": "blue"})";
  EXPECT_EQ(invoke({"qpt", "-c", (dir / "cfg.json").string(), "-o", dir.string()}).code, 1);
  std::ofstream(dir / "broken.json") << "{";
  EXPECT_EQ(invoke({"qpt", "-c", (dir / "broken.json").string(), "-o", dir.string()}).code, 1);
}

TEST(Cli, MissingSubcommandIsError) { EXPECT_EQ(invoke({}).code, 1); }

TEST(Cli, SweepWritesAllRowsAndIsRepeatable) {
  const fs::path a = scratch("sweep_a"), b = scratch("sweep_b");
  ASSERT_EQ(invoke({"sweep", "--seed", "5", "-o", a.string()}).code, 0);
  ASSERT_EQ(invoke({"sweep", "--seed", "5", "-o", b.string()}).code, 0);
  const std::string csv = slurp(a / "sweep.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 37);
  EXPECT_EQ(csv, slurp(b / "sweep.csv"));
  EXPECT_EQ(slurp(a / "sweep.json"), slurp(b / "sweep.json"));
  EXPECT_EQ(report(a)["results"]["rows"], 36);
}

TEST(Cli, QptMatchesSweepCell) {
  const fs::path q = scratch("qpt_eps"), s = scratch("qpt_eps_sweep");
  const Result r = invoke({"qpt", "--gate", "NOT", "--epsilon", "0.1", "-o", q.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_EQ(invoke({"sweep", "-o", s.string()}).code, 0);
  const auto rows = nlohmann::json::parse(slurp(s / "sweep.json"))["rows"];
  double cell = -1;
  for (const auto& row : rows)
    if (row["gate"] == "NOT" && row["N"] == 1 && std::abs(row["epsilon"].get<double>() - 0.1) < 1e-12)
      cell = row["chi_distance"];
  EXPECT_NEAR(report(q)["results"]["chi_distance"].get<double>(), cell, 1e-12);
  const auto chi = nlohmann::json::parse(slurp(q / "chi.json"));
  EXPECT_EQ(chi["entries"].size(), 4u);
  EXPECT_EQ(chi["records"].size(), 4u);
}

TEST(Cli, PublishedCzIsInvariantViolation) {
  const Result r = invoke({"qpt", "--gate", "CZ", "-o", scratch("cz_pub").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("phase-corrected"), std::string::npos);
}

TEST(Cli, PhaseCorrectedCzPasses) {
  const fs::path dir = scratch("cz_fix");
  const Result r = invoke({"qpt", "--gate", "CZ", "--cz-variant", "phase-corrected", "-o", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(report(dir)["results"]["chi_distance"].get<double>(), 1e-8);
}

TEST(Cli, CzRequiresExactBackend) {
  EXPECT_EQ(invoke({"qpt", "--gate", "CZ", "--cz-variant", "phase-corrected", "--backend", "trotter", "-o",
                    scratch("cz_trot").string()})
                .code,
            1);
}

TEST(Cli, CompileCheckPasses) {
  const fs::path dir = scratch("cc");
  const Result r = invoke({"compile-check", "--gate", "H", "-o", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto res = report(dir)["results"];
  EXPECT_LT(res["target_distance"].get<double>(), 1e-8);
  EXPECT_LT(res["refocus_defect"].get<double>(), 1e-10);
  EXPECT_NE(r.out.find("window_1-2"), std::string::npos);
}

TEST(Cli, CompileCheckRejectsForeignProgram) {
  const fs::path dir = scratch("cc_foreign");
  ASSERT_EQ(invoke({"compile-check", "--gate", "NOT", "-o", dir.string()}).code, 0);
  const fs::path other = scratch("cc_foreign_h");
  const Result r = invoke({"compile-check", "--gate", "H", "--program", (dir / "program.txt").string(), "-o",
                           other.string()});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, SeedFromEnvironment) {
  const fs::path a = scratch("env_a"), b = scratch("env_b");
  ::setenv("HOLODFS_SEED", "99", 1);
  const Result ra = invoke({"qpt", "--gate", "NOT", "--sigma", "0.02", "-o", a.string()});
  ::unsetenv("HOLODFS_SEED");
  const Result rb = invoke({"qpt", "--gate", "NOT", "--sigma", "0.02", "--seed", "99", "-o", b.string()});
  ASSERT_EQ(ra.code, 0) << ra.err;
  ASSERT_EQ(rb.code, 0) << rb.err;
  EXPECT_EQ(report(a)["config"]["noise"]["seed"], 99);
  EXPECT_EQ(report(a)["results"]["chi_distance"], report(b)["results"]["chi_distance"]);
  ::setenv("HOLODFS_SEED", "abc", 1);
  EXPECT_EQ(invoke({"qpt", "--gate", "NOT", "-o", scratch("env_bad").string()}).code, 1);
  ::unsetenv("HOLODFS_SEED");
}

TEST(Config, JsonRoundTrip) {
  ExperimentConfig c;
  c.gate = GateKind::SingleCustom;
  c.gamma = 0.4;
  c.repetitions = 3;
  c.couplings["1-2"] = 150.0;
  const ExperimentConfig back = config_from_json(config_to_json(c));
  EXPECT_EQ(back.gate, c.gate);
  EXPECT_EQ(back.gamma, c.gamma);
  EXPECT_EQ(back.repetitions, 3);
  EXPECT_EQ(back.couplings, c.couplings);
  EXPECT_EQ(config_to_json(back), config_to_json(c));
}

}  // namespace
}  // namespace holodfs::cli
