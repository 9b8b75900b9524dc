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
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "holodfs/cli.hpp"

namespace holodfs::cli {

namespace {

constexpr const char* kSeedEnv = "HOLODFS_SEED";

struct Overrides {
  std::string config_path;
  std::optional<std::string> gate, scheme, backend, cz_variant, spam, out_dir, program;
  std::optional<double> gamma, theta, phi, vartheta, varphi, omega, epsilon, sigma;
  std::optional<int> n, trotter_repetitions;
  std::optional<std::uint64_t> seed;
};

void add_options(CLI::App* sub, Overrides& o) {
  sub->add_option("-c,--config", o.config_path, "JSON experiment config");
  sub->add_option("--gate", o.gate, "NOT, H, US, UT or CZ");
  sub->add_option("--scheme", o.scheme, "single-loop or composite");
  sub->add_option("-N,--repetitions", o.n, "composite repetitions");
  sub->add_option("--backend", o.backend, "exact, trotter or nmr-compiled");
  sub->add_option("--trotter-repetitions", o.trotter_repetitions, "Trotter repetitions per segment");
  sub->add_option("--cz-variant", o.cz_variant, "published or phase-corrected");
  sub->add_option("--gamma", o.gamma);
  sub->add_option("--theta", o.theta);
  sub->add_option("--phi", o.phi);
  sub->add_option("--vartheta", o.vartheta);
  sub->add_option("--varphi", o.varphi);
  sub->add_option("--omega", o.omega);
  sub->add_option("--epsilon", o.epsilon, "systematic amplitude error");
  sub->add_option("--sigma", o.sigma, "measurement noise std-dev");
  sub->add_option("--seed", o.seed, "RNG seed (default from HOLODFS_SEED)");
  sub->add_option("--spam", o.spam, "ideal or reference");
  sub->add_option("-o,--out-dir", o.out_dir, "output directory");
}

std::uint64_t env_seed() {
  const char* s = std::getenv(kSeedEnv);
  if (!s || !*s) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(kSeedEnv) + " is not an unsigned integer");
  }
}

ExperimentConfig build_config(const Overrides& o) {
  ExperimentConfig c;
  c.seed = env_seed();
  nlohmann::json j = nlohmann::json::object();
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw std::invalid_argument("cannot read config " + o.config_path);
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("config " + o.config_path + " is not valid JSON: " + e.what());
    }
  }
  // Flags are folded into the document so they follow the same parsing rules.
  if (o.gate) j["gate"] = *o.gate;
  if (o.scheme) j["scheme"] = *o.scheme;
  if (o.n) j["N"] = *o.n;
  if (o.backend) j["backend"] = *o.backend;
  if (o.trotter_repetitions) j["trotter_repetitions"] = *o.trotter_repetitions;
  if (o.cz_variant) j["cz_variant"] = *o.cz_variant;
  if (o.gamma) j["gamma"] = *o.gamma;
  if (o.theta) j["theta"] = *o.theta;
  if (o.phi) j["phi"] = *o.phi;
  if (o.vartheta) j["vartheta"] = *o.vartheta;
  if (o.varphi) j["varphi"] = *o.varphi;
  if (o.omega) j["omega"] = *o.omega;
  if (o.epsilon) j["noise"]["epsilon"] = *o.epsilon;
  if (o.sigma) j["noise"]["sigma"] = *o.sigma;
  if (o.seed) j["noise"]["seed"] = *o.seed;
  if (o.spam) j["noise"]["spam"] = *o.spam;
  if (o.out_dir) j["output"]["dir"] = *o.out_dir;
  c = config_from_json(j, c);
  if (o.program) c.program_in = *o.program;
  c.validate();
  return c;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holonomic gates on decoherence-free subspaces: synthesis, NMR compilation, tomography"};
  app.require_subcommand(1);
  Overrides o;
  std::function<int(const ExperimentConfig&, std::ostream&)> command;

  auto* syn = app.add_subcommand("synthesize", "write the control schedule (and NMR program)");
  auto* qpt = app.add_subcommand("qpt", "process tomography of the configured gate");
  auto* sweep = app.add_subcommand("sweep", "systematic-error sweep to CSV");
  auto* check = app.add_subcommand("compile-check", "lower to NMR pulses and verify");
  for (auto* sub : {syn, qpt, sweep, check}) add_options(sub, o);
  check->add_option("--program", o.program, "verify this instruction file instead of compiling");
  syn->callback([&] { command = cmd_synthesize; });
  qpt->callback([&] { command = cmd_qpt; });
  sweep->callback([&] { command = cmd_sweep; });
  check->callback([&] { command = cmd_compile_check; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const ExperimentConfig cfg = build_config(o);
    return command(cfg, out);
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: config: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace holodfs::cli
