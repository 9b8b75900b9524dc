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

#ifndef HOLODFS_CLI_HPP_
#define HOLODFS_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holodfs/holonomic.hpp"
#include "holodfs/spin_system.hpp"

namespace holodfs::cli {

enum class GateKind { Not, Hadamard, SingleCustom, Two, Cz };
enum class Backend { Exact, Trotter, NmrCompiled };

struct ExperimentConfig {
  GateKind gate = GateKind::Not;
  double gamma = 0.0, theta = 0.0, phi = 0.0;  // custom U_S
  double vartheta = 0.0, varphi = 0.0;         // U_T
  double omega = 1.0;
  int repetitions = 1;  ///< 1 = single-loop, N >= 2 = composite
  Backend backend = Backend::Exact;
  int trotter_repetitions = 3;
  CzVariant cz_variant = CzVariant::Published;

  double epsilon = 0.0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  bool reference_spam = false;
  std::map<std::string, double> couplings;  ///< "1-2" -> Hz overrides

  std::vector<std::string> sweep_gates{"NOT", "H"};
  std::vector<double> sweep_grid;  ///< empty = default grid
  int sweep_composite = 2;
  int noise_trials = 200;

  std::filesystem::path out_dir = "out";
  std::optional<std::filesystem::path> program_in;  ///< compile-check: verify this file

  /// Throws std::invalid_argument on any out-of-range field.
  void validate() const;
  SingleGateSpec single_spec() const;
  TwoGateSpec two_spec() const;
  NmrSystem nmr_system() const;
  bool is_single() const { return gate == GateKind::Not || gate == GateKind::Hadamard || gate == GateKind::SingleCustom; }
};

std::string to_string(GateKind g);
std::string to_string(Backend b);
GateKind parse_gate(const std::string& s);
Backend parse_backend(const std::string& s);

/// Fields absent from `j` keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});
nlohmann::json config_to_json(const ExperimentConfig& c);

/// Each command prints "key value" lines to `out`, writes its files under
/// cfg.out_dir and returns a process exit code.
int cmd_synthesize(const ExperimentConfig& cfg, std::ostream& out);
int cmd_qpt(const ExperimentConfig& cfg, std::ostream& out);
int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out);
int cmd_compile_check(const ExperimentConfig& cfg, std::ostream& out);

/// Full command line entry point: 0 success, 1 config error, 2 invariant violation.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace holodfs::cli

#endif  // HOLODFS_CLI_HPP_
