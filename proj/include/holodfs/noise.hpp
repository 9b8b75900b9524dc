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

#ifndef HOLODFS_NOISE_HPP_
#define HOLODFS_NOISE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "holodfs/holonomic.hpp"
#include "holodfs/qpt.hpp"

namespace holodfs {

struct NoiseConfig {
  double epsilon = 0.0;
  double measurement_noise_sigma = 0.0;
  std::vector<Operator> spam_records;  ///< replacement physical inputs, empty = ideal
  std::uint64_t rng_seed = 0;

  /// Throws std::invalid_argument on sigma < 0, |epsilon| >= 1 or non-finite values.
  void validate() const;
};

/// 64-bit mixer used to derive independent per-point seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Every segment Hamiltonian scaled by (1 + epsilon), durations unchanged.
Schedule apply_systematic(const Schedule& schedule, double epsilon);
Schedule apply_systematic(const SingleGateSpec& spec, double epsilon);
Schedule apply_systematic(const CompositeSpec& spec, double epsilon);

/// Tomography that adds N(0, sigma^2) to every non-identity Pauli
/// expectation value of the physical output: rho + sum_P n_P P / d.
StateTomography gaussian_tomography(double sigma, std::uint64_t seed);

struct SweepGate {
  std::string name;
  SingleGateSpec spec;
};

/// NOT and H.
std::vector<SweepGate> default_sweep_gates();

/// -0.2 to 0.2 in steps of 0.05.
std::vector<double> default_epsilon_grid();

struct SweepRow {
  std::string gate;
  std::string scheme;  ///< "single-loop" or "composite"
  int repetitions = 1;
  double epsilon = 0.0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  double chi_distance = 0.0;
  std::string flags;
};

struct SweepResult {
  std::vector<double> grid;
  std::vector<SweepRow> rows;  ///< gate-major, then scheme, then grid order
  std::uint64_t seed = 0;
  double sigma = 0.0;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

std::string scheme_name(int repetitions);

/// QPT of one perturbed gate against its ideal chi. `stream` selects the
/// measurement-noise RNG stream.
ChiMatrix perturbed_gate_chi(const SweepGate& gate, int repetitions, double epsilon, const NoiseConfig& cfg,
                             std::uint64_t stream, bool keep_records = false);
double perturbed_gate_distance(const SweepGate& gate, int repetitions, double epsilon, const NoiseConfig& cfg,
                               std::uint64_t stream, std::string* flags = nullptr);

/// Rows for every (gate, scheme, epsilon). cfg.epsilon is ignored; the grid
/// supplies it. A flagged QPT is recorded in the row, never thrown.
SweepResult run_sweep(const std::vector<SweepGate>& gates, const std::vector<int>& schemes,
                      const std::vector<double>& grid, const NoiseConfig& cfg);

struct NoiseStats {
  double sigma = 0.0;
  int trials = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

/// D(chi) of an ideal `gate` channel under Gaussian measurement noise.
NoiseStats measurement_noise_study(double sigma, int trials, const NoiseConfig& cfg,
                                   const SingleGateSpec& gate = SingleGateSpec::not_gate());

struct SigmaCalibration {
  double target = 0.0;
  double sigma_star = 0.0;
  NoiseStats at_sigma_star;
};

/// sigma whose mean D(chi) equals `target`. The reconstruction is linear in
/// the noise, so with a fixed seed the mean is proportional to sigma.
SigmaCalibration calibrate_sigma(double target, int trials, const NoiseConfig& cfg,
                                 const SingleGateSpec& gate = SingleGateSpec::not_gate());

struct SpamResult {
  ChiMatrix chi;
  double distance = 0.0;
};

/// QPT of `channel` with imperfect physical inputs, compared to `ideal`.
/// Inputs must be hermitian, positive and of unit trace.
SpamResult spam_study(const std::vector<Operator>& imperfect_inputs, const Channel& channel, const ChiMatrix& ideal,
                      const DfsEncoding& enc = DfsEncoding::single());

/// Subspace distances of the four single-qubit input states used as the
/// SPAM calibration target: 0.055, 0.060, 0.114, 0.149.
std::vector<double> reference_input_distances();

/// Physically depolarized ideal inputs, (1-p) rho + p I/D, with p chosen so
/// that the logical submatrix sits at the requested Frobenius distance from
/// the ideal logical state.
std::vector<Operator> depolarized_inputs(const std::vector<double>& subspace_distances,
                                         const DfsEncoding& enc = DfsEncoding::single());

}  // namespace holodfs

#endif  // HOLODFS_NOISE_HPP_
