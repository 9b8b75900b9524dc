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

#include "holodfs/noise.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "holodfs/format.hpp"

namespace holodfs {

namespace {

// All non-identity Pauli strings on `qubits` qubits.
std::vector<Operator> pauli_strings(int qubits) {
  const std::array<Operator, 4> one{pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
  std::vector<Operator> out;
  const int total = 1 << (2 * qubits);
  for (int code = 1; code < total; ++code) {
    Operator p = Operator::Identity(1, 1);
    for (int q = qubits - 1; q >= 0; --q) p = kron(p, one[static_cast<std::size_t>((code >> (2 * q)) & 3)]);
    out.push_back(std::move(p));
  }
  return out;
}

int log2_dim(Eigen::Index d) {
  int q = 0;
  while ((Eigen::Index{1} << q) < d) ++q;
  if ((Eigen::Index{1} << q) != d) throw std::invalid_argument("dimension is not a power of two");
  return q;
}

ChiMatrix ideal_chi(const SingleGateSpec& spec) { return chi_of_unitary(closed_form_single(spec)); }

}  // namespace

void NoiseConfig::validate() const {
  if (!std::isfinite(epsilon) || std::abs(epsilon) >= 1.0)
    throw std::invalid_argument("noise: epsilon must satisfy |epsilon| < 1");
  if (!std::isfinite(measurement_noise_sigma) || measurement_noise_sigma < 0.0)
    throw std::invalid_argument("noise: measurement_noise_sigma must be >= 0");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

Schedule apply_systematic(const Schedule& schedule, double epsilon) {
  if (!std::isfinite(epsilon) || std::abs(epsilon) >= 1.0)
    throw std::invalid_argument("apply_systematic: epsilon must satisfy |epsilon| < 1");
  Schedule out = schedule;
  for (auto& seg : out.segments) seg.hamiltonian = seg.hamiltonian.scaled(1.0 + epsilon);
  return out;
}

Schedule apply_systematic(const SingleGateSpec& spec, double epsilon) {
  return apply_systematic(synthesize_schedule_single(spec), epsilon);
}

Schedule apply_systematic(const CompositeSpec& spec, double epsilon) {
  return apply_systematic(synthesize_composite(spec), epsilon);
}

StateTomography gaussian_tomography(double sigma, std::uint64_t seed) {
  if (!std::isfinite(sigma) || sigma < 0.0) throw std::invalid_argument("gaussian_tomography: sigma must be >= 0");
  if (sigma == 0.0) return {};
  auto rng = std::make_shared<std::mt19937_64>(seed);
  auto cache = std::make_shared<std::map<Eigen::Index, std::vector<Operator>>>();
  return [sigma, rng, cache](const Operator& rho, std::size_t) -> Operator {
    const Eigen::Index d = rho.rows();
    auto it = cache->find(d);
    if (it == cache->end()) it = cache->emplace(d, pauli_strings(log2_dim(d))).first;
    std::normal_distribution<double> gauss(0.0, sigma);
    Operator out = rho;
    for (const auto& p : it->second) out += (gauss(*rng) / static_cast<double>(d)) * p;
    return out;
  };
}

std::vector<SweepGate> default_sweep_gates() {
  return {{"NOT", SingleGateSpec::not_gate()}, {"H", SingleGateSpec::hadamard()}};
}

std::vector<double> default_epsilon_grid() {
  std::vector<double> g;
  for (int k = -4; k <= 4; ++k) g.push_back(0.05 * k);
  return g;
}

std::string scheme_name(int repetitions) { return repetitions == 1 ? "single-loop" : "composite"; }

ChiMatrix perturbed_gate_chi(const SweepGate& gate, int repetitions, double epsilon, const NoiseConfig& cfg,
                             std::uint64_t stream, bool keep_records) {
  cfg.validate();
  const CompositeSpec comp{gate.spec, repetitions};
  comp.validate();
  const Operator u = simulate(apply_systematic(synthesize_composite(comp), epsilon));
  QptOptions opts;
  opts.keep_records = keep_records;
  opts.prepared_inputs = cfg.spam_records;
  opts.tomography = gaussian_tomography(cfg.measurement_noise_sigma, stream);
  return run_qpt_single(unitary_channel(u), DfsEncoding::single(), opts);
}

double perturbed_gate_distance(const SweepGate& gate, int repetitions, double epsilon, const NoiseConfig& cfg,
                               std::uint64_t stream, std::string* flags) {
  const ChiMatrix chi = perturbed_gate_chi(gate, repetitions, epsilon, cfg, stream);
  if (flags) *flags = chi.flags.describe();
  return gate_distance(chi, ideal_chi(gate.spec));
}

SweepResult run_sweep(const std::vector<SweepGate>& gates, const std::vector<int>& schemes,
                      const std::vector<double>& grid, const NoiseConfig& cfg) {
  if (grid.empty()) throw std::invalid_argument("run_sweep: epsilon grid is empty");
  if (gates.empty() || schemes.empty()) throw std::invalid_argument("run_sweep: no gates or schemes");
  cfg.validate();
  SweepResult res;
  res.grid = grid;
  res.seed = cfg.rng_seed;
  res.sigma = cfg.measurement_noise_sigma;
  std::uint64_t index = 0;
  for (const auto& gate : gates)
    for (int n : schemes)
      for (double eps : grid) {
        SweepRow row;
        row.gate = gate.name;
        row.scheme = scheme_name(n);
        row.repetitions = n;
        row.epsilon = eps;
        row.sigma = cfg.measurement_noise_sigma;
        row.seed = cfg.rng_seed;
        row.chi_distance = perturbed_gate_distance(gate, n, eps, cfg, stream_seed(cfg.rng_seed, index++), &row.flags);
        res.rows.push_back(std::move(row));
      }
  return res;
}

std::string SweepResult::to_csv() const {
  std::ostringstream os;
  os << "gate,scheme,N,epsilon,sigma,seed,chi_distance,flags\n";
  for (const auto& r : rows)
    os << r.gate << ',' << r.scheme << ',' << r.repetitions << ',' << format_real(r.epsilon) << ','
       << format_real(r.sigma) << ',' << r.seed << ',' << format_real(r.chi_distance) << ',' << r.flags << '\n';
  return os.str();
}

nlohmann::json SweepResult::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["sigma"] = sigma;
  j["grid"] = grid;
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows)
    rs.push_back({{"gate", r.gate},
                  {"scheme", r.scheme},
                  {"N", r.repetitions},
                  {"epsilon", r.epsilon},
                  {"sigma", r.sigma},
                  {"seed", r.seed},
                  {"chi_distance", r.chi_distance},
                  {"flags", r.flags}});
  j["rows"] = rs;
  return j;
}

NoiseStats measurement_noise_study(double sigma, int trials, const NoiseConfig& cfg, const SingleGateSpec& gate) {
  if (!std::isfinite(sigma) || sigma < 0.0) throw std::invalid_argument("measurement_noise_study: sigma must be >= 0");
  if (trials < 1) throw std::invalid_argument("measurement_noise_study: trials must be >= 1");
  NoiseConfig c = cfg;
  c.epsilon = 0.0;
  c.measurement_noise_sigma = sigma;
  const SweepGate g{"gate", gate};
  std::vector<double> d;
  for (int t = 0; t < trials; ++t)
    d.push_back(perturbed_gate_distance(g, 1, 0.0, c, stream_seed(cfg.rng_seed, static_cast<std::uint64_t>(t))));
  NoiseStats s;
  s.sigma = sigma;
  s.trials = trials;
  for (double v : d) s.mean += v;
  s.mean /= trials;
  for (double v : d) s.stddev += (v - s.mean) * (v - s.mean);
  s.stddev = trials > 1 ? std::sqrt(s.stddev / (trials - 1)) : 0.0;
  return s;
}

SigmaCalibration calibrate_sigma(double target, int trials, const NoiseConfig& cfg, const SingleGateSpec& gate) {
  if (!(target > 0.0)) throw std::invalid_argument("calibrate_sigma: target must be positive");
  const NoiseStats unit = measurement_noise_study(1.0, trials, cfg, gate);
  if (!(unit.mean > 0.0)) throw InvariantError("calibrate_sigma: noise produced no distance");
  SigmaCalibration c;
  c.target = target;
  c.sigma_star = target / unit.mean;
  c.at_sigma_star = measurement_noise_study(c.sigma_star, trials, cfg, gate);
  return c;
}

SpamResult spam_study(const std::vector<Operator>& imperfect_inputs, const Channel& channel, const ChiMatrix& ideal,
                      const DfsEncoding& enc) {
  for (std::size_t k = 0; k < imperfect_inputs.size(); ++k) {
    const Operator& rho = imperfect_inputs[k];
    const std::string which = "spam_study: input " + std::to_string(k);
    if (rho.rows() != rho.cols()) throw std::invalid_argument(which + " is not square");
    if (!is_hermitian(rho)) throw std::invalid_argument(which + " is not hermitian");
    if (std::abs(rho.trace() - Complex(1.0)) > 1e-10) throw std::invalid_argument(which + " does not have unit trace");
    Eigen::SelfAdjointEigenSolver<Operator> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol::kPositivity) throw std::invalid_argument(which + " is not positive");
  }
  QptOptions opts;
  opts.prepared_inputs = imperfect_inputs;
  SpamResult r;
  r.chi = ideal.basis.logical_qubits == 1 ? run_qpt_single(channel, enc, opts) : run_qpt_two(channel, enc, opts);
  r.distance = gate_distance(r.chi, ideal);
  return r;
}

std::vector<double> reference_input_distances() { return {0.055, 0.060, 0.114, 0.149}; }

std::vector<Operator> depolarized_inputs(const std::vector<double>& subspace_distances, const DfsEncoding& enc) {
  const int n = subspace_distances.size() == 4 ? 1 : 2;
  if (subspace_distances.size() != 4 && subspace_distances.size() != 16)
    throw std::invalid_argument("depolarized_inputs: need 4 or 16 distances");
  auto ideal = qpt_physical_inputs(n, enc);
  const double dim = static_cast<double>(enc.physical_dim());
  // ||I_L/D - |psi><psi|||_F for a pure logical state: one eigenvalue
  // 1/D - 1, the other d_L - 1 equal to 1/D.
  const double others = static_cast<double>((Eigen::Index{1} << n) - 1);
  const double per_unit = std::sqrt((1.0 - 1.0 / dim) * (1.0 - 1.0 / dim) + others / (dim * dim));
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    const double p = subspace_distances[k] / per_unit;
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarized_inputs: distance out of reach");
    const Operator mixed = Operator::Identity(enc.physical_dim(), enc.physical_dim()) / dim;
    ideal[k] = (1.0 - p) * ideal[k] + p * mixed;
  }
  return ideal;
}

}  // namespace holodfs
