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

#include "holodfs/holonomic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "holodfs/format.hpp"

namespace holodfs {

namespace {

constexpr double kCyclicTol = 1e-12;
constexpr double kCzTol = 1e-8;

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

Operator on_logical(int which, const Operator& u) {
  const Operator id = Operator::Identity(2, 2);
  return which == 1 ? kron(u, id) : kron(id, u);
}

}  // namespace

void SingleGateSpec::validate() const {
  check_finite(gamma, "gamma");
  check_finite(theta, "theta");
  check_finite(phi, "phi");
  check_finite(omega, "omega");
  check_finite(tau, "tau");
  if (!(omega > 0.0) || !(tau > 0.0)) throw std::invalid_argument("omega and tau must be positive");
  if (std::abs(omega * tau - kPi) > kCyclicTol) {
    std::ostringstream msg;
    msg << "cyclic evolution condition violated: omega*tau = " << format_real(omega * tau) << ", expected pi";
    throw std::invalid_argument(msg.str());
  }
}

SingleGateSpec CompositeSpec::base() const {
  SingleGateSpec b = target;
  b.gamma = target.gamma / repetitions;
  return b;
}

void CompositeSpec::validate() const {
  if (repetitions < 1) throw std::invalid_argument("composite repetition count N must be >= 1, got " +
                                                   std::to_string(repetitions));
  target.validate();
}

void TwoGateSpec::validate() const {
  check_finite(vartheta, "vartheta");
  check_finite(varphi, "varphi");
  if (!(omega_prime > 0.0) || !(duration > 0.0)) throw std::invalid_argument("omega' and T must be positive");
  if (std::abs(omega_prime * duration - kPi) > kCyclicTol)
    throw std::invalid_argument("two-qubit gate requires omega'*T = pi, got " + format_real(omega_prime * duration));
}

double Schedule::total_duration() const {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

void Schedule::validate() const {
  for (const auto& s : segments) {
    if (!(s.duration > 0.0) || !std::isfinite(s.duration)) throw std::invalid_argument("segment durations must be positive");
    if (s.hamiltonian.register_size != register_size)
      throw std::invalid_argument("segment Hamiltonian register does not match schedule register");
    s.hamiltonian.validate();
  }
}

Schedule concatenate(const Schedule& first, const Schedule& then) {
  if (first.register_size != then.register_size) throw std::invalid_argument("cannot concatenate schedules on different registers");
  Schedule out = first;
  out.segments.insert(out.segments.end(), then.segments.begin(), then.segments.end());
  return out;
}

Placement Placement::logical_qubit(int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("logical qubit must be 1 or 2");
  return {6, which == 1 ? 0 : 3};
}

Operator closed_form_single(const SingleGateSpec& spec) {
  const double c = std::cos(spec.gamma / 2);
  const double s = std::sin(spec.gamma / 2);
  const double st = std::sin(spec.theta);
  const double ct = std::cos(spec.theta);
  Operator u(2, 2);
  u << Complex(c, s * ct), kI * s * st * std::polar(1.0, -spec.phi),
       kI * s * st * std::polar(1.0, spec.phi), Complex(c, -s * ct);
  return std::polar(1.0, spec.gamma / 2) * u;
}

HamiltonianSpec loop_hamiltonian(double omega, double theta, double phi, double phi1, Placement where) {
  const auto amp = split_amplitude(omega, theta);
  return build_single_qubit_pair_hamiltonian(1, amp.omega1, phi1, where.register_size, where.offset) +
         build_single_qubit_pair_hamiltonian(2, amp.omega2, phi1 + phi, where.register_size, where.offset);
}

Schedule synthesize_schedule_single(const SingleGateSpec& spec, Placement where) {
  spec.validate();
  Schedule out{where.register_size, {}};
  const double half = spec.tau / 2;
  out.segments.push_back({loop_hamiltonian(spec.omega, spec.theta, spec.phi, 0.0, where), half});
  out.segments.push_back({loop_hamiltonian(spec.omega, spec.theta, spec.phi, kPi + spec.gamma, where), half});
  return out;
}

Schedule synthesize_composite(const CompositeSpec& spec, Placement where) {
  spec.validate();
  const Schedule one = synthesize_schedule_single(spec.base(), where);
  Schedule out{where.register_size, {}};
  for (int k = 0; k < spec.repetitions; ++k) out = concatenate(out, one);
  return out;
}

Operator closed_form_two(const TwoGateSpec& spec) {
  const double c = std::cos(spec.vartheta);
  const double s = std::sin(spec.vartheta);
  const Complex e = std::polar(1.0, spec.varphi);
  Operator u = Operator::Zero(4, 4);
  u(0, 0) = c;
  u(0, 1) = s * e;
  u(1, 0) = s * std::conj(e);
  u(1, 1) = -c;
  u(2, 2) = -c;
  u(2, 3) = s * e;
  u(3, 2) = s * std::conj(e);
  u(3, 3) = c;
  return -u;
}

Schedule synthesize_two(const TwoGateSpec& spec, TwoQubitRegister reg) {
  spec.validate();
  const double omega3 = spec.omega_prime * std::cos(spec.vartheta / 2);
  const double omega4 = spec.omega_prime * std::sin(spec.vartheta / 2);
  HamiltonianSpec h = build_two_qubit_hamiltonian(omega3, omega4, spec.varphi, reg);
  return Schedule{h.register_size, {{std::move(h), spec.duration}}};
}

std::vector<Operator> simulate_segments(const Schedule& schedule) {
  schedule.validate();
  const Eigen::Index dim = Eigen::Index{1} << schedule.register_size;
  std::vector<Operator> out;
  Operator u = Operator::Identity(dim, dim);
  for (const auto& seg : schedule.segments) {
    u = matrix_exp(realize(seg.hamiltonian), seg.duration) * u;
    out.push_back(u);
  }
  return out;
}

Operator simulate(const Schedule& schedule) {
  const Eigen::Index dim = Eigen::Index{1} << schedule.register_size;
  auto steps = simulate_segments(schedule);
  return steps.empty() ? Operator(Operator::Identity(dim, dim)) : steps.back();
}

double parallel_transport_defect(const Schedule& schedule, const DressedBasis& basis, int samples) {
  if (schedule.register_size != 3) throw std::invalid_argument("parallel transport check runs on the three-qubit register");
  if (samples < 2) throw std::invalid_argument("need at least two samples per segment");
  schedule.validate();
  const DfsEncoding s1 = DfsEncoding::single();
  const std::array<StateVector, 2> start{embed(basis.bright_s1(), s1), embed(basis.dark_s1(), s1)};
  std::array<StateVector, 2> at_segment_start = start;
  double worst = 0.0;
  for (const auto& seg : schedule.segments) {
    const Operator h = realize(seg.hamiltonian);
    for (int k = 0; k < samples; ++k) {
      const double t = seg.duration * k / (samples - 1);
      const Operator u = matrix_exp(h, t);
      std::array<StateVector, 2> now{evolve(u, at_segment_start[0]), evolve(u, at_segment_start[1])};
      for (const auto& j : now)
        for (const auto& m : now) worst = std::max(worst, std::abs(j.dot(h * m)));
      if (k == samples - 1) at_segment_start = now;
    }
  }
  return worst;
}

double max_leakage(const Schedule& schedule, const DfsEncoding& enc, int samples) {
  if (schedule.register_size != enc.register_size()) throw std::invalid_argument("max_leakage: register mismatch");
  if (samples < 1) throw std::invalid_argument("max_leakage: samples must be positive");
  schedule.validate();
  std::vector<StateVector> states;
  for (auto k : enc.kets()) states.push_back(basis_ket(enc.physical_dim(), k));
  double worst = 0.0;
  for (const auto& seg : schedule.segments) {
    const Operator h = realize(seg.hamiltonian);
    std::vector<StateVector> next;
    for (int k = 1; k <= samples; ++k) {
      const Operator u = matrix_exp(h, seg.duration * k / samples);
      for (const auto& psi : states) {
        const StateVector moved = evolve(u, psi);
        worst = std::max(worst, leakage(moved, enc));
        if (k == samples) next.push_back(moved);
      }
    }
    states = std::move(next);
  }
  return worst;
}

std::string to_string(CzVariant v) { return v == CzVariant::Published ? "published" : "phase-corrected"; }

CzVariant parse_cz_variant(const std::string& s) {
  if (s == "published") return CzVariant::Published;
  if (s == "phase-corrected") return CzVariant::PhaseCorrected;
  throw std::invalid_argument("unknown CZ variant '" + s + "' (expected published or phase-corrected)");
}

Operator cz_matrix() {
  Operator cz = Operator::Identity(4, 4);
  cz(3, 3) = -1.0;
  return cz;
}

CzConstruction build_cz(CzVariant variant) {
  CzConstruction out;
  out.variant = variant;
  auto single = [](std::string label, int which, SingleGateSpec spec) {
    CzFactor f;
    f.label = std::move(label);
    f.logical_qubit = which;
    f.single = spec;
    f.logical = on_logical(which, closed_form_single(spec));
    return f;
  };
  const SingleGateSpec control_gate = variant == CzVariant::Published ? SingleGateSpec::make(kPi, kPi / 2, 0.0)
                                                                       : SingleGateSpec::make(kPi / 2, 0.0, 0.0);
  const std::string control_label = variant == CzVariant::Published ? "U_S^1(pi,pi/2,0)" : "U_S^1(pi/2,0,0)";

  out.factors.push_back(single("U_S^2(pi/2,pi/2,pi)", 2, SingleGateSpec::make(kPi / 2, kPi / 2, kPi)));
  out.factors.push_back(single(control_label, 1, control_gate));
  out.factors.push_back(single("U_S^2(pi,pi/4,0)", 2, SingleGateSpec::make(kPi, kPi / 4, 0.0)));
  CzFactor ut;
  ut.label = "U_T(pi/4,0)";
  ut.two = TwoGateSpec::make(kPi / 4, 0.0);
  ut.logical = closed_form_two(ut.two);
  out.factors.push_back(ut);
  out.factors.push_back(single("U_S^2(pi/2,pi/2,0)", 2, SingleGateSpec::make(kPi / 2, kPi / 2, 0.0)));

  out.product = Operator::Identity(4, 4);
  for (const auto& f : out.factors) out.product = out.product * f.logical;
  if (!is_unitary(out.product)) throw InvariantError("build_cz: product of unitary factors is not unitary");
  out.cz_error = phase_aligned_distance(out.product, cz_matrix());
  out.is_cz = out.cz_error <= kCzTol;
  if (!out.is_cz) {
    std::ostringstream msg;
    msg << "construction fault: " << to_string(variant) << " sequence misses diag(1,1,1,-1) by "
        << format_real(out.cz_error) << " (phase-aligned Frobenius), |Tr(CZ^dagger U)|/4 = "
        << format_real(gate_fidelity(cz_matrix(), out.product));
    out.diagnostic = msg.str();
  }
  return out;
}

Schedule cz_schedule(const CzConstruction& cz) {
  Schedule out{6, {}};
  for (auto it = cz.factors.rbegin(); it != cz.factors.rend(); ++it) {
    const Schedule part = it->logical_qubit == 0
                              ? synthesize_two(it->two, TwoQubitRegister::Full)
                              : synthesize_schedule_single(it->single, Placement::logical_qubit(it->logical_qubit));
    out = concatenate(out, part);
  }
  return out;
}

void write_schedule(std::ostream& os, const Schedule& schedule) {
  os << "register " << schedule.register_size << '\n';
  for (const auto& seg : schedule.segments) {
    os << "segment " << format_real(seg.duration) << '\n';
    for (const auto& t : seg.hamiltonian.terms) os << format_term(t) << '\n';
  }
}

Schedule read_schedule(std::istream& is) {
  Schedule out{0, {}};
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "register") {
      if (!(ls >> out.register_size)) throw std::invalid_argument("malformed register line");
    } else if (head == "segment") {
      if (out.register_size == 0) throw std::invalid_argument("schedule must start with 'register N'");
      Segment seg;
      seg.hamiltonian.register_size = out.register_size;
      if (!(ls >> seg.duration)) throw std::invalid_argument("malformed segment line");
      out.segments.push_back(std::move(seg));
    } else {
      if (out.segments.empty()) throw std::invalid_argument("Pauli term before the first segment line");
      out.segments.back().hamiltonian.terms.push_back(parse_term(line));
    }
  }
  if (out.register_size == 0) throw std::invalid_argument("missing 'register N' header");
  out.validate();
  return out;
}

}  // namespace holodfs
