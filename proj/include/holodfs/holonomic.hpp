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

#ifndef HOLODFS_HOLONOMIC_HPP_
#define HOLODFS_HOLONOMIC_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "holodfs/dfs.hpp"
#include "holodfs/operator.hpp"
#include "holodfs/spin_system.hpp"

namespace holodfs {

/// Single-loop gate U_S(gamma, theta, phi) with drive amplitude omega and
/// loop time tau; omega * tau must equal pi.
struct SingleGateSpec {
  double gamma = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double omega = 1.0;
  double tau = kPi;

  static SingleGateSpec make(double gamma, double theta, double phi, double omega = 1.0) {
    return {gamma, theta, phi, omega, kPi / omega};
  }
  static SingleGateSpec not_gate() { return make(kPi, kPi / 2, 0.0); }
  static SingleGateSpec hadamard() { return make(kPi, kPi / 4, 0.0); }

  /// Throws std::invalid_argument unless the loop is cyclic (|omega*tau - pi| <= 1e-12).
  void validate() const;
};

/// N repetitions of U_S(gamma/N, theta, phi) reproducing U_S(gamma, theta, phi).
struct CompositeSpec {
  SingleGateSpec target;
  int repetitions = 2;

  SingleGateSpec base() const;
  void validate() const;
};

/// Two-logical-qubit gate U_T(vartheta, varphi); omega_prime * duration = pi.
struct TwoGateSpec {
  double vartheta = 0.0;
  double varphi = 0.0;
  double omega_prime = 1.0;
  double duration = kPi;

  static TwoGateSpec make(double vartheta, double varphi, double omega_prime = 1.0) {
    return {vartheta, varphi, omega_prime, kPi / omega_prime};
  }
  void validate() const;
};

struct Segment {
  HamiltonianSpec hamiltonian;
  double duration = 0.0;
};

/// Piecewise-constant evolution, segments in time order.
struct Schedule {
  int register_size = 3;
  std::vector<Segment> segments;

  double total_duration() const;
  void validate() const;
};

Schedule concatenate(const Schedule& first, const Schedule& then);

/// Where a single-logical-qubit drive sits: qubits offset+1..offset+3 of a
/// register_size-qubit register.
struct Placement {
  int register_size = 3;
  int offset = 0;

  static Placement logical_qubit(int which);  // 1 or 2 in the six-qubit register
};

/// e^{i gamma/2}[cos(gamma/2) I + i sin(gamma/2) n.sigma] with
/// n = (sin theta cos phi, sin theta sin phi, cos theta).
Operator closed_form_single(const SingleGateSpec& spec);

/// Drive H_S(omega, theta, phi; phi1) = H_1(omega cos(theta/2), phi1) + H_2(omega sin(theta/2), phi1 + phi).
HamiltonianSpec loop_hamiltonian(double omega, double theta, double phi, double phi1, Placement where = {});

/// Two half-loop segments: phi1 = 0, then phi1' = pi + gamma.
Schedule synthesize_schedule_single(const SingleGateSpec& spec, Placement where = {});

/// N copies of the single-loop schedule with phase gamma/N.
Schedule synthesize_composite(const CompositeSpec& spec, Placement where = {});

/// The explicit 4x4 U_T(vartheta, varphi) in the {00, 01, 10, 11} basis,
/// including its overall -1.
Operator closed_form_two(const TwoGateSpec& spec);

/// One segment of H_T with Omega3 = Omega' cos(vartheta/2), Omega4 = Omega' sin(vartheta/2).
Schedule synthesize_two(const TwoGateSpec& spec, TwoQubitRegister reg = TwoQubitRegister::Reduced);

/// Time-ordered product of the segment propagators.
Operator simulate(const Schedule& schedule);

/// Propagators at the end of each segment (same length as segments).
std::vector<Operator> simulate_segments(const Schedule& schedule);

/// Largest |<j(t)|H(t)|k(t)>| over j, k in {bright, dark}, sampled at
/// `samples` evenly spaced times inside every segment.
double parallel_transport_defect(const Schedule& schedule, const DressedBasis& basis, int samples);

/// Largest leakage out of `enc` of any encoded basis state, sampled at
/// `samples` times per segment.
double max_leakage(const Schedule& schedule, const DfsEncoding& enc, int samples);

enum class CzVariant {
  Published,       ///< the sequence as printed: K = U_S^1(pi, pi/2, 0) U_S^2(pi, pi/4, 0) U_T(pi/4, 0)
  PhaseCorrected,  ///< U_S^1(pi, pi/2, 0) replaced by the phase gate U_S^1(pi/2, 0, 0)
};

std::string to_string(CzVariant v);
CzVariant parse_cz_variant(const std::string& s);

/// One factor of the CZ sequence acting on the two-logical-qubit space.
struct CzFactor {
  std::string label;
  int logical_qubit = 0;  ///< 1 or 2 for U_S, 0 for U_T
  SingleGateSpec single;
  TwoGateSpec two;
  Operator logical;  ///< 4x4
};

struct CzConstruction {
  CzVariant variant = CzVariant::Published;
  std::vector<CzFactor> factors;  ///< written order; the rightmost acts first
  Operator product;               ///< 4x4 product of the factors
  double cz_error = 0.0;          ///< phase-aligned Frobenius distance to diag(1, 1, 1, -1)
  bool is_cz = false;             ///< cz_error <= 1e-8
  std::string diagnostic;
};

/// U_S^2(pi/2, pi/2, pi) K U_S^2(pi/2, pi/2, 0) with K as in `variant`,
/// multiplied from the closed forms. A product that misses CZ is returned
/// with is_cz == false and a construction-fault diagnostic.
CzConstruction build_cz(CzVariant variant = CzVariant::Published);

/// diag(1, 1, 1, -1).
Operator cz_matrix();

/// Physical six-qubit schedule realizing the factors of `cz` in time order.
Schedule cz_schedule(const CzConstruction& cz);

// Schedule text: "register N", then per segment a "segment <duration>" line
// followed by its Pauli terms.
void write_schedule(std::ostream& os, const Schedule& schedule);
Schedule read_schedule(std::istream& is);

}  // namespace holodfs

#endif  // HOLODFS_HOLONOMIC_HPP_
