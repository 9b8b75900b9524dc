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

#ifndef HOLODFS_SPIN_SYSTEM_HPP_
#define HOLODFS_SPIN_SYSTEM_HPP_

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holodfs/operator.hpp"

namespace holodfs {

enum class Axis { X, Y, Z };

char axis_char(Axis a);
Axis parse_axis(char c);

/// One Pauli factor acting on a physical qubit. Qubits are 1-based and the
/// qubit with index 1 is the most significant bit of the computational index.
struct PauliFactor {
  int qubit = 1;
  Axis axis = Axis::Z;

  bool operator==(const PauliFactor&) const = default;
};

struct PauliTerm {
  double coefficient = 0.0;
  std::vector<PauliFactor> factors;
};

/// Weighted sum of Pauli strings on a register of `register_size` qubits.
struct HamiltonianSpec {
  int register_size = 3;
  std::vector<PauliTerm> terms;

  /// Throws std::invalid_argument on repeated or out-of-range qubits or
  /// non-finite coefficients.
  void validate() const;

  HamiltonianSpec scaled(double factor) const;
  bool empty() const { return terms.empty(); }
};

HamiltonianSpec operator+(HamiltonianSpec a, const HamiltonianSpec& b);

/// Dense 2^n x 2^n matrix of the spec; hermitian by construction.
Operator realize(const HamiltonianSpec& spec);

/// Single-qubit operator `op` embedded at 1-based `qubit` of an n-qubit register.
Operator embed_single(const Operator& op, int qubit, int register_size);

/// (Omega_i/2)[cos(phi_i)(X_i X_{i+1} + Y_i Y_{i+1})
///             + (-1)^{i+1} sin(phi_i)(X_i Y_{i+1} - Y_i X_{i+1})]
/// for i in {1, 2}. `offset` shifts the qubit labels so the same drive can be
/// placed on the second logical block (qubits 4..6) of a six-qubit register.
HamiltonianSpec build_single_qubit_pair_hamiltonian(int i, double omega_i, double phi_i,
                                                    int register_size = 3, int offset = 0);

/// Which register the two-logical-qubit interaction lives on.
enum class TwoQubitRegister {
  Full,     ///< six physical qubits q1..q6
  Reduced,  ///< the three active qubits (q3, q4, q6) relabelled 1, 2, 3
};

/// H3 + H4 with
///   H3 = (Omega3/2)[cos(phi)(X3X4 + Y3Y4) + sin(phi)(Y3X4 - X3Y4)],
///   H4 = (Omega4/2)(X3X6 + Y3Y6).
HamiltonianSpec build_two_qubit_hamiltonian(double omega3, double omega4, double phi,
                                            TwoQubitRegister reg = TwoQubitRegister::Full);

/// Scalar couplings of a three-spin molecule in Hz. Chemical shifts are kept
/// for reference only; the rotating-frame model uses the couplings alone.
class NmrSystem {
 public:
  NmrSystem() = default;
  NmrSystem(std::array<std::string, 3> spins, std::map<std::pair<int, int>, double> couplings,
            std::array<double, 3> chemical_shifts = {0.0, 0.0, 0.0});

  /// J_ij for 1-based i != j; order of i, j does not matter.
  double coupling(int i, int j) const;
  bool has_coupling(int i, int j) const;
  void set_coupling(int i, int j, double hz);

  const std::array<std::string, 3>& spins() const { return spins_; }
  const std::array<double, 3>& chemical_shifts() const { return shifts_; }

  /// Relabel: new qubit k is old qubit order[k-1].
  NmrSystem permuted(const std::array<int, 3>& order) const;

  /// Diethyl fluoromalonate (1H, 13C, 19F) with representative coupling
  /// magnitudes J_CH = 161.3 Hz, J_HF = 47.6 Hz, J_CF = 192.2 Hz.
  static NmrSystem diethyl_fluoromalonate();

 private:
  std::array<std::string, 3> spins_{"q1", "q2", "q3"};
  std::map<std::pair<int, int>, double> couplings_;
  std::array<double, 3> shifts_{0.0, 0.0, 0.0};
};

/// (pi/2) sum_{i<j} J_ij Z_i Z_j. Every pair must carry a coupling (zero is fine).
HamiltonianSpec build_nmr_hamiltonian(const NmrSystem& sys);

/// Total excitation number sum_i (I - Z_i)/2.
Operator excitation_number(int register_size);

/// Omega_1 = Omega cos(theta/2), Omega_2 = Omega sin(theta/2) and back.
struct DriveAmplitudes {
  double omega1 = 0.0;
  double omega2 = 0.0;
};
DriveAmplitudes split_amplitude(double omega, double theta);
std::pair<double, double> merge_amplitudes(double omega1, double omega2);  // (Omega, theta)

// Plain-text term list: "register N" header, then one term per line as
// "<coefficient> <axis>@<qubit> ...". '#' starts a comment.
void write_hamiltonian(std::ostream& os, const HamiltonianSpec& spec);
HamiltonianSpec read_hamiltonian(std::istream& is);
std::string format_term(const PauliTerm& term);
PauliTerm parse_term(const std::string& line);

}  // namespace holodfs

#endif  // HOLODFS_SPIN_SYSTEM_HPP_
