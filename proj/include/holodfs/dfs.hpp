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

#ifndef HOLODFS_DFS_HPP_
#define HOLODFS_DFS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "holodfs/operator.hpp"

namespace holodfs {

/// Ordered logical basis inside a physical register.
///
/// Frame convention: logical amplitudes are the complex conjugates of the
/// physical amplitudes on the encoded kets. A physical drive with phase phi
/// then couples logical states with phase e^{+i phi}, which is the sign the
/// dressed-state algebra (bright state, U_S, U_T) is written in. project(),
/// embed() and extract_density() all apply this identification.
class DfsEncoding {
 public:
  DfsEncoding(std::string name, std::vector<std::string> labels, std::vector<Eigen::Index> kets, int register_size);

  /// S1 = {|100>, |001>, |010>} = {0_L, 1_L, E_L} on qubits (q1, q2, q3).
  static DfsEncoding single();
  /// S2 = {00_L, 01_L, 10_L, 11_L, E1_L, E2_L} on six qubits.
  static DfsEncoding two();

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Eigen::Index>& kets() const { return kets_; }
  int register_size() const { return register_size_; }
  Eigen::Index physical_dim() const { return Eigen::Index{1} << register_size_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(kets_.size()); }

  /// Index of a label; throws if absent.
  Eigen::Index index_of(const std::string& label) const;

  /// The first `count` basis entries as their own encoding (e.g. the
  /// computational {0_L, 1_L} span of S1).
  DfsEncoding leading(Eigen::Index count) const;

  /// "label bitstring" table, one row per basis state.
  std::string table() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Eigen::Index> kets_;
  int register_size_;
};

/// Bitstring of a computational index, qubit 1 leftmost.
std::string bitstring(Eigen::Index index, int register_size);

/// Logical matrix of a physical operator in the encoding's ordered basis.
Operator project(const Operator& op, const DfsEncoding& enc);

/// Physical ket of a logical state (length enc.size()).
StateVector embed(const StateVector& logical, const DfsEncoding& enc);

/// Physical density matrix of a logical density matrix.
Operator embed_density(const Operator& logical, const DfsEncoding& enc);

/// Logical submatrix of a physical density matrix. Not renormalized, so
/// population outside the encoding shows up as a trace deficit.
Operator extract_density(const Operator& rho, const DfsEncoding& enc);

/// 1 - sum_i |<ket_i|psi>|^2.
double leakage(const StateVector& state, const DfsEncoding& enc);

/// Map S2 onto the active qubits (q3, q4, q6):
///   00_L -> |010>, 01_L -> |001>, 10_L -> |110>, 11_L -> |101>,
///   E1_L -> |100>, E2_L -> |011>.
DfsEncoding reduce_two_logical(const DfsEncoding& enc6);

/// Bright and dark states of the drive with mixing angle theta and relative
/// phase phi, as vectors over {0_L, 1_L}.
struct DressedBasis {
  double theta = 0.0;
  double phi = 0.0;
  StateVector bright;
  StateVector dark;

  static DressedBasis make(double theta, double phi);

  /// The same vectors padded with a zero ancilla amplitude (basis of S1).
  StateVector bright_s1() const;
  StateVector dark_s1() const;
};

void write_encoding(std::ostream& os, const DfsEncoding& enc);

}  // namespace holodfs

#endif  // HOLODFS_DFS_HPP_
