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

#ifndef HOLODFS_QPT_HPP_
#define HOLODFS_QPT_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holodfs/dfs.hpp"
#include "holodfs/operator.hpp"

namespace holodfs {

/// Physical density matrix in, physical density matrix out.
using Channel = std::function<Operator(const Operator&)>;

Channel unitary_channel(Operator u);

/// {I, X, -iY, Z} for one logical qubit, or the 16 tensor products (index
/// 4m + n for E_m (x) E_n) for two.
struct OperatorBasis {
  int logical_qubits = 1;
  std::vector<std::string> labels;
  std::vector<Operator> elements;

  static OperatorBasis single();
  static OperatorBasis product(int logical_qubits);
  Eigen::Index dim() const { return Eigen::Index{1} << logical_qubits; }
  bool operator==(const OperatorBasis& o) const { return logical_qubits == o.logical_qubits && labels == o.labels; }
};

struct QptFlags {
  bool output_not_positive = false;
  bool chi_not_positive = false;
  bool not_trace_preserving = false;
  bool leakage = false;
  double min_output_eigenvalue = 0.0;
  double min_chi_eigenvalue = 0.0;
  double trace_preservation_defect = 0.0;
  double max_leakage = 0.0;

  bool any() const { return output_not_positive || chi_not_positive || not_trace_preserving || leakage; }
  /// "ok" or a '|'-joined list of raised flags.
  std::string describe() const;
};

struct TomographyRecord {
  std::string label;
  Operator physical_output;
  Operator logical_output;  ///< raw submatrix on the logical kets, not renormalized
};

struct ChiMatrix {
  OperatorBasis basis;
  Operator entries;
  QptFlags flags;
  std::vector<TomographyRecord> records;
};

/// Reconstructs the physical output as seen by state tomography. Gets the
/// true output and the index of the input state.
using StateTomography = std::function<Operator(const Operator& physical_output, std::size_t input_index)>;

struct QptOptions {
  /// Physical input states replacing the ideal encoded ones (4 or 16, in
  /// input order). Empty means ideal preparation.
  std::vector<Operator> prepared_inputs;
  StateTomography tomography;  ///< empty means perfect tomography
  bool keep_records = true;
};

/// Input labels in order: "0", "1", "+", "+i" (and "a,b" products for two).
std::vector<std::string> qpt_input_labels(int logical_qubits);

/// Ideal logical input density matrices in input order.
std::vector<Operator> qpt_logical_inputs(int logical_qubits);

/// Ideal physical inputs for `enc` (logical qubit = its first 2^n kets).
std::vector<Operator> qpt_physical_inputs(int logical_qubits, const DfsEncoding& enc);

ChiMatrix run_qpt_single(const Channel& channel, const DfsEncoding& enc, const QptOptions& options = {});
ChiMatrix run_qpt_two(const Channel& channel, const DfsEncoding& enc, const QptOptions& options = {});

/// chi of rho -> U rho U^dagger for a logical unitary U.
ChiMatrix chi_of_unitary(const Operator& u);

/// sum_mn chi_mn E_m rho E_n^dagger.
Operator apply_chi(const ChiMatrix& chi, const Operator& rho);

/// ||chi_a - chi_b||_F; throws std::invalid_argument on a basis mismatch.
double gate_distance(const ChiMatrix& a, const ChiMatrix& b);

nlohmann::json to_json(const ChiMatrix& chi, bool include_records = false);
nlohmann::json operator_to_json(const Operator& m);
Operator operator_from_json(const nlohmann::json& j);

}  // namespace holodfs

#endif  // HOLODFS_QPT_HPP_
