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

#include "holodfs/qpt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace holodfs {

namespace {

using Coefficients = std::array<Complex, 4>;  // weights on inputs {0, 1, +, +i}

// |a><c| as a combination of the four single-qubit input projectors.
Coefficients unit_operator_weights(int a, int c) {
  const Complex i = kI;
  if (a == 0 && c == 0) return {1.0, 0.0, 0.0, 0.0};
  if (a == 1 && c == 1) return {0.0, 1.0, 0.0, 0.0};
  if (a == 0 && c == 1) return {-(1.0 + i) / 2.0, -(1.0 + i) / 2.0, 1.0, i};
  return {-(1.0 - i) / 2.0, -(1.0 - i) / 2.0, 1.0, -i};
}

Operator lambda_single() {
  Operator l = Operator::Zero(4, 4);
  l.block(0, 0, 2, 2) = pauli::identity();
  l.block(0, 2, 2, 2) = pauli::x();
  l.block(2, 0, 2, 2) = pauli::x();
  l.block(2, 2, 2, 2) = -pauli::identity();
  return 0.5 * l;
}

double min_eigenvalue(const Operator& m) {
  const Operator herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Operator> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void check_channel_input(const DfsEncoding& enc, int logical_qubits) {
  if (enc.size() < (Eigen::Index{1} << logical_qubits))
    throw std::invalid_argument("QPT: encoding " + enc.name() + " has too few kets for " +
                                std::to_string(logical_qubits) + " logical qubit(s)");
}

ChiMatrix reconstruct(const Channel& channel, const DfsEncoding& full_enc, int n, const QptOptions& options) {
  check_channel_input(full_enc, n);
  const Eigen::Index d = Eigen::Index{1} << n;
  const DfsEncoding enc = full_enc.leading(d);
  const auto labels = qpt_input_labels(n);
  const std::size_t count = labels.size();

  std::vector<Operator> inputs = options.prepared_inputs.empty() ? qpt_physical_inputs(n, enc) : options.prepared_inputs;
  if (inputs.size() != count)
    throw std::invalid_argument("QPT: expected " + std::to_string(count) + " prepared inputs, got " +
                                std::to_string(inputs.size()));

  ChiMatrix chi;
  chi.basis = OperatorBasis::product(n);
  std::vector<Operator> outputs(count);
  double min_out = 0.0;
  double max_leak = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    if (inputs[k].rows() != enc.physical_dim() || inputs[k].cols() != enc.physical_dim())
      throw std::invalid_argument("QPT: prepared input has wrong dimension");
    const Operator out = channel(inputs[k]);
    if (out.rows() != enc.physical_dim() || out.cols() != enc.physical_dim())
      throw std::invalid_argument("QPT: channel changed the dimension");
    min_out = std::min(min_out, min_eigenvalue(out));
    const Operator measured = options.tomography ? options.tomography(out, k) : out;
    outputs[k] = extract_density(measured, enc);
    max_leak = std::max(max_leak, 1.0 - extract_density(out, enc).trace().real());
    if (options.keep_records) chi.records.push_back({labels[k], measured, outputs[k]});
  }

  // Block matrix of E(|j><k|) over logical basis operators.
  const Eigen::Index d2 = d * d;
  Operator blocks = Operator::Zero(d2, d2);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k) {
      Operator e = Operator::Zero(d, d);
      if (n == 1) {
        const auto w = unit_operator_weights(static_cast<int>(j), static_cast<int>(k));
        for (std::size_t p = 0; p < 4; ++p) e += w[p] * outputs[p];
      } else {
        const auto w1 = unit_operator_weights(static_cast<int>(j >> 1), static_cast<int>(k >> 1));
        const auto w2 = unit_operator_weights(static_cast<int>(j & 1), static_cast<int>(k & 1));
        for (std::size_t p = 0; p < 4; ++p)
          for (std::size_t q = 0; q < 4; ++q) {
            const Complex w = w1[p] * w2[q];
            if (w != Complex(0.0)) e += w * outputs[4 * p + q];
          }
      }
      blocks.block(j * d, k * d, d, d) = e;
    }

  Operator lambda = lambda_single();
  if (n == 2) {
    // Reorder (j1, j2, a1, a2) -> (j1, a1, j2, a2) so Lambda (x) Lambda acts per qubit.
    Operator perm = Operator::Zero(16, 16);
    for (int j1 = 0; j1 < 2; ++j1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int a1 = 0; a1 < 2; ++a1)
          for (int a2 = 0; a2 < 2; ++a2) perm(8 * j1 + 4 * j2 + 2 * a1 + a2, 8 * j1 + 4 * a1 + 2 * j2 + a2) = 1.0;
    blocks = perm.transpose() * blocks * perm;
    lambda = kron(lambda, lambda);
  }
  chi.entries = lambda * blocks * lambda;

  auto& f = chi.flags;
  f.min_output_eigenvalue = min_out;
  f.output_not_positive = min_out < -tol::kPositivity;
  f.max_leakage = max_leak;
  f.leakage = max_leak > tol::kTracePreserving;
  f.min_chi_eigenvalue = min_eigenvalue(chi.entries);
  f.chi_not_positive = f.min_chi_eigenvalue < -tol::kPositivity || hermiticity_defect(chi.entries) > 1e-10;
  Operator sum = Operator::Zero(d, d);
  for (std::size_t m = 0; m < chi.basis.elements.size(); ++m)
    for (std::size_t k = 0; k < chi.basis.elements.size(); ++k)
      sum += chi.entries(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) *
             chi.basis.elements[k].adjoint() * chi.basis.elements[m];
  f.trace_preservation_defect = (sum - Operator::Identity(d, d)).norm();
  f.not_trace_preserving = f.trace_preservation_defect > tol::kTracePreserving;
  return chi;
}

}  // namespace

Channel unitary_channel(Operator u) {
  if (!is_unitary(u)) throw std::invalid_argument("unitary_channel: operator is not unitary");
  return [u = std::move(u)](const Operator& rho) -> Operator { return u * rho * u.adjoint(); };
}

OperatorBasis OperatorBasis::single() {
  OperatorBasis b;
  b.logical_qubits = 1;
  b.labels = {"I", "X", "-iY", "Z"};
  b.elements = {pauli::identity(), pauli::x(), Operator(-kI * pauli::y()), pauli::z()};
  return b;
}

OperatorBasis OperatorBasis::product(int logical_qubits) {
  if (logical_qubits == 1) return single();
  if (logical_qubits != 2) throw std::invalid_argument("OperatorBasis: only one or two logical qubits");
  const OperatorBasis s = single();
  OperatorBasis b;
  b.logical_qubits = 2;
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t n = 0; n < 4; ++n) {
      b.labels.push_back(s.labels[m] + "," + s.labels[n]);
      b.elements.push_back(kron(s.elements[m], s.elements[n]));
    }
  return b;
}

std::string QptFlags::describe() const {
  std::string out;
  auto add = [&out](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '|';
    out += name;
  };
  add(output_not_positive, "output_not_positive");
  add(chi_not_positive, "chi_not_positive");
  add(not_trace_preserving, "not_trace_preserving");
  add(leakage, "leakage");
  return out.empty() ? "ok" : out;
}

std::vector<std::string> qpt_input_labels(int logical_qubits) {
  const std::vector<std::string> one{"0", "1", "+", "+i"};
  if (logical_qubits == 1) return one;
  if (logical_qubits != 2) throw std::invalid_argument("QPT: only one or two logical qubits");
  std::vector<std::string> out;
  for (const auto& a : one)
    for (const auto& b : one) out.push_back(a + "," + b);
  return out;
}

std::vector<Operator> qpt_logical_inputs(int logical_qubits) {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<StateVector> kets(4, StateVector::Zero(2));
  kets[0](0) = 1.0;
  kets[1](1) = 1.0;
  kets[2] << r, r;
  kets[3] << r, Complex(0.0, r);
  std::vector<Operator> one;
  for (const auto& k : kets) one.push_back(k * k.adjoint());
  if (logical_qubits == 1) return one;
  if (logical_qubits != 2) throw std::invalid_argument("QPT: only one or two logical qubits");
  std::vector<Operator> out;
  for (const auto& a : one)
    for (const auto& b : one) out.push_back(kron(a, b));
  return out;
}

std::vector<Operator> qpt_physical_inputs(int logical_qubits, const DfsEncoding& enc) {
  check_channel_input(enc, logical_qubits);
  const DfsEncoding logical = enc.leading(Eigen::Index{1} << logical_qubits);
  std::vector<Operator> out;
  for (const auto& rho : qpt_logical_inputs(logical_qubits)) out.push_back(embed_density(rho, logical));
  return out;
}

ChiMatrix run_qpt_single(const Channel& channel, const DfsEncoding& enc, const QptOptions& options) {
  return reconstruct(channel, enc, 1, options);
}

ChiMatrix run_qpt_two(const Channel& channel, const DfsEncoding& enc, const QptOptions& options) {
  return reconstruct(channel, enc, 2, options);
}

ChiMatrix chi_of_unitary(const Operator& u) {
  if (u.rows() != 2 && u.rows() != 4) throw std::invalid_argument("chi_of_unitary: expected a 2x2 or 4x4 unitary");
  ChiMatrix chi;
  chi.basis = OperatorBasis::product(u.rows() == 2 ? 1 : 2);
  const auto n = static_cast<Eigen::Index>(chi.basis.elements.size());
  Eigen::VectorXcd c(n);
  for (Eigen::Index m = 0; m < n; ++m)
    c(m) = (chi.basis.elements[static_cast<std::size_t>(m)].adjoint() * u).trace() / static_cast<double>(u.rows());
  chi.entries = c * c.adjoint();
  return chi;
}

Operator apply_chi(const ChiMatrix& chi, const Operator& rho) {
  const Eigen::Index d = chi.basis.dim();
  if (rho.rows() != d || rho.cols() != d) throw std::invalid_argument("apply_chi: state has wrong dimension");
  Operator out = Operator::Zero(d, d);
  const auto& e = chi.basis.elements;
  for (std::size_t m = 0; m < e.size(); ++m)
    for (std::size_t n = 0; n < e.size(); ++n) {
      const Complex w = chi.entries(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
      if (w != Complex(0.0)) out += w * e[m] * rho * e[n].adjoint();
    }
  return out;
}

double gate_distance(const ChiMatrix& a, const ChiMatrix& b) {
  if (!(a.basis == b.basis)) throw std::invalid_argument("gate_distance: chi matrices use different bases");
  return frobenius_distance(a.entries, b.entries);
}

nlohmann::json operator_to_json(const Operator& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

Operator operator_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Operator m(n, static_cast<Eigen::Index>(j[0].size()));
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m.cols())
      throw std::invalid_argument("matrix JSON rows must have equal length");
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2) throw std::invalid_argument("matrix entries must be [re, im] pairs");
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

nlohmann::json to_json(const ChiMatrix& chi, bool include_records) {
  nlohmann::json j;
  j["basis"] = chi.basis.labels;
  j["entries"] = operator_to_json(chi.entries);
  j["flags"] = {{"output_not_positive", chi.flags.output_not_positive},
                {"chi_not_positive", chi.flags.chi_not_positive},
                {"not_trace_preserving", chi.flags.not_trace_preserving},
                {"leakage", chi.flags.leakage},
                {"min_output_eigenvalue", chi.flags.min_output_eigenvalue},
                {"min_chi_eigenvalue", chi.flags.min_chi_eigenvalue},
                {"trace_preservation_defect", chi.flags.trace_preservation_defect},
                {"max_leakage", chi.flags.max_leakage}};
  if (include_records) {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : chi.records)
      recs.push_back({{"input", r.label},
                      {"physical_output", operator_to_json(r.physical_output)},
                      {"logical_output", operator_to_json(r.logical_output)}});
    j["records"] = recs;
  }
  return j;
}

}  // namespace holodfs
