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

#include "holodfs/dfs.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

namespace holodfs {

namespace {

Eigen::Index ket_from_bits(const std::string& bits) {
  Eigen::Index k = 0;
  for (char b : bits) k = (k << 1) | (b == '1' ? 1 : 0);
  return k;
}

int popcount(Eigen::Index k) {
  int n = 0;
  for (; k; k >>= 1) n += static_cast<int>(k & 1);
  return n;
}

void check_dims(const Operator& op, const DfsEncoding& enc, const char* who) {
  if (op.rows() != enc.physical_dim() || op.cols() != enc.physical_dim())
    throw std::invalid_argument(std::string(who) + ": operator is " + std::to_string(op.rows()) + "x" +
                                std::to_string(op.cols()) + ", encoding register needs " +
                                std::to_string(enc.physical_dim()));
}

}  // namespace

DfsEncoding::DfsEncoding(std::string name, std::vector<std::string> labels, std::vector<Eigen::Index> kets,
                         int register_size)
    : name_(std::move(name)), labels_(std::move(labels)), kets_(std::move(kets)), register_size_(register_size) {
  if (labels_.size() != kets_.size() || kets_.empty())
    throw std::invalid_argument("encoding needs one label per ket");
  if (register_size_ < 1 || register_size_ > 6) throw std::invalid_argument("encoding register must be 1..6 qubits");
  std::set<Eigen::Index> seen;
  for (auto k : kets_) {
    if (k < 0 || k >= physical_dim()) throw std::invalid_argument("encoded ket outside register");
    if (!seen.insert(k).second) throw std::invalid_argument("encoded kets must be distinct");
  }
}

DfsEncoding DfsEncoding::single() {
  return DfsEncoding("S1", {"0_L", "1_L", "E_L"},
                     {ket_from_bits("100"), ket_from_bits("001"), ket_from_bits("010")}, 3);
}

DfsEncoding DfsEncoding::two() {
  return DfsEncoding("S2", {"00_L", "01_L", "10_L", "11_L", "E1_L", "E2_L"},
                     {ket_from_bits("100100"), ket_from_bits("100001"), ket_from_bits("001100"),
                      ket_from_bits("001001"), ket_from_bits("101000"), ket_from_bits("000101")},
                     6);
}

Eigen::Index DfsEncoding::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("encoding " + name_ + " has no label " + label);
  return it - labels_.begin();
}

DfsEncoding DfsEncoding::leading(Eigen::Index count) const {
  if (count < 1 || count > size()) throw std::invalid_argument("leading: count out of range");
  const auto n = static_cast<std::size_t>(count);
  return DfsEncoding(name_ + "[:" + std::to_string(count) + "]",
                     std::vector<std::string>(labels_.begin(), labels_.begin() + n),
                     std::vector<Eigen::Index>(kets_.begin(), kets_.begin() + n), register_size_);
}

std::string bitstring(Eigen::Index index, int register_size) {
  std::string s(static_cast<std::size_t>(register_size), '0');
  for (int q = 0; q < register_size; ++q)
    if ((index >> (register_size - 1 - q)) & 1) s[static_cast<std::size_t>(q)] = '1';
  return s;
}

std::string DfsEncoding::table() const {
  std::string out;
  for (std::size_t k = 0; k < kets_.size(); ++k) out += labels_[k] + ' ' + bitstring(kets_[k], register_size_) + '\n';
  return out;
}

void write_encoding(std::ostream& os, const DfsEncoding& enc) {
  os << "# encoding " << enc.name() << " on " << enc.register_size() << " qubits\n" << enc.table();
}

Operator project(const Operator& op, const DfsEncoding& enc) {
  check_dims(op, enc, "project");
  const Eigen::Index n = enc.size();
  Operator out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = std::conj(op(enc.kets()[i], enc.kets()[j]));
  return out;
}

StateVector embed(const StateVector& logical, const DfsEncoding& enc) {
  if (logical.size() != enc.size()) throw std::invalid_argument("embed: logical state has wrong length");
  StateVector psi = StateVector::Zero(enc.physical_dim());
  for (Eigen::Index i = 0; i < enc.size(); ++i) psi(enc.kets()[i]) = std::conj(logical(i));
  return psi;
}

Operator embed_density(const Operator& logical, const DfsEncoding& enc) {
  if (logical.rows() != enc.size() || logical.cols() != enc.size())
    throw std::invalid_argument("embed_density: logical matrix has wrong dimension");
  Operator rho = Operator::Zero(enc.physical_dim(), enc.physical_dim());
  for (Eigen::Index i = 0; i < enc.size(); ++i)
    for (Eigen::Index j = 0; j < enc.size(); ++j) rho(enc.kets()[i], enc.kets()[j]) = std::conj(logical(i, j));
  return rho;
}

Operator extract_density(const Operator& rho, const DfsEncoding& enc) { return project(rho, enc); }

double leakage(const StateVector& state, const DfsEncoding& enc) {
  if (state.size() != enc.physical_dim()) throw std::invalid_argument("leakage: state has wrong dimension");
  double inside = 0.0;
  for (auto k : enc.kets()) inside += std::norm(state(k));
  return std::max(0.0, 1.0 - inside);
}

DfsEncoding reduce_two_logical(const DfsEncoding& enc6) {
  const DfsEncoding s2 = DfsEncoding::two();
  if (enc6.register_size() != 6 || enc6.labels() != s2.labels() || enc6.kets() != s2.kets())
    throw std::invalid_argument("reduce_two_logical: input encoding is not S2");
  // Keep qubits q3, q4, q6 (in that order) of each six-qubit ket.
  std::vector<Eigen::Index> reduced;
  for (auto k : enc6.kets()) {
    const std::string full = bitstring(k, 6);
    reduced.push_back(ket_from_bits(std::string{full[2], full[3], full[5]}));
  }
  DfsEncoding out("S2/346", enc6.labels(), reduced, 3);
  // Every reduced ket must keep the excitation number of the S2 pattern on the active qubits.
  for (auto k : out.kets())
    if (popcount(k) < 1 || popcount(k) > 2) throw InvariantError("reduce_two_logical: unexpected reduced ket");
  return out;
}

DressedBasis DressedBasis::make(double theta, double phi) {
  DressedBasis d;
  d.theta = theta;
  d.phi = phi;
  const Complex e = std::polar(1.0, phi);
  d.bright = StateVector(2);
  d.bright << std::cos(theta / 2), std::sin(theta / 2) * e;
  d.dark = StateVector(2);
  d.dark << std::sin(theta / 2), -std::cos(theta / 2) * e;
  return d;
}

StateVector DressedBasis::bright_s1() const {
  StateVector v = StateVector::Zero(3);
  v.head(2) = bright;
  return v;
}

StateVector DressedBasis::dark_s1() const {
  StateVector v = StateVector::Zero(3);
  v.head(2) = dark;
  return v;
}

}  // namespace holodfs
