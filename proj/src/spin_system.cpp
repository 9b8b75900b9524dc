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

#include "holodfs/spin_system.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "holodfs/format.hpp"

namespace holodfs {

namespace {

Operator axis_matrix(Axis a) {
  switch (a) {
    case Axis::X: return pauli::x();
    case Axis::Y: return pauli::y();
    case Axis::Z: return pauli::z();
  }
  throw std::logic_error("unreachable axis");
}

void check_register(int register_size) {
  if (register_size < 1 || register_size > 6)
    throw std::invalid_argument("register size must be in 1..6, got " + std::to_string(register_size));
}

PauliTerm two_body(double c, int i, Axis a, int j, Axis b) { return PauliTerm{c, {{i, a}, {j, b}}}; }

// (omega/2)[cos(phi)(X_i X_j + Y_i Y_j) + sign*sin(phi)(X_i Y_j - Y_i X_j)], zero terms dropped.
void append_exchange(HamiltonianSpec& spec, int i, int j, double omega, double phi, double sign) {
  // Snap round-off (e.g. sin(2*pi)) so phases differing by 2*pi yield identical term lists.
  auto snap = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
  const double c = 0.5 * omega * snap(std::cos(phi));
  const double s = 0.5 * omega * sign * snap(std::sin(phi));
  if (c != 0.0) {
    spec.terms.push_back(two_body(c, i, Axis::X, j, Axis::X));
    spec.terms.push_back(two_body(c, i, Axis::Y, j, Axis::Y));
  }
  if (s != 0.0) {
    spec.terms.push_back(two_body(s, i, Axis::X, j, Axis::Y));
    spec.terms.push_back(two_body(-s, i, Axis::Y, j, Axis::X));
  }
}

}  // namespace

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

Axis parse_axis(char c) {
  switch (c) {
    case 'X': case 'x': return Axis::X;
    case 'Y': case 'y': return Axis::Y;
    case 'Z': case 'z': return Axis::Z;
    default: throw std::invalid_argument(std::string("unknown Pauli axis '") + c + "'");
  }
}

void HamiltonianSpec::validate() const {
  check_register(register_size);
  for (const auto& term : terms) {
    if (!std::isfinite(term.coefficient)) throw std::invalid_argument("non-finite Pauli coefficient");
    std::set<int> seen;
    for (const auto& f : term.factors) {
      if (f.qubit < 1 || f.qubit > register_size)
        throw std::invalid_argument("qubit index " + std::to_string(f.qubit) + " outside register of size " +
                                    std::to_string(register_size));
      if (!seen.insert(f.qubit).second)
        throw std::invalid_argument("qubit " + std::to_string(f.qubit) + " repeated within one Pauli term");
    }
  }
}

HamiltonianSpec HamiltonianSpec::scaled(double factor) const {
  HamiltonianSpec out = *this;
  for (auto& t : out.terms) t.coefficient *= factor;
  return out;
}

HamiltonianSpec operator+(HamiltonianSpec a, const HamiltonianSpec& b) {
  if (a.register_size != b.register_size) throw std::invalid_argument("cannot add Hamiltonians on different registers");
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

Operator embed_single(const Operator& op, int qubit, int register_size) {
  check_register(register_size);
  if (qubit < 1 || qubit > register_size) throw std::invalid_argument("embed_single: qubit out of range");
  Operator out = Operator::Identity(1, 1);
  for (int q = 1; q <= register_size; ++q) out = kron(out, q == qubit ? op : pauli::identity());
  return out;
}

Operator realize(const HamiltonianSpec& spec) {
  spec.validate();
  const Eigen::Index dim = Eigen::Index{1} << spec.register_size;
  Operator h = Operator::Zero(dim, dim);
  std::vector<Operator> local(static_cast<std::size_t>(spec.register_size));
  for (const auto& term : spec.terms) {
    std::fill(local.begin(), local.end(), pauli::identity());
    for (const auto& f : term.factors) local[static_cast<std::size_t>(f.qubit - 1)] = axis_matrix(f.axis);
    Operator string = Operator::Identity(1, 1);
    for (const auto& m : local) string = kron(string, m);
    h += term.coefficient * string;
  }
  return h;
}

HamiltonianSpec build_single_qubit_pair_hamiltonian(int i, double omega_i, double phi_i, int register_size,
                                                    int offset) {
  if (i != 1 && i != 2) throw std::invalid_argument("pair drive index must be 1 or 2, got " + std::to_string(i));
  if (offset < 0 || offset + 3 > register_size)
    throw std::invalid_argument("pair drive does not fit in register");
  HamiltonianSpec spec{register_size, {}};
  const double sign = (i == 1) ? 1.0 : -1.0;  // (-1)^{i+1}
  append_exchange(spec, offset + i, offset + i + 1, omega_i, phi_i, sign);
  return spec;
}

HamiltonianSpec build_two_qubit_hamiltonian(double omega3, double omega4, double phi, TwoQubitRegister reg) {
  const bool full = reg == TwoQubitRegister::Full;
  const int q3 = full ? 3 : 1;
  const int q4 = full ? 4 : 2;
  const int q6 = full ? 6 : 3;
  HamiltonianSpec spec{full ? 6 : 3, {}};
  // sin(phi)(Y3X4 - X3Y4) = -sin(phi)(X3Y4 - Y3X4)
  append_exchange(spec, q3, q4, omega3, phi, -1.0);
  append_exchange(spec, q3, q6, omega4, 0.0, 1.0);
  return spec;
}

NmrSystem::NmrSystem(std::array<std::string, 3> spins, std::map<std::pair<int, int>, double> couplings,
                     std::array<double, 3> chemical_shifts)
    : spins_(std::move(spins)), shifts_(chemical_shifts) {
  for (const auto& [pair, j] : couplings) set_coupling(pair.first, pair.second, j);
}

void NmrSystem::set_coupling(int i, int j, double hz) {
  if (i == j || i < 1 || j < 1 || i > 3 || j > 3) throw std::invalid_argument("coupling indices must be distinct in 1..3");
  if (!std::isfinite(hz)) throw std::invalid_argument("coupling must be finite");
  couplings_[{std::min(i, j), std::max(i, j)}] = hz;
}

bool NmrSystem::has_coupling(int i, int j) const {
  return couplings_.count({std::min(i, j), std::max(i, j)}) > 0;
}

double NmrSystem::coupling(int i, int j) const {
  auto it = couplings_.find({std::min(i, j), std::max(i, j)});
  if (it == couplings_.end())
    throw std::invalid_argument("missing coupling J_" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j)));
  return it->second;
}

NmrSystem NmrSystem::permuted(const std::array<int, 3>& order) const {
  NmrSystem out;
  for (int k = 0; k < 3; ++k) {
    out.spins_[k] = spins_[order[k] - 1];
    out.shifts_[k] = shifts_[order[k] - 1];
  }
  for (int a = 1; a <= 3; ++a)
    for (int b = a + 1; b <= 3; ++b)
      if (has_coupling(order[a - 1], order[b - 1])) out.set_coupling(a, b, coupling(order[a - 1], order[b - 1]));
  return out;
}

NmrSystem NmrSystem::diethyl_fluoromalonate() {
  return NmrSystem({"1H", "13C", "19F"}, {{{1, 2}, 161.3}, {{1, 3}, 47.6}, {{2, 3}, 192.2}});
}

HamiltonianSpec build_nmr_hamiltonian(const NmrSystem& sys) {
  HamiltonianSpec spec{3, {}};
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      const double jij = sys.coupling(i, j);
      if (jij != 0.0) spec.terms.push_back(two_body(0.5 * kPi * jij, i, Axis::Z, j, Axis::Z));
    }
  return spec;
}

Operator excitation_number(int register_size) {
  check_register(register_size);
  const Eigen::Index dim = Eigen::Index{1} << register_size;
  Operator n = Operator::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    int ones = 0;
    for (int b = 0; b < register_size; ++b) ones += static_cast<int>((k >> b) & 1);
    n(k, k) = static_cast<double>(ones);
  }
  return n;
}

DriveAmplitudes split_amplitude(double omega, double theta) {
  return {omega * std::cos(theta / 2), omega * std::sin(theta / 2)};
}

std::pair<double, double> merge_amplitudes(double omega1, double omega2) {
  return {std::hypot(omega1, omega2), 2.0 * std::atan2(omega2, omega1)};
}

std::string format_term(const PauliTerm& term) {
  std::string out = format_real(term.coefficient);
  for (const auto& f : term.factors) {
    out += ' ';
    out += axis_char(f.axis);
    out += '@';
    out += std::to_string(f.qubit);
  }
  return out;
}

PauliTerm parse_term(const std::string& line) {
  std::istringstream is(line);
  PauliTerm term;
  if (!(is >> term.coefficient)) throw std::invalid_argument("malformed term line: '" + line + "'");
  std::string tok;
  while (is >> tok) {
    const auto at = tok.find('@');
    if (at != 1 || tok.size() < 3) throw std::invalid_argument("malformed Pauli factor '" + tok + "'");
    PauliFactor f;
    f.axis = parse_axis(tok[0]);
    try {
      std::size_t used = 0;
      f.qubit = std::stoi(tok.substr(2), &used);
      if (used != tok.size() - 2) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed qubit index in '" + tok + "'");
    }
    term.factors.push_back(f);
  }
  return term;
}

void write_hamiltonian(std::ostream& os, const HamiltonianSpec& spec) {
  os << "register " << spec.register_size << '\n';
  for (const auto& t : spec.terms) os << format_term(t) << '\n';
}

HamiltonianSpec read_hamiltonian(std::istream& is) {
  HamiltonianSpec spec{0, {}};
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "register") {
      if (!(ls >> spec.register_size)) throw std::invalid_argument("malformed register line");
      continue;
    }
    if (spec.register_size == 0) throw std::invalid_argument("term list must start with 'register N'");
    spec.terms.push_back(parse_term(line));
  }
  if (spec.register_size == 0) throw std::invalid_argument("missing 'register N' header");
  spec.validate();
  return spec;
}

}  // namespace holodfs
