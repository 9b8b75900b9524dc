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

#include "holodfs/nmr_compiler.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "holodfs/format.hpp"

namespace holodfs {

namespace {

constexpr int kNmrQubits = 3;

Operator pauli_of(Axis a) {
  switch (a) {
    case Axis::X: return pauli::x();
    case Axis::Y: return pauli::y();
    case Axis::Z: return pauli::z();
  }
  throw std::invalid_argument("unknown axis");
}

double sign(double v) { return v < 0.0 ? -1.0 : 1.0; }

void push_rot(std::vector<NmrInstruction>& out, int q, Axis axis, double angle) {
  const double a = normalize_angle(angle);
  if (a == 0.0 || a == 2 * kPi) return;
  out.push_back(NmrInstruction::rot(q, axis, a));
}

std::vector<int> spectators(int i, int j) {
  std::vector<int> out;
  for (int k = 1; k <= kNmrQubits; ++k)
    if (k != i && k != j) out.push_back(k);
  return out;
}

// e^{-i s H} for one exchange drive, H = (omega/2)(X_i X'_j + Y_i Y'_j) with
// X'_j, Y'_j rotated by phi about z. The two products commute; each becomes
// a basis change around a ZZ echo window.
void lower_slice(std::vector<NmrInstruction>& out, const PairDrive& d, double s, const NmrSystem& sys) {
  const double a = 0.5 * d.omega * s;
  if (a == 0.0) return;
  const double j_hz = sys.coupling(d.i, d.j);
  if (j_hz == 0.0)
    throw std::invalid_argument("no scalar coupling between qubits " + std::to_string(d.i) + "-" +
                                std::to_string(d.j) + " (J = 0); cannot realize the drive on this pair");
  const double sigma = sign(a) * sign(j_hz);
  const double t = std::abs(a) / (kPi * std::abs(j_hz));
  const auto echo = spectators(d.i, d.j);
  const double h = kPi / 2;

  // X_i X'_j
  push_rot(out, d.j, Axis::Z, -d.phi);
  push_rot(out, d.j, Axis::Y, -h);
  push_rot(out, d.i, Axis::Y, -sigma * h);
  out.push_back(NmrInstruction::free(t, d.i, d.j, echo));
  push_rot(out, d.j, Axis::Y, h);
  push_rot(out, d.i, Axis::Y, sigma * h);
  push_rot(out, d.j, Axis::Z, d.phi);

  // Y_i Y'_j
  push_rot(out, d.j, Axis::Z, -d.phi);
  push_rot(out, d.j, Axis::X, h);
  push_rot(out, d.i, Axis::X, sigma * h);
  out.push_back(NmrInstruction::free(t, d.i, d.j, echo));
  push_rot(out, d.j, Axis::X, -h);
  push_rot(out, d.i, Axis::X, -sigma * h);
  push_rot(out, d.j, Axis::Z, d.phi);
}

}  // namespace

NmrInstruction NmrInstruction::rot(int qubit, Axis axis, double angle) {
  NmrInstruction r;
  r.kind = Kind::Rot;
  r.qubit = qubit;
  r.axis = axis;
  r.angle = angle;
  return r;
}

NmrInstruction NmrInstruction::free(double duration, int i, int j, std::vector<int> echo) {
  NmrInstruction r;
  r.kind = Kind::Free;
  r.duration = duration;
  r.i = i;
  r.j = j;
  r.echo = std::move(echo);
  return r;
}

double normalize_angle(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("rotation angle is not finite");
  double a = std::fmod(angle, 2 * kPi);
  if (a <= -2 * kPi) a += 2 * kPi;
  if (a == -2 * kPi) a = 2 * kPi;
  return a;
}

CompiledProgram lower_to_nmr(const std::vector<TrotterPlan>& plans, const NmrSystem& sys) {
  if (plans.empty()) throw std::invalid_argument("lower_to_nmr: no plans");
  CompiledProgram prog;
  for (const auto& plan : plans) {
    if (plan.register_size != kNmrQubits)
      throw std::invalid_argument("lower_to_nmr: plans must act on the three-spin register");
    for (int r = 0; r < plan.repetitions; ++r)
      for (const auto& step : plan.inner_sequence) {
        if (step.duration == 0.0) continue;
        lower_slice(prog.instructions, plan.parts.at(static_cast<std::size_t>(step.part)), step.duration, sys);
      }
  }
  prog.declared_target = evaluate(plans);
  prog.achieved_fidelity = verify(prog, sys, prog.declared_target);
  return prog;
}

CompiledProgram lower_to_nmr(const TrotterPlan& plan, const NmrSystem& sys) {
  return lower_to_nmr(std::vector<TrotterPlan>{plan}, sys);
}

Operator instruction_unitary(const NmrInstruction& instr, const NmrSystem& sys) {
  if (instr.kind == NmrInstruction::Kind::Rot) {
    if (instr.qubit < 1 || instr.qubit > kNmrQubits) throw std::invalid_argument("ROT qubit out of range");
    return embed_single(matrix_exp(pauli_of(instr.axis), instr.angle / 2), instr.qubit, kNmrQubits);
  }
  if (!(instr.duration >= 0.0)) throw std::invalid_argument("FREE duration must be nonnegative");
  const Operator free = matrix_exp(realize(build_nmr_hamiltonian(sys)), instr.duration);
  Operator flip = Operator::Identity(8, 8);
  Operator unflip = Operator::Identity(8, 8);
  for (int k : instr.echo) {
    if (k < 1 || k > kNmrQubits) throw std::invalid_argument("FREE echo qubit out of range");
    flip = embed_single(matrix_exp(pauli::x(), kPi / 2), k, kNmrQubits) * flip;
    unflip = embed_single(matrix_exp(pauli::x(), -kPi / 2), k, kNmrQubits) * unflip;
  }
  return unflip * free * flip * free;
}

Operator program_unitary(const std::vector<NmrInstruction>& program, const NmrSystem& sys) {
  Operator u = Operator::Identity(8, 8);
  for (const auto& instr : program) u = instruction_unitary(instr, sys) * u;
  return u;
}

double verify(const CompiledProgram& program, const NmrSystem& sys, const Operator& target) {
  return gate_fidelity(target, program_unitary(program.instructions, sys));
}

double spectator_refocus_defect(const std::vector<NmrInstruction>& program, const NmrSystem& sys) {
  double worst = 0.0;
  for (const auto& instr : program) {
    if (instr.kind != NmrInstruction::Kind::Free) continue;
    HamiltonianSpec zz{kNmrQubits, {{kPi * sys.coupling(instr.i, instr.j), {{instr.i, Axis::Z}, {instr.j, Axis::Z}}}}};
    const Operator ideal = matrix_exp(realize(zz), instr.duration);
    worst = std::max(worst, phase_aligned_distance(instruction_unitary(instr, sys), ideal));
  }
  return worst;
}

double total_free_time(const std::vector<NmrInstruction>& program) {
  double t = 0.0;
  for (const auto& instr : program)
    if (instr.kind == NmrInstruction::Kind::Free) t += 2 * instr.duration;
  return t;
}

std::string format_instruction(const NmrInstruction& instr) {
  std::ostringstream os;
  if (instr.kind == NmrInstruction::Kind::Rot) {
    os << "ROT " << instr.qubit << ' ' << static_cast<char>(std::tolower(axis_char(instr.axis))) << ' '
       << format_real(instr.angle);
    return os.str();
  }
  os << "FREE " << format_real(instr.duration) << ' ' << instr.i << '-' << instr.j << " echo:";
  if (instr.echo.empty()) os << '-';
  for (std::size_t k = 0; k < instr.echo.size(); ++k) os << (k ? "," : "") << instr.echo[k];
  return os.str();
}

NmrInstruction parse_instruction(const std::string& line) {
  std::istringstream is(line);
  std::string op;
  is >> op;
  if (op == "ROT") {
    int q = 0;
    std::string axis;
    double angle = 0.0;
    if (!(is >> q >> axis >> angle) || axis.size() != 1)
      throw std::invalid_argument("malformed ROT line: " + line);
    return NmrInstruction::rot(q, parse_axis(static_cast<char>(std::toupper(axis[0]))), angle);
  }
  if (op == "FREE") {
    double t = 0.0;
    std::string pair, echo;
    if (!(is >> t >> pair >> echo)) throw std::invalid_argument("malformed FREE line: " + line);
    const auto dash = pair.find('-');
    if (dash == std::string::npos || echo.rfind("echo:", 0) != 0)
      throw std::invalid_argument("malformed FREE line: " + line);
    NmrInstruction r = NmrInstruction::free(t, std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)), {});
    const std::string list = echo.substr(5);
    if (list != "-") {
      std::istringstream ls(list);
      std::string tok;
      while (std::getline(ls, tok, ',')) r.echo.push_back(std::stoi(tok));
    }
    return r;
  }
  throw std::invalid_argument("unknown instruction: " + line);
}

void write_program(std::ostream& os, const std::vector<NmrInstruction>& program) {
  for (const auto& instr : program) os << format_instruction(instr) << '\n';
}

std::vector<NmrInstruction> read_program(std::istream& is) {
  std::vector<NmrInstruction> out;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_instruction(line));
  }
  return out;
}

}  // namespace holodfs
