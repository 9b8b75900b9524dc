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

#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "holodfs/nmr_compiler.hpp"
#include "support/generators.hpp"

namespace holodfs {
namespace {

using testing::Gen;

const NmrSystem kSys = NmrSystem::diethyl_fluoromalonate();

std::vector<double> window_durations(const CompiledProgram& p, int i, int j) {
  std::vector<double> out;
  for (const auto& instr : p.instructions)
    if (instr.kind == NmrInstruction::Kind::Free && instr.i == i && instr.j == j) out.push_back(instr.duration);
  return out;
}

TEST(FreeWindow, RefocusedCouplingOnly) {
  // a = pi/4 on 1-2: the window must equal exp(-i pi/4 Z1 Z2) with the
  // couplings to qubit 3 echoed away.
  const double t = 0.25 / kSys.coupling(1, 2);
  const Operator u = instruction_unitary(NmrInstruction::free(t, 1, 2, {3}), kSys);
  const Operator zz = kron(kron(pauli::z(), pauli::z()), pauli::identity());
  const Operator oracle = std::cos(kPi / 4) * Operator(Operator::Identity(8, 8)) - kI * std::sin(kPi / 4) * zz;
  EXPECT_LT(phase_aligned_distance(u, oracle), 1e-12);
}

TEST(FreeWindow, WithoutEchoSpectatorsLeakIn) {
  const double t = 0.25 / kSys.coupling(1, 2);
  const Operator echoed = instruction_unitary(NmrInstruction::free(t, 1, 2, {3}), kSys);
  const Operator bare = instruction_unitary(NmrInstruction::free(t, 1, 2, {}), kSys);
  EXPECT_GT(phase_aligned_distance(echoed, bare), 0.1);
}

TEST(Lowering, SingleDriveSliceIsExact) {
  Gen g(71);
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = g.integer(0, 1) ? 0.0 : kPi;  // one drive only: pair 1-2 or 2-3
    const SingleGateSpec spec = SingleGateSpec::make(g.uniform(0, 2 * kPi), theta, g.uniform(-kPi, kPi));
    const auto plans = trotterize(synthesize_schedule_single(spec));
    const CompiledProgram p = lower_to_nmr(plans, kSys);
    const Operator exact = simulate(synthesize_schedule_single(spec));
    EXPECT_NEAR(gate_fidelity(exact, program_unitary(p.instructions, kSys)), 1.0, 1e-12);
  }
}

TEST(Lowering, NegativeCouplingHandled) {
  NmrSystem flipped = kSys;
  flipped.set_coupling(1, 2, -kSys.coupling(1, 2));
  flipped.set_coupling(2, 3, -kSys.coupling(2, 3));
  const auto plans = trotterize(synthesize_schedule_single(SingleGateSpec::make(1.3, 1.1, -0.6)));
  EXPECT_NEAR(lower_to_nmr(plans, flipped).achieved_fidelity, 1.0, 1e-12);
}

TEST(Lowering, HadamardWindows) {
  const CompiledProgram p = lower_to_nmr(trotterize(synthesize_schedule_single(SingleGateSpec::hadamard())), kSys);
  const double tau1 = std::cos(kPi / 8) / (12 * 161.3);
  const double tau2 = std::sin(kPi / 8) / (24 * 192.2);
  const auto w12 = window_durations(p, 1, 2);
  const auto w23 = window_durations(p, 2, 3);
  // 2 segments x 3 repetitions x (XX', YY'), twice as many half-steps on 2-3.
  EXPECT_EQ(w12.size(), 12u);
  EXPECT_EQ(w23.size(), 24u);
  for (double t : w12) EXPECT_NEAR(t, tau1, 1e-16);
  for (double t : w23) EXPECT_NEAR(t, tau2, 1e-16);
  EXPECT_EQ(p.instructions.size(), 180u);
  EXPECT_NEAR(total_free_time(p.instructions), 2 * (12 * tau1 + 24 * tau2), 1e-15);
  EXPECT_NEAR(p.achieved_fidelity, 1.0, 1e-12);
  EXPECT_LE(spectator_refocus_defect(p.instructions, kSys), 1e-10);
}

TEST(Lowering, ZeroDriveSlicesOmitted) {
  const CompiledProgram p = lower_to_nmr(trotterize(synthesize_schedule_single(SingleGateSpec::make(kPi, 0.0, 0.0))), kSys);
  EXPECT_TRUE(window_durations(p, 2, 3).empty());
  EXPECT_EQ(window_durations(p, 1, 2).size(), 12u);
}

TEST(Lowering, NoZeroOrFullTurnRotations) {
  const CompiledProgram p = lower_to_nmr(trotterize(synthesize_schedule_single(SingleGateSpec::make(0.9, 0.7, 0.0))), kSys);
  for (const auto& instr : p.instructions)
    if (instr.kind == NmrInstruction::Kind::Rot) {
      EXPECT_NE(instr.angle, 0.0);
      EXPECT_NE(instr.angle, 2 * kPi);
      EXPECT_GT(instr.angle, -2 * kPi);
      EXPECT_LE(instr.angle, 2 * kPi);
    }
}

TEST(Lowering, ZeroCouplingNamesPair) {
  NmrSystem dead = kSys;
  dead.set_coupling(2, 3, 0.0);
  const auto plans = trotterize(synthesize_schedule_single(SingleGateSpec::hadamard()));
  try {
    lower_to_nmr(plans, dead);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("2-3"), std::string::npos);
  }
}

TEST(Lowering, RandomGatesCompileFaithfully) {
  Gen g(72);
  for (int trial = 0; trial < 10; ++trial) {
    const SingleGateSpec spec = SingleGateSpec::make(g.uniform(0, 2 * kPi), g.uniform(0, kPi), g.uniform(-kPi, kPi));
    const CompiledProgram p = lower_to_nmr(trotterize(synthesize_schedule_single(spec)), kSys);
    EXPECT_NEAR(p.achieved_fidelity, 1.0, 1e-11);
    EXPECT_LE(spectator_refocus_defect(p.instructions, kSys), 1e-10);
  }
}

TEST(Verify, EmptyProgramIsIdentity) {
  CompiledProgram p;
  EXPECT_NEAR(verify(p, kSys, Operator(Operator::Identity(8, 8))), 1.0, 1e-15);
}

TEST(Verify, CorruptedAngleDetected) {
  CompiledProgram p = lower_to_nmr(trotterize(synthesize_schedule_single(SingleGateSpec::not_gate())), kSys);
  for (auto& instr : p.instructions)
    if (instr.kind == NmrInstruction::Kind::Rot) {
      instr.angle += 0.1;
      break;
    }
  EXPECT_LT(verify(p, kSys, p.declared_target), 0.999);
}

TEST(NormalizeAngle, Range) {
  EXPECT_EQ(normalize_angle(0.0), 0.0);
  EXPECT_NEAR(normalize_angle(5 * kPi), kPi, 1e-14);
  EXPECT_NEAR(normalize_angle(-5 * kPi), -kPi, 1e-14);
  EXPECT_THROW(normalize_angle(std::nan("")), std::invalid_argument);
  Gen g(73);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = normalize_angle(g.uniform(-40, 40));
    EXPECT_GT(a, -2 * kPi);
    EXPECT_LE(a, 2 * kPi);
  }
}

TEST(ProgramText, RoundTrip) {
  const CompiledProgram p = lower_to_nmr(trotterize(synthesize_schedule_single(SingleGateSpec::hadamard())), kSys);
  std::stringstream ss;
  ss << "# hadamard\n";
  write_program(ss, p.instructions);
  const auto back = read_program(ss);
  ASSERT_EQ(back.size(), p.instructions.size());
  EXPECT_LT(frobenius_distance(program_unitary(back, kSys), program_unitary(p.instructions, kSys)), 1e-9);
  EXPECT_EQ(format_instruction(NmrInstruction::free(0.5, 1, 3, {})), "FREE 0.5 1-3 echo:-");
  EXPECT_EQ(format_instruction(NmrInstruction::rot(2, Axis::Z, -1.5)), "ROT 2 z -1.5");
}

TEST(ProgramText, RejectsMalformed) {
  EXPECT_THROW(parse_instruction("ROT 1 x"), std::invalid_argument);
  EXPECT_THROW(parse_instruction("FREE 0.1 12 echo:3"), std::invalid_argument);
  EXPECT_THROW(parse_instruction("WAIT 1"), std::invalid_argument);
  EXPECT_THROW(instruction_unitary(NmrInstruction::rot(4, Axis::X, 1.0), kSys), std::invalid_argument);
}

TEST(TwoQubitGate, CompilesOnPermutedSystem) {
  // U_T acts on (q3, q4, q6); qubit 3 is the shared spin, mapped to the molecule's centre.
  const NmrSystem sys = kSys.permuted({2, 1, 3});
  const auto plans = trotterize(synthesize_two(TwoGateSpec::make(kPi / 4, 0.0)));
  const CompiledProgram p = lower_to_nmr(plans, sys);
  EXPECT_NEAR(p.achieved_fidelity, 1.0, 1e-11);
  EXPECT_LE(spectator_refocus_defect(p.instructions, sys), 1e-10);
}

}  // namespace
}  // namespace holodfs
