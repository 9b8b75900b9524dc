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

#ifndef HOLODFS_NMR_COMPILER_HPP_
#define HOLODFS_NMR_COMPILER_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "holodfs/operator.hpp"
#include "holodfs/spin_system.hpp"
#include "holodfs/trotter.hpp"

namespace holodfs {

/// ROT: exp(-i angle sigma_axis / 2) on one qubit.
/// FREE: free evolution under the coupling Hamiltonian for `duration`, a pi
/// pulse about x on every echo qubit, another `duration`, then the inverse
/// pulse. Net effect exp(-i pi J_ij duration Z_i Z_j).
struct NmrInstruction {
  enum class Kind { Rot, Free };

  Kind kind = Kind::Rot;
  int qubit = 1;
  Axis axis = Axis::X;
  double angle = 0.0;
  double duration = 0.0;
  int i = 1;
  int j = 2;
  std::vector<int> echo;

  static NmrInstruction rot(int qubit, Axis axis, double angle);
  static NmrInstruction free(double duration, int i, int j, std::vector<int> echo);
};

struct CompiledProgram {
  std::vector<NmrInstruction> instructions;  ///< time order
  Operator declared_target;                  ///< unitary of the Trotter plans
  double achieved_fidelity = 0.0;
};

/// Angle wrapped into (-2pi, 2pi].
double normalize_angle(double angle);

/// Lower Trotter plans on a three-spin register to pulses and echo windows.
/// Throws std::invalid_argument naming the pair if a needed coupling is zero.
CompiledProgram lower_to_nmr(const std::vector<TrotterPlan>& plans, const NmrSystem& sys);
CompiledProgram lower_to_nmr(const TrotterPlan& plan, const NmrSystem& sys);

Operator instruction_unitary(const NmrInstruction& instr, const NmrSystem& sys);
Operator program_unitary(const std::vector<NmrInstruction>& program, const NmrSystem& sys);

/// |Tr(target^dagger U_program)| / d.
double verify(const CompiledProgram& program, const NmrSystem& sys, const Operator& target);

/// Largest deviation of every FREE window from exp(-i pi J t Z_i Z_j): a
/// nonzero value means some spectator coupling is not refocused.
double spectator_refocus_defect(const std::vector<NmrInstruction>& program, const NmrSystem& sys);

/// Total time spent in FREE windows, counting both halves.
double total_free_time(const std::vector<NmrInstruction>& program);

// Text: one instruction per line, "ROT q axis angle_rad" or
// "FREE duration i-j echo:k[,k]" ("echo:-" for none); '#' starts a comment.
std::string format_instruction(const NmrInstruction& instr);
NmrInstruction parse_instruction(const std::string& line);
void write_program(std::ostream& os, const std::vector<NmrInstruction>& program);
std::vector<NmrInstruction> read_program(std::istream& is);

}  // namespace holodfs

#endif  // HOLODFS_NMR_COMPILER_HPP_
