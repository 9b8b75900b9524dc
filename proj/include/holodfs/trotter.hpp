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

#ifndef HOLODFS_TROTTER_HPP_
#define HOLODFS_TROTTER_HPP_

#include <array>
#include <vector>

#include "holodfs/holonomic.hpp"
#include "holodfs/operator.hpp"
#include "holodfs/spin_system.hpp"

namespace holodfs {

/// Exchange drive on qubits i < j:
///   (omega/2)[cos(phi)(X_i X_j + Y_i Y_j) + sin(phi)(X_i Y_j - Y_i X_j)].
struct PairDrive {
  int i = 1;
  int j = 2;
  double omega = 0.0;
  double phi = 0.0;

  HamiltonianSpec to_spec(int register_size) const;
};

/// Split a Hamiltonian into exchange drives, one per qubit pair, ordered by
/// (i, j). Throws std::invalid_argument if any term is not of XX+YY / XY-YX
/// form.
std::vector<PairDrive> decompose_pair_drives(const HamiltonianSpec& h);

struct TrotterStep {
  int part = 0;  ///< 0 = H1, 1 = H2
  double duration = 0.0;
};

/// Symmetric splitting (e^{-i H2 t/2r} e^{-i H1 t/r} e^{-i H2 t/2r})^r of one
/// schedule segment of duration t.
struct TrotterPlan {
  int register_size = 3;
  std::array<PairDrive, 2> parts{};
  std::vector<TrotterStep> inner_sequence;  ///< time order within one repetition
  int repetitions = 3;
  Segment target;
};

/// Plan for one segment. The segment must be a sum of at most two exchange
/// drives; a missing second drive is recorded with zero amplitude.
TrotterPlan trotterize(const Segment& segment, int repetitions = 3);

/// One plan per schedule segment.
std::vector<TrotterPlan> trotterize(const Schedule& schedule, int repetitions = 3);

/// Unitary of the plan's ordered product.
Operator evaluate(const TrotterPlan& plan);
Operator evaluate(const std::vector<TrotterPlan>& plans);

/// |Tr(U_exact^dagger U_plan)| / d against e^{-i H t} of the plan's segment.
double trotter_fidelity(const TrotterPlan& plan);

}  // namespace holodfs

#endif  // HOLODFS_TROTTER_HPP_
