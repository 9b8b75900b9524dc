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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "holodfs/holonomic.hpp"
#include "holodfs/qpt.hpp"
#include "support/generators.hpp"

namespace holodfs {
namespace {

using testing::Gen;

// Oracle: expand U over {I, X, -iY, Z} (tensor powers) and take c c^dagger.
Operator chi_oracle(const Operator& u) {
  const std::vector<Operator> e1{pauli::identity(), pauli::x(), Operator(-kI * pauli::y()), pauli::z()};
  std::vector<Operator> basis;
  if (u.rows() == 2) {
    basis = e1;
  } else {
    for (const auto& a : e1)
      for (const auto& b : e1) basis.push_back(kron(a, b));
  }
  Eigen::VectorXcd c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t m = 0; m < basis.size(); ++m)
    c(static_cast<Eigen::Index>(m)) = (basis[m].adjoint() * u).trace() / static_cast<double>(u.rows());
  return c * c.adjoint();
}

// Physical unitary acting as `u` on the leading kets of `enc` and as the
// identity elsewhere. The encoding frame is conjugated.
Operator lift(const Operator& u, const DfsEncoding& enc) {
  Operator p = Operator::Identity(enc.physical_dim(), enc.physical_dim());
  const auto& k = enc.kets();
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) p(k[i], k[j]) = std::conj(u(i, j));
  return p;
}

const DfsEncoding kS1 = DfsEncoding::single();
const DfsEncoding kS2r = reduce_two_logical(DfsEncoding::two());

TEST(Chi, IdentityChannel) {
  const ChiMatrix chi = run_qpt_single(unitary_channel(Operator::Identity(8, 8)), kS1);
  Operator want = Operator::Zero(4, 4);
  want(0, 0) = 1.0;
  EXPECT_LT(frobenius_distance(chi.entries, want), 1e-14);
  EXPECT_FALSE(chi.flags.any());
  EXPECT_EQ(chi.flags.describe(), "ok");
  EXPECT_EQ(chi.basis.labels, (std::vector<std::string>{"I", "X", "-iY", "Z"}));
}

TEST(Chi, NotGateFromSchedule) {
  const Operator u = simulate(synthesize_schedule_single(SingleGateSpec::not_gate()));
  const ChiMatrix chi = run_qpt_single(unitary_channel(u), kS1);
  Operator want = Operator::Zero(4, 4);
  want(1, 1) = 1.0;
  EXPECT_LT(frobenius_distance(chi.entries, want), 1e-12);
  EXPECT_FALSE(chi.flags.any());
}

TEST(Chi, HadamardFromSchedule) {
  const Operator u = simulate(synthesize_schedule_single(SingleGateSpec::hadamard()));
  const ChiMatrix chi = run_qpt_single(unitary_channel(u), kS1);
  Operator want = Operator::Zero(4, 4);
  want(1, 1) = want(1, 3) = want(3, 1) = want(3, 3) = 0.5;
  EXPECT_LT(frobenius_distance(chi.entries, want), 1e-12);
}

TEST(Chi, TwoQubitGateMatchesExpansion) {
  const TwoGateSpec spec = TwoGateSpec::make(kPi / 4, 0.0);
  const ChiMatrix chi = run_qpt_two(unitary_channel(simulate(synthesize_two(spec))), kS2r);
  EXPECT_EQ(chi.basis.labels.size(), 16u);
  EXPECT_EQ(chi.basis.labels[6], "X,-iY");
  EXPECT_LT(frobenius_distance(chi.entries, chi_oracle(closed_form_two(spec))), 1e-11);
  EXPECT_LT(frobenius_distance(chi_of_unitary(closed_form_two(spec)).entries, chi_oracle(closed_form_two(spec))), 1e-14);
  EXPECT_FALSE(chi.flags.any());
}

TEST(Chi, RandomUnitariesRoundTrip) {
  Gen g(81);
  for (int trial = 0; trial < 50; ++trial) {
    const Operator u1 = g.unitary(2);
    const ChiMatrix c1 = run_qpt_single(unitary_channel(lift(u1, kS1)), kS1);
    EXPECT_LT(frobenius_distance(c1.entries, chi_oracle(u1)), 1e-12);
    EXPECT_LT(gate_distance(c1, chi_of_unitary(u1)), 1e-12);
    const Operator u2 = g.unitary(4);
    const ChiMatrix c2 = run_qpt_two(unitary_channel(lift(u2, kS2r)), kS2r);
    EXPECT_LT(frobenius_distance(c2.entries, chi_oracle(u2)), 1e-12);
    EXPECT_FALSE(c2.flags.any()) << c2.flags.describe();
  }
}

TEST(Chi, UnitaryChannelHasRankOne) {
  Gen g(82);
  for (int trial = 0; trial < 10; ++trial) {
    const ChiMatrix chi = run_qpt_two(unitary_channel(lift(g.unitary(4), kS2r)), kS2r);
    Eigen::SelfAdjointEigenSolver<Operator> es(chi.entries);
    const auto ev = es.eigenvalues();
    EXPECT_NEAR(ev(ev.size() - 1), 1.0, 1e-12);
    EXPECT_LT(ev.head(ev.size() - 1).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Chi, MixtureIsLinear) {
  Gen g(83);
  for (int trial = 0; trial < 10; ++trial) {
    const Operator a = g.unitary(2), b = g.unitary(2);
    const double p = g.uniform();
    const Operator pa = lift(a, kS1), pb = lift(b, kS1);
    const Channel mix = [&](const Operator& rho) {
      return Operator(p * pa * rho * pa.adjoint() + (1 - p) * pb * rho * pb.adjoint());
    };
    const ChiMatrix chi = run_qpt_single(mix, kS1);
    EXPECT_LT(frobenius_distance(chi.entries, Operator(p * chi_oracle(a) + (1 - p) * chi_oracle(b))), 1e-12);
    EXPECT_FALSE(chi.flags.any());
  }
}

TEST(Chi, ApplyReproducesChannel) {
  Gen g(84);
  const Operator u = g.unitary(2);
  const ChiMatrix chi = chi_of_unitary(u);
  const Operator rho = g.density(2);
  EXPECT_LT(frobenius_distance(apply_chi(chi, rho), Operator(u * rho * u.adjoint())), 1e-13);
}

TEST(Distance, Examples) {
  EXPECT_EQ(gate_distance(chi_of_unitary(pauli::x()), chi_of_unitary(pauli::x())), 0.0);
  // Orthogonal rank-one projectors.
  EXPECT_NEAR(gate_distance(chi_of_unitary(pauli::x()), chi_of_unitary(pauli::z())), std::sqrt(2.0), 1e-15);
  // Global phase is invisible.
  EXPECT_NEAR(gate_distance(chi_of_unitary(Operator(-pauli::x())), chi_of_unitary(pauli::x())), 0.0, 1e-15);
}

TEST(Distance, RejectsBasisMismatch) {
  EXPECT_THROW(gate_distance(chi_of_unitary(pauli::x()), chi_of_unitary(Operator(Operator::Identity(4, 4)))),
               std::invalid_argument);
}

TEST(Flags, LeakingChannel) {
  // X on qubit 1 sends |100> out of the subspace.
  const ChiMatrix chi = run_qpt_single(unitary_channel(embed_single(pauli::x(), 1, 3)), kS1);
  EXPECT_TRUE(chi.flags.leakage);
  EXPECT_GT(chi.flags.max_leakage, 0.99);
  EXPECT_NE(chi.flags.describe().find("leakage"), std::string::npos);
}

TEST(Flags, NonPositiveOutput) {
  const Channel bad = [](const Operator& rho) {
    Operator out = rho;
    out(4, 4) -= 0.2;
    out(1, 1) += 0.2;
    return out;
  };
  const ChiMatrix chi = run_qpt_single(bad, kS1);
  EXPECT_TRUE(chi.flags.output_not_positive || chi.flags.chi_not_positive);
}

TEST(Options, RejectsWrongInputCount) {
  QptOptions opts;
  opts.prepared_inputs = {Operator(Operator::Identity(8, 8))};
  EXPECT_THROW(run_qpt_single(unitary_channel(Operator::Identity(8, 8)), kS1, opts), std::invalid_argument);
}

TEST(Options, RecordsOptional) {
  QptOptions opts;
  opts.keep_records = false;
  EXPECT_TRUE(run_qpt_single(unitary_channel(Operator::Identity(8, 8)), kS1, opts).records.empty());
  const ChiMatrix with = run_qpt_single(unitary_channel(Operator::Identity(8, 8)), kS1);
  ASSERT_EQ(with.records.size(), 4u);
  EXPECT_EQ(with.records[0].label, qpt_input_labels(1)[0]);
}

TEST(Inputs, LogicalInputsAreStates) {
  for (int n : {1, 2}) {
    const auto in = qpt_logical_inputs(n);
    EXPECT_EQ(in.size(), n == 1 ? 4u : 16u);
    for (const auto& rho : in) {
      EXPECT_NEAR(rho.trace().real(), 1.0, 1e-15);
      EXPECT_LE(hermiticity_defect(rho), 1e-15);
    }
  }
  EXPECT_THROW(qpt_logical_inputs(3), std::invalid_argument);
}

TEST(Json, Shape) {
  const ChiMatrix chi = run_qpt_single(unitary_channel(Operator::Identity(8, 8)), kS1);
  const nlohmann::json j = to_json(chi, true);
  EXPECT_EQ(j["basis"].size(), 4u);
  EXPECT_EQ(j["entries"].size(), 4u);
  EXPECT_NEAR(j["entries"][0][0][0].get<double>(), 1.0, 1e-15);
  EXPECT_FALSE(j["flags"]["leakage"].get<bool>());
  EXPECT_EQ(j["records"].size(), 4u);
  EXPECT_FALSE(to_json(chi).contains("records"));
  EXPECT_LT(frobenius_distance(operator_from_json(j["entries"]), chi.entries), 1e-15);
  EXPECT_THROW(operator_from_json(nlohmann::json::array({{1, 2}})), std::invalid_argument);
}

}  // namespace
}  // namespace holodfs
