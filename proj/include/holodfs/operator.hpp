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

#ifndef HOLODFS_OPERATOR_HPP_
#define HOLODFS_OPERATOR_HPP_

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace holodfs {

/// Dense complex operator templated on the real scalar type.
template <typename Real>
using Op = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using Ket = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using Operator = Op<double>;
using StateVector = Ket<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Numerical slack used across the library. Every tolerance check refers to
/// one of these.
namespace tol {
inline constexpr double kUnitary = 1e-10;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kNorm = 1e-12;
inline constexpr double kPositivity = 1e-8;
inline constexpr double kTracePreserving = 1e-8;
}  // namespace tol

/// Maximum operator dimension handled by the library (six qubits).
inline constexpr Eigen::Index kMaxDim = 64;

/// Raised when an internal invariant (hermiticity, unitarity, a gate
/// identity) fails at run time.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& h) {
  return (h - h.adjoint()).norm();
}

template <typename Derived>
typename Derived::RealScalar unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  return (u.adjoint() * u - Plain::Identity(u.rows(), u.cols())).norm();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& h,
                  typename Derived::RealScalar eps = tol::kHermitian) {
  return h.rows() == h.cols() && hermiticity_defect(h) <= eps;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u,
                typename Derived::RealScalar eps = tol::kUnitary) {
  return u.rows() == u.cols() && unitarity_defect(u) <= eps;
}

/// e^{-iHt} for hermitian H via the spectral decomposition.
///
/// The generator must be hermitian to 1e-12 (Frobenius); anything else is
/// rejected with the measured defect. For general (non-hermitian) generators
/// use expm().
template <typename Derived>
typename Derived::PlainObject matrix_exp(const Eigen::MatrixBase<Derived>& h,
                                         typename Derived::RealScalar t) {
  using Plain = typename Derived::PlainObject;
  using Real = typename Derived::RealScalar;
  using Scalar = typename Derived::Scalar;
  if (h.rows() != h.cols()) throw std::invalid_argument("matrix_exp: generator is not square");
  if (!std::isfinite(static_cast<double>(t))) throw std::invalid_argument("matrix_exp: time is not finite");
  const Real defect = hermiticity_defect(h);
  if (!(defect <= Real(tol::kHermitian))) {
    std::ostringstream msg;
    msg << "matrix_exp: generator is not hermitian, ||H - H^dagger||_F = " << defect;
    throw std::invalid_argument(msg.str());
  }
  // Symmetrize so the solver sees an exactly hermitian input.
  const Plain sym = (h + h.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Plain> solver(sym);
  if (solver.info() != Eigen::Success) throw InvariantError("matrix_exp: eigensolver failed");
  const auto& vals = solver.eigenvalues();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> phases(vals.size());
  for (Eigen::Index k = 0; k < vals.size(); ++k) phases(k) = std::polar(Real(1), -vals(k) * t);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

/// e^{A} for a general square matrix (Pade scaling-and-squaring).
template <typename Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix is not square");
  typename Derived::PlainObject out = a.eval().exp();
  return out;
}

template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// ||A - B||_F.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar frobenius_distance(const Eigen::MatrixBase<DerivedA>& a,
                                                 const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << "frobenius_distance: dimension mismatch " << a.rows() << "x" << a.cols() << " vs "
        << b.rows() << "x" << b.cols();
    throw std::invalid_argument(msg.str());
  }
  return (a - b).norm();
}

/// |Tr(U^dagger V)| / d. Invariant under a global phase on either argument.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar gate_fidelity(const Eigen::MatrixBase<DerivedA>& u,
                                            const Eigen::MatrixBase<DerivedB>& v) {
  using Real = typename DerivedA::RealScalar;
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw std::invalid_argument("gate_fidelity: operands must be square with equal dimension");
  if (!is_unitary(u) || !is_unitary(v)) throw std::invalid_argument("gate_fidelity: operands must be unitary");
  const Real f = std::abs((u.adjoint() * v).trace()) / Real(u.rows());
  return std::min(f, Real(1));
}

/// min over alpha of ||U - e^{i alpha} V||_F. No unitarity requirement, so it
/// also applies to subspace blocks of unitaries.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar phase_aligned_distance(const Eigen::MatrixBase<DerivedA>& u,
                                                     const Eigen::MatrixBase<DerivedB>& v) {
  using Real = typename DerivedA::RealScalar;
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("phase_aligned_distance: dimension mismatch");
  const auto overlap = (v.adjoint() * u).trace();
  const auto phase = std::abs(overlap) > Real(0) ? overlap / std::abs(overlap) : decltype(overlap)(1);
  return (u - phase * v).norm();
}

namespace pauli {

template <typename Real = double>
Op<Real> identity() { return Op<Real>::Identity(2, 2); }

template <typename Real = double>
Op<Real> x() {
  Op<Real> m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

template <typename Real = double>
Op<Real> y() {
  using C = std::complex<Real>;
  Op<Real> m(2, 2);
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <typename Real = double>
Op<Real> z() {
  Op<Real> m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace pauli

/// Computational basis ket |index> in dimension dim.
inline StateVector basis_ket(Eigen::Index dim, Eigen::Index index) {
  StateVector v = StateVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

/// Normalized state evolution; throws if U|psi> drifts off the unit sphere.
inline StateVector evolve(const Operator& u, const StateVector& psi) {
  StateVector out = u * psi;
  if (std::abs(out.norm() - 1.0) > tol::kNorm)
    throw InvariantError("evolve: state norm drifted beyond 1e-12");
  return out;
}

}  // namespace holodfs

#endif  // HOLODFS_OPERATOR_HPP_
