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

// Deterministic generators for property tests. Every suite seeds its own Gen.

#ifndef HOLODFS_TESTS_GENERATORS_HPP_
#define HOLODFS_TESTS_GENERATORS_HPP_

#include <cmath>
#include <cstdint>

#include <Eigen/QR>

#include "holodfs/operator.hpp"

namespace holodfs::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  Operator complex_gaussian(Eigen::Index rows, Eigen::Index cols) {
    Operator m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(), normal());
    return m;
  }

  /// Haar-random unitary (QR of a Ginibre matrix with the phases of R removed).
  Operator unitary(Eigen::Index d) {
    const Operator g = complex_gaussian(d, d);
    Eigen::HouseholderQR<Operator> qr(g);
    Operator q = qr.householderQ();
    const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < d; ++k) {
      const Complex ph = r(k, k) / std::abs(r(k, k));
      q.col(k) *= ph;
    }
    return q;
  }

  Operator hermitian(Eigen::Index d) {
    const Operator g = complex_gaussian(d, d);
    return (g + g.adjoint()) / 2.0;
  }

  Operator density(Eigen::Index d) {
    const Operator g = complex_gaussian(d, d);
    Operator rho = g * g.adjoint();
    return rho / rho.trace();
  }

  StateVector ket(Eigen::Index d) {
    StateVector v = complex_gaussian(d, 1).col(0);
    return v / v.norm();
  }

 private:
  std::uint64_t state_;
};

}  // namespace holodfs::testing

#endif  // HOLODFS_TESTS_GENERATORS_HPP_
