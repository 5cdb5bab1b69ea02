/*
 * Copyright 2026 The tfrqa Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace tfrqa::linalg {

using complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Largest |A_ij + A_ji| (relative to max(1, max|A|)) accepted as rounding noise.
inline constexpr double kAntisymmetryTolerance = 1e-12;

/// Dense complex matrix with A = -A^T. The diagonal is exactly zero.
class AntisymmetricMatrix {
 public:
  explicit AntisymmetricMatrix(std::size_t n = 0);

  /// Validates antisymmetry of `m` and projects it onto (m - m^T)/2.
  /// Throws std::invalid_argument if `m` is not square or if the violation
  /// exceeds `tolerance`.
  static AntisymmetricMatrix from_dense(const ComplexMatrix& m,
                                        double tolerance = kAntisymmetryTolerance);

  std::size_t size() const { return static_cast<std::size_t>(data_.rows()); }

  complex operator()(std::size_t i, std::size_t j) const { return data_(i, j); }

  /// Sets A(i, j) = value and A(j, i) = -value. Requires i != j.
  void set(std::size_t i, std::size_t j, complex value);

  const ComplexMatrix& dense() const { return data_; }

 private:
  ComplexMatrix data_;
};

/// Pfaffian via pivoted Parlett-Reid skew tridiagonalization, O(n^3).
/// Pf of the empty matrix is 1, odd dimension gives 0.
complex pfaffian(const AntisymmetricMatrix& a);

/// Convenience overload; validates antisymmetry first.
complex pfaffian(const ComplexMatrix& a);

/// Signed sum over perfect matchings. Exact reference for n <= 10,
/// throws std::invalid_argument above that.
complex pfaffian_bruteforce(const AntisymmetricMatrix& a);

inline constexpr std::size_t kBruteforceMaxSize = 10;

}  // namespace tfrqa::linalg
