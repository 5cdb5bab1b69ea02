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

#include "tfrqa/linalg/pfaffian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfrqa::linalg {

AntisymmetricMatrix::AntisymmetricMatrix(std::size_t n)
    : data_(ComplexMatrix::Zero(static_cast<Eigen::Index>(n),
                                static_cast<Eigen::Index>(n))) {}

AntisymmetricMatrix AntisymmetricMatrix::from_dense(const ComplexMatrix& m,
                                                    double tolerance) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("antisymmetric matrix must be square, got " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double violation = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (violation > tolerance * scale) {
    throw std::invalid_argument("matrix violates antisymmetry: max |A + A^T| = " +
                                std::to_string(violation));
  }
  AntisymmetricMatrix out(static_cast<std::size_t>(m.rows()));
  out.data_ = 0.5 * (m - m.transpose());
  out.data_.diagonal().setZero();
  return out;
}

void AntisymmetricMatrix::set(std::size_t i, std::size_t j, complex value) {
  if (i == j) {
    throw std::invalid_argument("diagonal of an antisymmetric matrix is fixed at zero");
  }
  data_(i, j) = value;
  data_(j, i) = -value;
}

complex pfaffian(const AntisymmetricMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  if (n == 0) return 1.0;
  if (n % 2 == 1) return 0.0;

  ComplexMatrix m = a.dense();
  complex result = 1.0;

  for (Eigen::Index k = 0; k < n - 1; k += 2) {
    // Largest entry below the subdiagonal in column k becomes the pivot.
    Eigen::Index kp = k + 1;
    double best = std::abs(m(k + 1, k));
    for (Eigen::Index i = k + 2; i < n; ++i) {
      const double v = std::abs(m(i, k));
      if (v > best) {
        best = v;
        kp = i;
      }
    }
    if (kp != k + 1) {
      m.row(k + 1).swap(m.row(kp));
      m.col(k + 1).swap(m.col(kp));
      result = -result;
    }

    const complex pivot = m(k, k + 1);
    if (pivot == complex(0.0)) return 0.0;
    result *= pivot;

    const Eigen::Index rest = n - (k + 2);
    if (rest > 0) {
      // Gauss step that eliminates row/column k beyond the tridiagonal band.
      const Eigen::Matrix<complex, Eigen::Dynamic, 1> tau =
          m.row(k).segment(k + 2, rest).transpose() / pivot;
      const Eigen::Matrix<complex, Eigen::Dynamic, 1> col = m.col(k + 1).segment(k + 2, rest);
      m.block(k + 2, k + 2, rest, rest).noalias() +=
          tau * col.transpose() - col * tau.transpose();
    }
  }
  return result;
}

complex pfaffian(const ComplexMatrix& a) {
  return pfaffian(AntisymmetricMatrix::from_dense(a));
}

namespace {

// Expansion along the first remaining index:
// Pf = sum_j (-1)^(pos(j)+1) a_{first, j} Pf(minor without first, j).
complex matching_sum(const ComplexMatrix& m, std::vector<Eigen::Index>& remaining) {
  if (remaining.empty()) return 1.0;
  const Eigen::Index first = remaining.front();
  complex total = 0.0;
  for (std::size_t pos = 1; pos < remaining.size(); ++pos) {
    const Eigen::Index partner = remaining[pos];
    const complex entry = m(first, partner);
    if (entry == complex(0.0)) continue;

    std::vector<Eigen::Index> minor;
    minor.reserve(remaining.size() - 2);
    for (std::size_t q = 1; q < remaining.size(); ++q) {
      if (q != pos) minor.push_back(remaining[q]);
    }
    const double sign = (pos % 2 == 1) ? 1.0 : -1.0;
    total += sign * entry * matching_sum(m, minor);
  }
  return total;
}

}  // namespace

complex pfaffian_bruteforce(const AntisymmetricMatrix& a) {
  const std::size_t n = a.size();
  if (n > kBruteforceMaxSize) {
    throw std::invalid_argument("pfaffian_bruteforce supports n <= " +
                                std::to_string(kBruteforceMaxSize) + ", got " +
                                std::to_string(n));
  }
  if (n % 2 == 1) return 0.0;
  std::vector<Eigen::Index> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = static_cast<Eigen::Index>(i);
  return matching_sum(a.dense(), remaining);
}

}  // namespace tfrqa::linalg
