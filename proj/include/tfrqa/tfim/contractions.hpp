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
#include <vector>

#include "tfrqa/tfim/modes.hpp"

namespace tfrqa::tfim {

/// Majorana operators A_j = c_j^dag + c_j and B_j = c_j^dag - c_j.
/// With this Jordan-Wigner convention sz_j = A_j B_j and
/// sx_j sx_{j+1} = B_j A_{j+1}.
enum class Majorana { A, B };

/// Translation-invariant two-point tables <X_l Y_m> at one time, indexed by
/// the separation r = m - l in [-L/2, L/2].
class MajoranaContractions {
 public:
  MajoranaContractions(int L, double time);

  int L() const { return L_; }
  double time() const { return time_; }
  int max_separation() const { return L_ / 2; }

  /// <A_l A_{l+r}>
  std::complex<double> aa(int r) const { return aa_[index(r)]; }
  /// <B_l B_{l+r}>
  std::complex<double> bb(int r) const { return bb_[index(r)]; }
  /// <B_l A_{l+r}>
  std::complex<double> ba(int r) const { return ba_[index(r)]; }

  /// <X_site_x Y_site_y> for arbitrary operator kinds. Requires
  /// |site_y - site_x| <= L/2, throws std::out_of_range otherwise.
  std::complex<double> operator()(Majorana x, int site_x, Majorana y, int site_y) const;

 private:
  friend MajoranaContractions contractions_at(const ModeTable&, double);

  std::size_t index(int r) const;

  int L_;
  double time_;
  std::vector<std::complex<double>> aa_;
  std::vector<std::complex<double>> bb_;
  std::vector<std::complex<double>> ba_;
};

/// Contraction tables at time t >= 0, built from the exact evolution of each
/// (k, -k) pair under the post-quench Hamiltonian followed by momentum sums.
/// Cost O(L^2) per call.
MajoranaContractions contractions_at(const ModeTable& modes, double t);

}  // namespace tfrqa::tfim
