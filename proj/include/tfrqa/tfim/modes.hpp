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

#include <cstddef>
#include <vector>

#include "tfrqa/tfim/quench.hpp"

namespace tfrqa::tfim {

/// Single fermion mode of the antiperiodic (even-parity) sector.
struct Mode {
  double k = 0.0;
  /// eps_k = 2 sqrt((h - cos k)^2 + sin^2 k)
  double energy = 0.0;
  /// theta_k with cos theta = 2 (h - cos k) / eps_k and sin theta = 2 sin k / eps_k.
  double bogoliubov_angle = 0.0;
};

/// Momenta k = +-(2m - 1) pi / L, m = 1 .. L/2, in increasing order, together
/// with the post-quench dispersion and Bogoliubov angles.
///
/// The pre-quench state (h0 -> infinity) is the fermionic vacuum of every
/// (k, -k) pair, so no further initial-state data is stored.
struct ModeTable {
  int L = 0;
  double h = 0.0;
  std::vector<Mode> modes;

  /// Fourier kernels over the positive half of the momenta,
  /// row r = 0 .. L/2, column m: cos(k_m r) and sin(k_m r).
  std::vector<double> cos_kr;
  std::vector<double> sin_kr;

  std::size_t num_positive() const { return modes.size() / 2; }
  const Mode& positive(std::size_t m) const { return modes[modes.size() / 2 + m]; }
};

ModeTable build_modes(const QuenchSpec& spec);

/// Dispersion of the post-quench Hamiltonian.
double dispersion(double k, double h);

}  // namespace tfrqa::tfim
