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
#include <vector>

#include <Eigen/Dense>

#include "tfrqa/tfim/quench.hpp"

namespace tfrqa::ed {

using StateVector = Eigen::VectorXcd;

inline constexpr int kMaxSites = 12;

/// Dense periodic transverse-field Ising chain on the full 2^L space.
/// Basis bit i set means spin i points down (sz_i = -1); index 0 is the
/// all-up product state.
struct DenseSpinSystem {
  int L = 0;
  double h = 0.0;
  Eigen::MatrixXd hamiltonian;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

/// H = -sum_i [sx_i sx_{i+1} + h sz_i] with the wraparound bond, fully
/// diagonalized. Requires 2 <= L <= 12 and h >= 0.
DenseSpinSystem build_hamiltonian(int L, double h);

/// e^{-iHt} |up up ... up> through the spectral decomposition.
StateVector evolve(const DenseSpinSystem& sys, double t);

/// Site-resolved correlators on a given state.
double sx(const DenseSpinSystem& sys, const StateVector& psi, int site);
double sz(const DenseSpinSystem& sys, const StateVector& psi, int site);
double sxsx(const DenseSpinSystem& sys, const StateVector& psi, int i, int j);
double szsz(const DenseSpinSystem& sys, const StateVector& psi, int i, int j);
double energy(const DenseSpinSystem& sys, const StateVector& psi);

/// Observable at site i and distance l (sites wrap around the ring).
double site_observable(const DenseSpinSystem& sys, const StateVector& psi,
                       tfim::Observable obs, int i, int distance);

/// Site average of site_observable on the evolved state at time t.
double evolve_and_measure(const DenseSpinSystem& sys, double t, tfim::Observable obs,
                          int distance);

}  // namespace tfrqa::ed
