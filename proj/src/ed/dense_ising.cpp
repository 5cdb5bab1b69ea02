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

#include "tfrqa/ed/dense_ising.hpp"

#include <stdexcept>
#include <string>

namespace tfrqa::ed {

namespace {

using Index = Eigen::Index;

inline int bit(Index state, int site) { return static_cast<int>((state >> site) & 1); }
inline double z_sign(Index state, int site) { return bit(state, site) ? -1.0 : 1.0; }
inline int wrap(int site, int L) { return ((site % L) + L) % L; }

}  // namespace

DenseSpinSystem build_hamiltonian(int L, double h) {
  if (L < 2 || L > kMaxSites) {
    throw std::invalid_argument("dense ED supports 2 <= L <= " + std::to_string(kMaxSites) +
                                ", got " + std::to_string(L));
  }
  if (h < 0.0) throw std::invalid_argument("h must be non-negative");

  DenseSpinSystem sys;
  sys.L = L;
  sys.h = h;
  const Index dim = Index{1} << L;
  sys.hamiltonian = Eigen::MatrixXd::Zero(dim, dim);
  for (Index s = 0; s < dim; ++s) {
    for (int i = 0; i < L; ++i) {
      sys.hamiltonian(s, s) -= h * z_sign(s, i);
      const int j = (i + 1) % L;
      const Index flipped = s ^ (Index{1} << i) ^ (Index{1} << j);
      sys.hamiltonian(flipped, s) -= 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sys.hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  sys.eigenvalues = solver.eigenvalues();
  sys.eigenvectors = solver.eigenvectors();
  return sys;
}

StateVector evolve(const DenseSpinSystem& sys, double t) {
  // |psi0> = e_0, so V^T psi0 is the first row of V.
  const Eigen::VectorXd overlaps = sys.eigenvectors.row(0).transpose();
  Eigen::VectorXcd phased(overlaps.size());
  for (Index n = 0; n < overlaps.size(); ++n) {
    phased(n) = overlaps(n) * std::polar(1.0, -sys.eigenvalues(n) * t);
  }
  return sys.eigenvectors.cast<std::complex<double>>() * phased;
}

double sx(const DenseSpinSystem& sys, const StateVector& psi, int site) {
  const int i = wrap(site, sys.L);
  std::complex<double> acc = 0.0;
  for (Index s = 0; s < psi.size(); ++s) {
    acc += std::conj(psi(s ^ (Index{1} << i))) * psi(s);
  }
  return acc.real();
}

double sz(const DenseSpinSystem& sys, const StateVector& psi, int site) {
  const int i = wrap(site, sys.L);
  double acc = 0.0;
  for (Index s = 0; s < psi.size(); ++s) acc += z_sign(s, i) * std::norm(psi(s));
  return acc;
}

double sxsx(const DenseSpinSystem& sys, const StateVector& psi, int i, int j) {
  i = wrap(i, sys.L);
  j = wrap(j, sys.L);
  if (i == j) return psi.squaredNorm();
  const Index mask = (Index{1} << i) | (Index{1} << j);
  std::complex<double> acc = 0.0;
  for (Index s = 0; s < psi.size(); ++s) acc += std::conj(psi(s ^ mask)) * psi(s);
  return acc.real();
}

double szsz(const DenseSpinSystem& sys, const StateVector& psi, int i, int j) {
  i = wrap(i, sys.L);
  j = wrap(j, sys.L);
  double acc = 0.0;
  for (Index s = 0; s < psi.size(); ++s) {
    acc += z_sign(s, i) * z_sign(s, j) * std::norm(psi(s));
  }
  return acc;
}

double energy(const DenseSpinSystem& sys, const StateVector& psi) {
  const Eigen::VectorXcd hpsi = sys.hamiltonian.cast<std::complex<double>>() * psi;
  return psi.dot(hpsi).real();
}

double site_observable(const DenseSpinSystem& sys, const StateVector& psi, tfim::Observable obs,
                       int i, int distance) {
  switch (obs) {
    case tfim::Observable::xx:
      return sxsx(sys, psi, i, i + distance);
    case tfim::Observable::zz_connected: {
      const double z = sz(sys, psi, i);
      return szsz(sys, psi, i, i + distance) - z * z;
    }
  }
  throw std::logic_error("unhandled observable");
}

double evolve_and_measure(const DenseSpinSystem& sys, double t, tfim::Observable obs,
                          int distance) {
  if (distance < 1 || distance > sys.L / 2) {
    throw std::out_of_range("distance must lie in [1, L/2]");
  }
  const StateVector psi = evolve(sys, t);
  double acc = 0.0;
  for (int i = 0; i < sys.L; ++i) acc += site_observable(sys, psi, obs, i, distance);
  return acc / sys.L;
}

}  // namespace tfrqa::ed
