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
#include <span>
#include <vector>

#include "tfrqa/recurrence/time_series.hpp"

namespace tfrqa::spectral {

/// Normalized Fourier spectrum of a uniformly sampled window.
struct SpectrumReport {
  /// omega_k = k * 2 pi / (N dt), k = 0 .. N-1
  std::vector<double> frequencies;
  /// |rho_hat(omega_k)|
  std::vector<double> amplitudes;
  /// p_k = |rho_tilde_k|^2 d_omega, summing to one.
  std::vector<double> probabilities;
  /// sum_k p_k^2, between 1/N (flat) and 1 (single bin).
  double ipr = 0.0;
};

/// Raw DFT (no window, no detrending, zero-frequency bin kept), then the
/// inverse participation ratio of the normalized power. Needs N >= 2 and a
/// series that is not identically zero.
SpectrumReport ipr(std::span<const std::complex<double>> samples, double dt);
SpectrumReport ipr(std::span<const double> samples, double dt);
SpectrumReport ipr(const recurrence::TimeSeries& series);

/// Unnormalized forward DFT, sum_n x_n e^{-2 pi i k n / N}.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> samples);

/// Arithmetic mean of |x|.
double mean_abs(std::span<const double> samples);
double mean_abs(const recurrence::TimeSeries& series);

}  // namespace tfrqa::spectral
