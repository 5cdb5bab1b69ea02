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

#include "tfrqa/spectral/spectrum.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace tfrqa::spectral {

namespace {

// FFTW's planner is not reentrant; execution on a private plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

}  // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> samples) {
  const std::size_t n = samples.size();
  if (n == 0) return {};
  std::unique_ptr<fftw_complex, FftwFree> in(fftw_alloc_complex(n));
  std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(n));
  if (!in || !out) throw std::bad_alloc();

  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
  static_assert(sizeof(fftw_complex) == sizeof(std::complex<double>));
  std::memcpy(in.get(), samples.data(), n * sizeof(fftw_complex));
  fftw_execute(plan);

  std::vector<std::complex<double>> result(n);
  std::memcpy(result.data(), out.get(), n * sizeof(fftw_complex));
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return result;
}

SpectrumReport ipr(std::span<const std::complex<double>> samples, double dt) {
  const std::size_t n = samples.size();
  if (n < 2) throw std::invalid_argument("IPR needs at least two samples");
  if (!(dt > 0.0)) throw std::invalid_argument("sample spacing must be positive");

  const std::vector<std::complex<double>> spectrum = dft(samples);
  const double d_omega = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);

  SpectrumReport report;
  report.frequencies.resize(n);
  report.amplitudes.resize(n);
  report.probabilities.resize(n);
  double power = 0.0;
  double power_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    report.frequencies[k] = static_cast<double>(k) * d_omega;
    report.amplitudes[k] = std::abs(spectrum[k]);
    const double p = std::norm(spectrum[k]);
    power += p;
    power_sq += p * p;
  }
  if (!(power > 0.0)) throw std::invalid_argument("IPR of an all-zero series is undefined");
  // d_omega cancels between |rho_tilde|^2 d_omega and its normalization.
  for (std::size_t k = 0; k < n; ++k) report.probabilities[k] = std::norm(spectrum[k]) / power;
  report.ipr = power_sq / (power * power);
  return report;
}

SpectrumReport ipr(std::span<const double> samples, double dt) {
  std::vector<std::complex<double>> z(samples.begin(), samples.end());
  return ipr(std::span<const std::complex<double>>(z), dt);
}

SpectrumReport ipr(const recurrence::TimeSeries& series) {
  if (series.dim() != 1) throw std::invalid_argument("IPR expects a scalar series");
  return ipr(std::span<const double>(series.data()), series.dt());
}

double mean_abs(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("mean of an empty series");
  double acc = 0.0;
  for (double x : samples) acc += std::abs(x);
  return acc / static_cast<double>(samples.size());
}

double mean_abs(const recurrence::TimeSeries& series) {
  return mean_abs(std::span<const double>(series.data()));
}

}  // namespace tfrqa::spectral
