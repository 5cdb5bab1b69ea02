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

#include "tfrqa/pipeline/window.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfrqa/pipeline/csv.hpp"

namespace tfrqa::pipeline {

namespace {

constexpr double kGridSlack = 1e-7;

}  // namespace

std::size_t grid_index_at_or_after(double t, double dt) {
  const double x = std::ceil(t / dt - kGridSlack);
  return x <= 0.0 ? 0 : static_cast<std::size_t>(x);
}

recurrence::TimeSeries select_window(const recurrence::TimeSeries& series, double t_lo,
                                     double t_hi) {
  if (!(t_lo < t_hi)) throw std::invalid_argument("empty window: t_lo must be below t_hi");
  const double dt = series.dt();
  const double first = std::ceil((t_lo - series.t0()) / dt - kGridSlack);
  const double end = std::ceil((t_hi - series.t0()) / dt - kGridSlack);
  const auto n = static_cast<double>(series.size());
  if (first < 0.0 || end > n) {
    throw std::out_of_range("window [" + format_double(t_lo) + ", " + format_double(t_hi) +
                            ") outside series span [" + format_double(series.t0()) + ", " +
                            format_double(series.time(series.size())) + ")");
  }
  if (end <= first) {
    throw std::invalid_argument("window [" + format_double(t_lo) + ", " + format_double(t_hi) +
                                ") contains no samples");
  }
  const auto i0 = static_cast<std::size_t>(first);
  const auto i1 = static_cast<std::size_t>(end);
  const std::size_t dim = series.dim();
  std::vector<double> flat(series.data().begin() + static_cast<std::ptrdiff_t>(i0 * dim),
                           series.data().begin() + static_cast<std::ptrdiff_t>(i1 * dim));
  return recurrence::TimeSeries(std::move(flat), dim, dt, series.time(i0));
}

recurrence::TimeSeries rescale_time(const recurrence::TimeSeries& series, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("rescaling needs h > 0");
  const double s = std::min(h, 1.0);
  if (s == 1.0 || series.empty()) return series;

  const double dt = series.dt();
  const double n0 = series.t0() / dt;
  const auto n = static_cast<double>(series.size());
  const double m_first = std::ceil(s * n0 - kGridSlack);
  const double m_end = std::ceil(s * (n0 + n) - kGridSlack);

  const std::size_t dim = series.dim();
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(std::max(0.0, m_end - m_first)) * dim);
  for (double m = m_first; m < m_end; m += 1.0) {
    // Previous-sample hold: source index floor(m / s - n0).
    const double src = std::floor(m / s - n0 + kGridSlack);
    const auto i = static_cast<std::size_t>(std::clamp(src, 0.0, n - 1.0));
    const auto sample = series[i];
    flat.insert(flat.end(), sample.begin(), sample.end());
  }
  return recurrence::TimeSeries(std::move(flat), dim, dt, m_first * dt);
}

IndexRange rescale_source_range(std::size_t n_lo, std::size_t n_hi, double h) {
  const double s = std::min(h, 1.0);
  if (n_hi <= n_lo) throw std::invalid_argument("empty index range");
  const auto source = [s](std::size_t m) {
    return static_cast<std::size_t>(std::floor(static_cast<double>(m) / s + kGridSlack));
  };
  return {source(n_lo), source(n_hi - 1)};
}

}  // namespace tfrqa::pipeline
