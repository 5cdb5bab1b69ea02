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

#include "tfrqa/recurrence/time_series.hpp"

namespace tfrqa::pipeline {

/// Samples with t_lo <= t < t_hi. Throws std::out_of_range if the window
/// reaches outside the series and std::invalid_argument if it is empty.
recurrence::TimeSeries select_window(const recurrence::TimeSeries& series, double t_lo,
                                     double t_hi);

/// Time axis t -> t min(h, 1), re-sampled onto the grid n dt by holding the
/// previous sample. The original sample i covers [t_i, t_i + dt), so the
/// output spans [s t_0, s (t_last + dt)). Identity for h >= 1.
recurrence::TimeSeries rescale_time(const recurrence::TimeSeries& series, double h);

/// Grid indices [first, last] of the original series that rescale_time needs to
/// cover output indices [n_lo, n_hi).
struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;
};
IndexRange rescale_source_range(std::size_t n_lo, std::size_t n_hi, double h);

/// ceil(t / dt) with a small tolerance, for half-open window bounds.
std::size_t grid_index_at_or_after(double t, double dt);

}  // namespace tfrqa::pipeline
