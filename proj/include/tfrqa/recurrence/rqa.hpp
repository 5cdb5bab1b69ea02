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
#include <map>

#include "tfrqa/recurrence/recurrence_plot.hpp"

namespace tfrqa::recurrence {

/// Line length -> number of maximal line segments of that length.
using LineHistogram = std::map<std::size_t, std::size_t>;

/// Maximal runs of recurrences along every diagonal with |i - j| >= theiler,
/// both triangles included. theiler = 1 drops only the line of identity.
/// Runs cut by the plot border count at their truncated length.
LineHistogram diagonal_histogram(const RecurrencePlot& rp, std::size_t theiler = 1);

/// Maximal runs along every column of the full plot, line of identity included.
LineHistogram vertical_histogram(const RecurrencePlot& rp);

struct RQAReport {
  double det = 0.0;
  double lam = 0.0;
  double div = 1.0;
  double entr = 0.0;
  double rr_achieved = 0.0;
  std::size_t l_max = 1;
  LineHistogram diag_hist;
  LineHistogram vert_hist;
};

/// DET, LAM, DIV and ENTR of a recurrence plot.
///
/// DET = sum_{l>=l_min} l P(l) / sum_l l P(l) over off-LOI diagonals, LAM the
/// same over vertical lines, DIV = 1/L_max and
/// ENTR = -sum_{l>=l_min} p(l) ln p(l) with p(l) = P(l) / sum_{l>=l_min} P(l).
/// Without lines of length >= l_min (v_min) DET (LAM) and ENTR are 0; without
/// any off-LOI recurrence L_max is taken as 1.
RQAReport rqa(const RecurrencePlot& rp, std::size_t l_min = 2, std::size_t v_min = 2);

}  // namespace tfrqa::recurrence
