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

#include "tfrqa/recurrence/rqa.hpp"

#include <algorithm>
#include <cmath>

namespace tfrqa::recurrence {

namespace {

void close_run(LineHistogram& hist, std::size_t& run) {
  if (run > 0) ++hist[run];
  run = 0;
}

// Fraction of recurrence points sitting on lines of length >= min_length.
double line_fraction(const LineHistogram& hist, std::size_t min_length) {
  std::size_t on_lines = 0;
  std::size_t total = 0;
  for (const auto& [length, count] : hist) {
    total += length * count;
    if (length >= min_length) on_lines += length * count;
  }
  return total == 0 ? 0.0 : static_cast<double>(on_lines) / static_cast<double>(total);
}

}  // namespace

LineHistogram diagonal_histogram(const RecurrencePlot& rp, std::size_t theiler) {
  const std::size_t n = rp.size();
  LineHistogram hist;
  for (std::size_t offset = std::max<std::size_t>(theiler, 1); offset < n; ++offset) {
    std::size_t upper = 0;
    std::size_t lower = 0;
    for (std::size_t i = 0; i + offset < n; ++i) {
      if (rp(i, i + offset)) ++upper; else close_run(hist, upper);
      if (rp(i + offset, i)) ++lower; else close_run(hist, lower);
    }
    close_run(hist, upper);
    close_run(hist, lower);
  }
  if (theiler == 0 && n > 0) {
    std::size_t run = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rp(i, i)) ++run; else close_run(hist, run);
    }
    close_run(hist, run);
  }
  return hist;
}

LineHistogram vertical_histogram(const RecurrencePlot& rp) {
  const std::size_t n = rp.size();
  LineHistogram hist;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t run = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rp(i, j)) ++run; else close_run(hist, run);
    }
    close_run(hist, run);
  }
  return hist;
}

RQAReport rqa(const RecurrencePlot& rp, std::size_t l_min, std::size_t v_min) {
  RQAReport report;
  report.rr_achieved = rp.rr_achieved();
  report.diag_hist = diagonal_histogram(rp, 1);
  report.vert_hist = vertical_histogram(rp);

  report.det = line_fraction(report.diag_hist, l_min);
  report.lam = line_fraction(report.vert_hist, v_min);

  report.l_max = report.diag_hist.empty() ? 1 : report.diag_hist.rbegin()->first;
  report.div = 1.0 / static_cast<double>(report.l_max);

  std::size_t lines = 0;
  for (auto it = report.diag_hist.lower_bound(l_min); it != report.diag_hist.end(); ++it) {
    lines += it->second;
  }
  double entropy = 0.0;
  if (lines > 0) {
    for (auto it = report.diag_hist.lower_bound(l_min); it != report.diag_hist.end(); ++it) {
      const double p = static_cast<double>(it->second) / static_cast<double>(lines);
      entropy -= p * std::log(p);
    }
  }
  report.entr = entropy;
  return report;
}

}  // namespace tfrqa::recurrence
