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

#include "tfrqa/recurrence/recurrence_plot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace tfrqa::recurrence {

std::vector<double> DistanceMatrix::upper_triangle() const {
  std::vector<double> out;
  out.reserve(n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) out.push_back(values_[i * n_ + j]);
  }
  return out;
}

DistanceMatrix distance_matrix(const TimeSeries& trajectory, Metric metric) {
  const std::size_t n = trajectory.size();
  if (n == 0) throw std::invalid_argument("distance matrix of an empty trajectory");
  const std::size_t dim = trajectory.dim();
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = trajectory[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto xj = trajectory[j];
      double dist = 0.0;
      if (dim == 1) {
        dist = std::abs(xi[0] - xj[0]);
      } else if (metric == Metric::euclidean) {
        double acc = 0.0;
        for (std::size_t c = 0; c < dim; ++c) acc += (xi[c] - xj[c]) * (xi[c] - xj[c]);
        dist = std::sqrt(acc);
      } else {
        for (std::size_t c = 0; c < dim; ++c) dist = std::max(dist, std::abs(xi[c] - xj[c]));
      }
      d(i, j) = dist;
      d(j, i) = dist;
    }
  }
  return d;
}

RecurrencePlot RecurrencePlot::from_cells(std::size_t n, std::vector<std::uint8_t> cells) {
  if (cells.size() != n * n) {
    throw std::invalid_argument("recurrence plot needs " + std::to_string(n * n) +
                                " cells, got " + std::to_string(cells.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cells[i * n + i] == 0) {
      throw std::invalid_argument("recurrence plot diagonal must be recurrent");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((cells[i * n + j] != 0) != (cells[j * n + i] != 0)) {
        throw std::invalid_argument("recurrence plot must be symmetric");
      }
    }
  }
  RecurrencePlot rp;
  rp.n_ = n;
  rp.cells_ = std::move(cells);
  for (auto& c : rp.cells_) c = c ? 1 : 0;
  rp.update_rate();
  return rp;
}

RecurrencePlot RecurrencePlot::from_distances(const DistanceMatrix& d, double epsilon,
                                              double rr_target) {
  RecurrencePlot rp;
  rp.n_ = d.size();
  rp.epsilon_ = epsilon;
  rp.rr_target_ = rr_target;
  rp.cells_.resize(rp.n_ * rp.n_);
  for (std::size_t i = 0; i < rp.n_; ++i) {
    for (std::size_t j = 0; j < rp.n_; ++j) {
      rp.cells_[i * rp.n_ + j] = (i == j || d(i, j) <= epsilon) ? 1 : 0;
    }
  }
  rp.update_rate();
  return rp;
}

void RecurrencePlot::update_rate() {
  if (n_ < 2) {
    rr_achieved_ = 0.0;
    return;
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && cells_[i * n_ + j]) ++count;
    }
  }
  rr_achieved_ = static_cast<double>(count) / static_cast<double>(n_ * (n_ - 1));
}

double nearest_rank_quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("quantile level must lie in (0, 1), got " + std::to_string(q));
  }
  const double n = static_cast<double>(values.size());
  const double exact = q * n;
  // q*N that should be an integer (0.1 * 1999000) must not round up by one.
  const double nearest = std::round(exact);
  double rank = (std::abs(exact - nearest) <= 1e-9 * std::max(1.0, exact)) ? nearest
                                                                          : std::ceil(exact);
  rank = std::clamp(rank, 1.0, n);
  const auto k = static_cast<std::size_t>(rank) - 1;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), values.end());
  return values[k];
}

RecurrencePlot threshold_by_rate(const DistanceMatrix& d, double rr_target) {
  if (d.size() < 2) throw std::invalid_argument("recurrence thresholding needs T >= 2");
  const double epsilon = nearest_rank_quantile(d.upper_triangle(), rr_target);
  return RecurrencePlot::from_distances(d, epsilon, rr_target);
}

}  // namespace tfrqa::recurrence
