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
#include <cstdint>
#include <span>
#include <vector>

#include "tfrqa/recurrence/time_series.hpp"

namespace tfrqa::recurrence {

/// Dense symmetric T x T matrix of pairwise state distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }

  /// Strict upper triangle, row by row (T(T-1)/2 values).
  std::vector<double> upper_triangle() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

DistanceMatrix distance_matrix(const TimeSeries& trajectory, Metric metric = Metric::euclidean);

/// Symmetric boolean matrix R_ij = Theta(eps - D_ij) with Theta(0) = 1.
class RecurrencePlot {
 public:
  RecurrencePlot() = default;

  /// Builds from explicit cells (row-major, 0/1). Throws std::invalid_argument
  /// unless the matrix is square, symmetric and has a unit diagonal.
  static RecurrencePlot from_cells(std::size_t n, std::vector<std::uint8_t> cells);

  /// R_ij = D_ij <= epsilon.
  static RecurrencePlot from_distances(const DistanceMatrix& d, double epsilon,
                                       double rr_target = 0.0);

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  double epsilon() const { return epsilon_; }
  double rr_target() const { return rr_target_; }
  /// Fraction of recurrent off-diagonal entries.
  double rr_achieved() const { return rr_achieved_; }

 private:
  void update_rate();

  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
  double epsilon_ = 0.0;
  double rr_target_ = 0.0;
  double rr_achieved_ = 0.0;
};

/// Nearest-rank quantile: smallest value with at least ceil(q N) values <= it.
/// Requires 0 < q < 1 and a nonempty sample.
double nearest_rank_quantile(std::vector<double> values, double q);

/// Threshold chosen as the rr_target quantile of the off-diagonal distances,
/// so that rr_achieved >= rr_target with the excess bounded by ties at eps.
RecurrencePlot threshold_by_rate(const DistanceMatrix& d, double rr_target);

}  // namespace tfrqa::recurrence
