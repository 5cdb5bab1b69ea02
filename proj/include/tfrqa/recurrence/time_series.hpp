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
#include <span>
#include <string_view>
#include <vector>

namespace tfrqa::recurrence {

/// Uniformly sampled series of real vectors; scalar series have dim() == 1.
/// Samples are stored row-major, sample i occupying [i*dim, (i+1)*dim).
class TimeSeries {
 public:
  TimeSeries() = default;
  explicit TimeSeries(std::vector<double> scalars, double dt = 1.0, double t0 = 0.0);
  TimeSeries(std::vector<double> flat, std::size_t dim, double dt, double t0);

  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const { return data_.empty(); }
  std::size_t dim() const { return dim_; }
  double dt() const { return dt_; }
  double t0() const { return t0_; }
  double time(std::size_t i) const { return t0_ + static_cast<double>(i) * dt_; }

  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  /// Only valid for dim() == 1.
  double scalar(std::size_t i) const { return data_[i]; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::vector<double> data_;
  std::size_t dim_ = 1;
  double dt_ = 1.0;
  double t0_ = 0.0;
};

enum class Metric { euclidean, maximum };

Metric parse_metric(std::string_view text);
std::string_view to_string(Metric metric);

struct EmbeddingConfig {
  std::size_t dimension = 1;
  std::size_t delay = 1;
  Metric metric = Metric::euclidean;

  /// Embedded length T - (d-1) tau, or throws std::invalid_argument if it
  /// would drop below 2 or the parameters are zero.
  std::size_t embedded_length(std::size_t series_length) const;
};

/// Time-delay embedding X_i = (x_i, x_{i+tau}, ..., x_{i+(d-1)tau}) of a
/// scalar series. d = 1 returns the input unchanged.
TimeSeries embed(const TimeSeries& series, const EmbeddingConfig& cfg);

}  // namespace tfrqa::recurrence
