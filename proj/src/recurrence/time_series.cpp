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

#include "tfrqa/recurrence/time_series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace tfrqa::recurrence {

TimeSeries::TimeSeries(std::vector<double> scalars, double dt, double t0)
    : data_(std::move(scalars)), dim_(1), dt_(dt), t0_(t0) {}

TimeSeries::TimeSeries(std::vector<double> flat, std::size_t dim, double dt, double t0)
    : data_(std::move(flat)), dim_(dim), dt_(dt), t0_(t0) {
  if (dim_ == 0) throw std::invalid_argument("sample dimension must be >= 1");
  if (data_.size() % dim_ != 0) {
    throw std::invalid_argument("flat sample buffer of size " + std::to_string(data_.size()) +
                                " is not a multiple of dimension " + std::to_string(dim_));
  }
}

Metric parse_metric(std::string_view text) {
  if (text == "euclidean") return Metric::euclidean;
  if (text == "maximum" || text == "max") return Metric::maximum;
  throw std::invalid_argument("unknown metric '" + std::string(text) +
                              "' (expected euclidean or maximum)");
}

std::string_view to_string(Metric metric) {
  return metric == Metric::euclidean ? "euclidean" : "maximum";
}

std::size_t EmbeddingConfig::embedded_length(std::size_t series_length) const {
  if (dimension == 0 || delay == 0) {
    throw std::invalid_argument("embedding dimension and delay must be >= 1");
  }
  const std::size_t span = (dimension - 1) * delay;
  if (series_length < span + 2) {
    throw std::invalid_argument("series of length " + std::to_string(series_length) +
                                " too short for embedding d=" + std::to_string(dimension) +
                                ", tau=" + std::to_string(delay));
  }
  return series_length - span;
}

TimeSeries embed(const TimeSeries& series, const EmbeddingConfig& cfg) {
  if (series.dim() != 1) throw std::invalid_argument("embedding expects a scalar series");
  const std::size_t n = cfg.embedded_length(series.size());
  if (cfg.dimension == 1) return series;

  std::vector<double> flat;
  flat.reserve(n * cfg.dimension);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < cfg.dimension; ++c) {
      flat.push_back(series.scalar(i + c * cfg.delay));
    }
  }
  return TimeSeries(std::move(flat), cfg.dimension, series.dt(), series.t0());
}

}  // namespace tfrqa::recurrence
