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
#include <vector>

#include "tfrqa/tfim/contractions.hpp"
#include "tfrqa/tfim/quench.hpp"

namespace tfrqa::tfim {

/// Imaginary parts above this are treated as a convention bug upstream.
inline constexpr double kImaginaryTolerance = 1e-8;

/// Real value of a Hermitian observable plus the discarded imaginary residue.
struct ObservableValue {
  double value = 0.0;
  double imag_residue = 0.0;
};

/// <sx_i sx_{i+l}> as the Pfaffian of the 2l x 2l Wick matrix of the string
/// B_i A_{i+1} B_{i+1} ... B_{i+l-1} A_{i+l}. Requires 1 <= l <= L/2.
/// Throws std::domain_error if |Im| exceeds kImaginaryTolerance.
ObservableValue rho_xx(const MajoranaContractions& contr, int distance);

/// <sz_i sz_{i+l}> - <sz_i>^2 from the 4x4 Wick matrix of A_i B_i A_{i+l} B_{i+l}.
ObservableValue rho_zz_connected(const MajoranaContractions& contr, int distance);

ObservableValue measure(const MajoranaContractions& contr, Observable obs, int distance);

/// Observable sampled on t_n = n dt for n in [first_index, first_index + num_times).
struct CorrelatorSeries {
  Observable observable = Observable::xx;
  std::vector<int> distances;
  double dt = 0.1;
  std::size_t first_index = 0;
  /// values[d][n] is distance distances[d] at time (first_index + n) dt.
  std::vector<std::vector<double>> values;
  /// Largest |Im| discarded anywhere in the run.
  double max_imag_residue = 0.0;

  std::size_t num_times() const { return values.empty() ? 0 : values.front().size(); }
  double time(std::size_t n) const { return static_cast<double>(first_index + n) * dt; }
  /// Column for a given distance; throws std::out_of_range if absent.
  const std::vector<double>& column(int distance) const;
};

/// Full grid n = 0 .. floor(t_max/dt). Samples are independent, so the result
/// is bit-identical for any thread count.
CorrelatorSeries simulate_series(const QuenchSpec& spec, Observable obs,
                                 const std::vector<int>& distances);

/// Grid indices [first_index, first_index + count) only. Index range must lie
/// within the time grid of `spec`.
CorrelatorSeries simulate_range(const QuenchSpec& spec, Observable obs,
                                const std::vector<int>& distances,
                                std::size_t first_index, std::size_t count);

}  // namespace tfrqa::tfim
