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
#include <string>
#include <string_view>
#include <vector>

namespace tfrqa::tfim {

/// One quench run: the all-up product state evolved with
/// H = -sum_i [sx_i sx_{i+1} + h sz_i] on a periodic ring of L sites,
/// sampled at t_n = n * dt for n = 0 .. floor(t_max / dt).
struct QuenchSpec {
  int L = 128;
  double h = 1.0;
  double t_max = 500.0;
  double dt = 0.1;

  /// Throws std::invalid_argument unless L is even and >= 4, h > 0, dt > 0
  /// and t_max >= 0.
  void validate() const;

  /// Number of grid points, endpoint included.
  std::size_t num_samples() const;

  /// Largest admissible correlation distance (L / 2).
  int max_distance() const { return L / 2; }
};

/// Maximal quasiparticle velocity of the post-quench Hamiltonian, 2 min(h, 1).
double max_velocity(double h);

/// Time at which the lightcone of correlations reaches distance `distance`.
double fermi_time(int distance, double h);

/// Finite-size revival times k L / (2 v_max).
double revival_time(int k, int L, double h);

enum class Observable { xx, zz_connected };

std::string_view to_string(Observable obs);

/// Accepts "xx" and "zz" (or "zz_connected"); throws std::invalid_argument otherwise.
Observable parse_observable(std::string_view text);

}  // namespace tfrqa::tfim
