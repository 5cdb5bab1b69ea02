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

#include "tfrqa/tfim/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tfrqa::tfim {

void QuenchSpec::validate() const {
  if (L < 4 || L % 2 != 0) {
    throw std::invalid_argument("L must be even and >= 4, got " + std::to_string(L));
  }
  if (!(h > 0.0)) throw std::invalid_argument("h must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(t_max >= 0.0)) throw std::invalid_argument("t_max must be non-negative");
}

std::size_t QuenchSpec::num_samples() const {
  // Tolerate t_max/dt landing just below an integer (500/0.1 = 4999.999...).
  return static_cast<std::size_t>(std::floor(t_max / dt + 1e-9)) + 1;
}

double max_velocity(double h) { return 2.0 * std::min(h, 1.0); }

double fermi_time(int distance, double h) {
  return static_cast<double>(distance) / (2.0 * max_velocity(h));
}

double revival_time(int k, int L, double h) {
  return static_cast<double>(k) * static_cast<double>(L) / (2.0 * max_velocity(h));
}

std::string_view to_string(Observable obs) {
  switch (obs) {
    case Observable::xx:
      return "xx";
    case Observable::zz_connected:
      return "zz";
  }
  return "?";
}

Observable parse_observable(std::string_view text) {
  if (text == "xx") return Observable::xx;
  if (text == "zz" || text == "zz_connected" || text == "zzc") return Observable::zz_connected;
  throw std::invalid_argument("unknown observable '" + std::string(text) +
                              "' (expected xx or zz)");
}

double dispersion(double k, double h) {
  const double a = h - std::cos(k);
  const double b = std::sin(k);
  return 2.0 * std::hypot(a, b);
}

ModeTable build_modes(const QuenchSpec& spec) {
  spec.validate();
  ModeTable table;
  table.L = spec.L;
  table.h = spec.h;

  const int half = spec.L / 2;
  const double L = spec.L;
  table.modes.reserve(static_cast<std::size_t>(spec.L));
  for (int m = half; m >= 1; --m) {
    table.modes.push_back(Mode{-(2.0 * m - 1.0) * std::numbers::pi / L, 0.0, 0.0});
  }
  for (int m = 1; m <= half; ++m) {
    table.modes.push_back(Mode{(2.0 * m - 1.0) * std::numbers::pi / L, 0.0, 0.0});
  }
  for (auto& mode : table.modes) {
    mode.energy = dispersion(mode.k, spec.h);
    mode.bogoliubov_angle = std::atan2(std::sin(mode.k), spec.h - std::cos(mode.k));
  }

  const auto n_pos = static_cast<std::size_t>(half);
  table.cos_kr.resize((n_pos + 1) * n_pos);
  table.sin_kr.resize((n_pos + 1) * n_pos);
  for (std::size_t r = 0; r <= n_pos; ++r) {
    for (std::size_t m = 0; m < n_pos; ++m) {
      const double phase = table.positive(m).k * static_cast<double>(r);
      table.cos_kr[r * n_pos + m] = std::cos(phase);
      table.sin_kr[r * n_pos + m] = std::sin(phase);
    }
  }
  return table;
}

}  // namespace tfrqa::tfim
