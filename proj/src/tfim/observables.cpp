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

#include "tfrqa/tfim/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "tfrqa/linalg/pfaffian.hpp"
#include "tfrqa/tfim/modes.hpp"

namespace tfrqa::tfim {

namespace {

struct Operator {
  Majorana kind;
  int site;
};

void check_distance(const MajoranaContractions& contr, int distance) {
  if (distance < 1 || distance > contr.max_separation()) {
    throw std::out_of_range("distance " + std::to_string(distance) +
                            " outside [1, L/2 = " + std::to_string(contr.max_separation()) +
                            "]");
  }
}

std::complex<double> wick(const MajoranaContractions& contr, const std::vector<Operator>& ops) {
  linalg::AntisymmetricMatrix m(ops.size());
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = a + 1; b < ops.size(); ++b) {
      m.set(a, b, contr(ops[a].kind, ops[a].site, ops[b].kind, ops[b].site));
    }
  }
  return linalg::pfaffian(m);
}

ObservableValue to_real(std::complex<double> z, const char* what, int distance, double t) {
  const double residue = std::abs(z.imag());
  if (residue > kImaginaryTolerance) {
    throw std::domain_error(std::string(what) + " has imaginary part " + std::to_string(z.imag()) +
                            " at distance " + std::to_string(distance) + ", t = " +
                            std::to_string(t));
  }
  return {z.real(), residue};
}

}  // namespace

ObservableValue rho_xx(const MajoranaContractions& contr, int distance) {
  check_distance(contr, distance);
  std::vector<Operator> ops;
  ops.reserve(static_cast<std::size_t>(2 * distance));
  for (int j = 0; j < distance; ++j) {
    ops.push_back({Majorana::B, j});
    ops.push_back({Majorana::A, j + 1});
  }
  return to_real(wick(contr, ops), "rho_xx", distance, contr.time());
}

ObservableValue rho_zz_connected(const MajoranaContractions& contr, int distance) {
  check_distance(contr, distance);
  const std::vector<Operator> ops = {
      {Majorana::A, 0}, {Majorana::B, 0}, {Majorana::A, distance}, {Majorana::B, distance}};
  const std::complex<double> zz = wick(contr, ops);
  const std::complex<double> z = contr(Majorana::A, 0, Majorana::B, 0);
  return to_real(zz - z * z, "rho_zz_connected", distance, contr.time());
}

ObservableValue measure(const MajoranaContractions& contr, Observable obs, int distance) {
  switch (obs) {
    case Observable::xx:
      return rho_xx(contr, distance);
    case Observable::zz_connected:
      return rho_zz_connected(contr, distance);
  }
  throw std::logic_error("unhandled observable");
}

const std::vector<double>& CorrelatorSeries::column(int distance) const {
  const auto it = std::find(distances.begin(), distances.end(), distance);
  if (it == distances.end()) {
    throw std::out_of_range("series has no column for distance " + std::to_string(distance));
  }
  return values[static_cast<std::size_t>(it - distances.begin())];
}

CorrelatorSeries simulate_series(const QuenchSpec& spec, Observable obs,
                                 const std::vector<int>& distances) {
  spec.validate();
  return simulate_range(spec, obs, distances, 0, spec.num_samples());
}

CorrelatorSeries simulate_range(const QuenchSpec& spec, Observable obs,
                                const std::vector<int>& distances, std::size_t first_index,
                                std::size_t count) {
  const ModeTable modes = build_modes(spec);
  if (first_index + count > spec.num_samples()) {
    throw std::out_of_range("requested samples [" + std::to_string(first_index) + ", " +
                            std::to_string(first_index + count) + ") exceed the grid of " +
                            std::to_string(spec.num_samples()) + " samples");
  }
  for (int d : distances) {
    if (d < 1 || d > spec.max_distance()) {
      throw std::out_of_range("distance " + std::to_string(d) + " outside [1, L/2 = " +
                              std::to_string(spec.max_distance()) + "]");
    }
  }

  CorrelatorSeries series;
  series.observable = obs;
  series.distances = distances;
  series.dt = spec.dt;
  series.first_index = first_index;
  series.values.assign(distances.size(), std::vector<double>(count, 0.0));
  std::vector<double> residue(count, 0.0);

  const auto n_total = static_cast<std::ptrdiff_t>(count);
  std::string failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t n = 0; n < n_total; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const double t = static_cast<double>(first_index + idx) * spec.dt;
    try {
      const MajoranaContractions contr = contractions_at(modes, t);
      for (std::size_t d = 0; d < distances.size(); ++d) {
        const ObservableValue v = measure(contr, obs, distances[d]);
        series.values[d][idx] = v.value;
        residue[idx] = std::max(residue[idx], v.imag_residue);
      }
    } catch (const std::exception& e) {
#pragma omp critical(tfrqa_simulate_failure)
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw std::runtime_error(failure);

  for (double r : residue) series.max_imag_residue = std::max(series.max_imag_residue, r);
  return series;
}

}  // namespace tfrqa::tfim
