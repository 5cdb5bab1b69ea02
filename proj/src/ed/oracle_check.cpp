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

#include "tfrqa/ed/oracle_check.hpp"

#include <algorithm>
#include <cmath>

#include "tfrqa/ed/dense_ising.hpp"
#include "tfrqa/tfim/contractions.hpp"
#include "tfrqa/tfim/modes.hpp"
#include "tfrqa/tfim/observables.hpp"

namespace tfrqa::ed {

double OracleComparison::error() const { return std::abs(engine - exact); }

std::vector<OracleComparison> compare_with_engine(const OracleGrid& grid) {
  std::vector<OracleComparison> out;
  for (double h : grid.fields) {
    const DenseSpinSystem sys = build_hamiltonian(grid.L, h);
    const tfim::ModeTable modes = build_modes(tfim::QuenchSpec{grid.L, h, 0.0, 1.0});
    for (double t : grid.times) {
      const StateVector psi = evolve(sys, t);
      const tfim::MajoranaContractions contr = tfim::contractions_at(modes, t);
      for (int l : grid.distances) {
        for (auto obs : {tfim::Observable::xx, tfim::Observable::zz_connected}) {
          double exact = 0.0;
          for (int i = 0; i < grid.L; ++i) exact += site_observable(sys, psi, obs, i, l);
          exact /= grid.L;
          out.push_back({obs, h, t, l, tfim::measure(contr, obs, l).value, exact});
        }
      }
    }
  }
  return out;
}

double max_error(const std::vector<OracleComparison>& comparisons) {
  double worst = 0.0;
  for (const auto& c : comparisons) worst = std::max(worst, c.error());
  return worst;
}

}  // namespace tfrqa::ed
