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

#include <vector>

#include "tfrqa/tfim/quench.hpp"

namespace tfrqa::ed {

struct OracleComparison {
  tfim::Observable observable;
  double h;
  double t;
  int distance;
  double engine;
  double exact;
  double error() const;
};

struct OracleGrid {
  int L = 8;
  std::vector<double> fields{0.5, 1.0, 2.0};
  std::vector<double> times{0.0, 0.5, 1.0, 2.0};
  std::vector<int> distances{1, 2, 3};
};

/// Evaluates rho_xx and rho_zz_connected with the free-fermion engine and
/// with dense ED on every grid point.
std::vector<OracleComparison> compare_with_engine(const OracleGrid& grid = {});

double max_error(const std::vector<OracleComparison>& comparisons);

}  // namespace tfrqa::ed
