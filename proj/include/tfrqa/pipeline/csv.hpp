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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tfrqa/tfim/observables.hpp"

namespace tfrqa::pipeline {

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

/// Strict double parse of a whole token; throws std::invalid_argument.
double parse_double(std::string_view text);
int parse_int(std::string_view text);

/// Header `t,<obs>_<l>,...` then one row per time sample.
std::string encode_series_csv(const tfim::CorrelatorSeries& series);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};

/// Reads a numeric CSV with a header row.
CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(std::string_view text);

}  // namespace tfrqa::pipeline
