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

#include "tfrqa/recurrence/recurrence_plot.hpp"
#include "tfrqa/recurrence/rqa.hpp"

namespace tfrqa::recurrence {

/// Binary PGM ("P5", maxval 255): recurrent cells black (0), others white
/// (255). Image origin is the lower-left corner, so pixel row r shows
/// R[T-1-r][*] and time runs up and to the right.
std::string encode_pgm(const RecurrencePlot& rp);

/// Rows of 0/1 separated by commas, row i of R on line i, no header.
std::string encode_matrix_csv(const RecurrencePlot& rp);

/// "length,count" header followed by one row per histogram entry.
std::string encode_histogram_csv(const LineHistogram& hist);

/// Writes bytes to `path`, throwing std::runtime_error with the path on failure.
void write_file(const std::filesystem::path& path, const std::string& bytes);

inline void write_pgm(const RecurrencePlot& rp, const std::filesystem::path& path) {
  write_file(path, encode_pgm(rp));
}

}  // namespace tfrqa::recurrence
