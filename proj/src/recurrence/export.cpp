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

#include "tfrqa/recurrence/export.hpp"

#include <fstream>
#include <stdexcept>

namespace tfrqa::recurrence {

std::string encode_pgm(const RecurrencePlot& rp) {
  const std::size_t n = rp.size();
  std::string out = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  out.reserve(out.size() + n * n);
  for (std::size_t row = 0; row < n; ++row) {
    const std::size_t i = n - 1 - row;
    for (std::size_t j = 0; j < n; ++j) {
      out.push_back(rp(i, j) ? static_cast<char>(0) : static_cast<char>(255));
    }
  }
  return out;
}

std::string encode_matrix_csv(const RecurrencePlot& rp) {
  const std::size_t n = rp.size();
  std::string out;
  out.reserve(2 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out.push_back(',');
      out.push_back(rp(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::string encode_histogram_csv(const LineHistogram& hist) {
  std::string out = "length,count\n";
  for (const auto& [length, count] : hist) {
    out += std::to_string(length) + "," + std::to_string(count) + "\n";
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace tfrqa::recurrence
