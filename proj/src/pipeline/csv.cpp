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

#include "tfrqa/pipeline/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tfrqa::pipeline {

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf.data(), end);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw std::invalid_argument("expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::string encode_series_csv(const tfim::CorrelatorSeries& series) {
  std::string out = "t";
  const std::string prefix(tfim::to_string(series.observable));
  for (int d : series.distances) out += "," + prefix + "_" + std::to_string(d);
  out += "\n";
  for (std::size_t n = 0; n < series.num_times(); ++n) {
    out += format_double(series.time(n));
    for (const auto& column : series.values) {
      out += ",";
      out += format_double(column[n]);
    }
    out += "\n";
  }
  return out;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line.empty()) continue;

    std::vector<std::string_view> cells;
    std::size_t cell_start = 0;
    while (true) {
      const auto comma = line.find(',', cell_start);
      cells.push_back(line.substr(cell_start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - cell_start));
      if (comma == std::string_view::npos) break;
      cell_start = comma + 1;
    }

    if (table.header.empty()) {
      for (auto c : cells) table.header.emplace_back(c);
      table.columns.resize(cells.size());
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw std::invalid_argument("csv line " + std::to_string(line_no) + " has " +
                                  std::to_string(cells.size()) + " fields, header has " +
                                  std::to_string(table.header.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      table.columns[c].push_back(parse_double(cells[c]));
    }
  }
  if (table.header.empty()) throw std::invalid_argument("csv has no header row");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_csv(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace tfrqa::pipeline
