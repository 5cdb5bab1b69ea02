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

#include "tfrqa/pipeline/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tfrqa/pipeline/csv.hpp"

namespace tfrqa::pipeline {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool parse_bool(std::string_view text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw std::invalid_argument("expected a boolean, got '" + std::string(text) + "'");
}

std::size_t parse_count(std::string_view text) {
  const int v = parse_int(text);
  if (v < 1) throw std::invalid_argument("expected a positive integer, got '" + std::string(text) + "'");
  return static_cast<std::size_t>(v);
}

template <typename T>
std::string join(const std::vector<T>& items, auto&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ",";
    out += fmt(items[i]);
  }
  return out;
}

}  // namespace

SweepConfig::SweepConfig() : h_values(parse_h_values("0.1:3.0:0.05")) {}

void SweepConfig::validate() const {
  spec_for(1.0).validate();
  if (h_values.empty()) throw std::invalid_argument("sweep needs at least one h value");
  for (double h : h_values) {
    if (!(h > 0.0)) throw std::invalid_argument("h values must be positive, got " + format_double(h));
  }
  if (distances.empty()) throw std::invalid_argument("sweep needs at least one distance");
  for (int d : distances) {
    if (d < 1 || d > L / 2) {
      throw std::invalid_argument("distance " + std::to_string(d) + " outside [1, L/2]");
    }
  }
  if (observables.empty()) throw std::invalid_argument("sweep needs at least one observable");
  if (!(t_lo >= 0.0 && t_lo < t_hi)) throw std::invalid_argument("window needs 0 <= t_lo < t_hi");
  if (t_hi > t_max + 1e-9 * std::max(1.0, t_max)) {
    throw std::invalid_argument("window end " + format_double(t_hi) + " exceeds t_max " +
                                format_double(t_max));
  }
  const double samples = std::ceil(t_hi / dt - 1e-9) - std::ceil(t_lo / dt - 1e-9);
  if (samples < 2) throw std::invalid_argument("window must contain at least two samples");
  if (!(rr > 0.0 && rr < 1.0)) throw std::invalid_argument("rr must lie in (0, 1)");
  embedding.embedded_length(static_cast<std::size_t>(samples));
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

std::vector<std::string> config_keys() {
  return {"L",  "t_max",     "dt",          "h",      "distances", "observables", "window", "rr",
          "rescale", "embed_dim", "embed_delay", "metric", "images",    "out",         "threads"};
}

std::vector<double> parse_h_values(std::string_view text) {
  text = trim(text);
  std::vector<double> values;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("h range must be lo:hi:step, got '" + std::string(text) + "'");
    }
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0) || hi < lo) {
      throw std::invalid_argument("h range needs step > 0 and hi >= lo");
    }
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) {
      // Snap to 1e-9 so 0.1 + 18 * 0.05 prints as 1.
      values.push_back(std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9);
    }
  } else {
    for (auto part : split(text, ',')) {
      if (!part.empty()) values.push_back(parse_double(part));
    }
  }
  if (values.empty()) throw std::invalid_argument("empty h list");
  return values;
}

void apply_setting(SweepConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "L") {
    cfg.L = parse_int(value);
  } else if (key == "t_max") {
    cfg.t_max = parse_double(value);
  } else if (key == "dt") {
    cfg.dt = parse_double(value);
  } else if (key == "h") {
    cfg.h_values = parse_h_values(value);
  } else if (key == "distances") {
    cfg.distances.clear();
    for (auto part : split(value, ',')) cfg.distances.push_back(parse_int(part));
  } else if (key == "observables") {
    cfg.observables.clear();
    for (auto part : split(value, ',')) cfg.observables.push_back(tfim::parse_observable(part));
  } else if (key == "window") {
    const auto parts = split(value, ':');
    if (parts.size() != 2) {
      throw std::invalid_argument("window must be LO:HI, got '" + std::string(value) + "'");
    }
    cfg.t_lo = parse_double(parts[0]);
    cfg.t_hi = parse_double(parts[1]);
  } else if (key == "rr") {
    cfg.rr = parse_double(value);
  } else if (key == "rescale") {
    cfg.rescale = parse_bool(value);
  } else if (key == "embed_dim") {
    cfg.embedding.dimension = parse_count(value);
  } else if (key == "embed_delay") {
    cfg.embedding.delay = parse_count(value);
  } else if (key == "metric") {
    cfg.embedding.metric = recurrence::parse_metric(value);
  } else if (key == "images") {
    cfg.images = parse_bool(value);
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else if (key == "threads") {
    cfg.threads = parse_int(value);
  } else {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
}

SweepConfig parse_config(std::istream& in, SweepConfig base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    try {
      apply_setting(base, view.substr(0, eq), view.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

SweepConfig load_config(const std::filesystem::path& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path.string() + "'");
  return parse_config(in, std::move(base));
}

std::string format_config(const SweepConfig& cfg, bool include_runtime) {
  std::ostringstream os;
  os << "L = " << cfg.L << "\n";
  os << "t_max = " << format_double(cfg.t_max) << "\n";
  os << "dt = " << format_double(cfg.dt) << "\n";
  os << "h = " << join(cfg.h_values, [](double h) { return format_double(h); }) << "\n";
  os << "distances = " << join(cfg.distances, [](int d) { return std::to_string(d); }) << "\n";
  os << "observables = "
     << join(cfg.observables, [](tfim::Observable o) { return std::string(tfim::to_string(o)); })
     << "\n";
  os << "window = " << format_double(cfg.t_lo) << ":" << format_double(cfg.t_hi) << "\n";
  os << "rr = " << format_double(cfg.rr) << "\n";
  os << "rescale = " << (cfg.rescale ? "true" : "false") << "\n";
  os << "embed_dim = " << cfg.embedding.dimension << "\n";
  os << "embed_delay = " << cfg.embedding.delay << "\n";
  os << "metric = " << recurrence::to_string(cfg.embedding.metric) << "\n";
  os << "images = " << (cfg.images ? "true" : "false") << "\n";
  if (include_runtime) {
    os << "out = " << cfg.out.string() << "\n";
    os << "threads = " << cfg.threads << "\n";
  }
  return os.str();
}

}  // namespace tfrqa::pipeline
