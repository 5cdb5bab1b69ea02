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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tfrqa/recurrence/time_series.hpp"
#include "tfrqa/tfim/quench.hpp"

namespace tfrqa::pipeline {

/// Parameter sweep over post-quench fields and correlation distances.
///
/// Stored on disk as `key = value` lines (lists comma separated, `#` starts a
/// comment). Recognized keys: L, t_max, dt, h, distances, observables,
/// window, rr, rescale, embed_dim, embed_delay, metric, images, out, threads.
/// `h` takes either a list or an inclusive range `lo:hi:step`; `window` is
/// `LO:HI` and selects the half-open interval [LO, HI).
struct SweepConfig {
  int L = 128;
  double t_max = 500.0;
  double dt = 0.1;
  std::vector<double> h_values;
  std::vector<int> distances{1, 2, 3, 6, 10, 20};
  std::vector<tfim::Observable> observables{tfim::Observable::xx};
  double t_lo = 300.0;
  double t_hi = 500.0;
  double rr = 0.10;
  bool rescale = false;
  recurrence::EmbeddingConfig embedding;
  bool images = false;
  std::filesystem::path out = "sweep_out";
  int threads = 0;

  SweepConfig();

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;

  tfim::QuenchSpec spec_for(double h) const { return {L, h, t_max, dt}; }
};

std::vector<std::string> config_keys();

/// Applies one `key = value` setting; throws std::invalid_argument on
/// unknown keys or malformed values.
void apply_setting(SweepConfig& cfg, std::string_view key, std::string_view value);

SweepConfig parse_config(std::istream& in, SweepConfig base = {});
SweepConfig load_config(const std::filesystem::path& path, SweepConfig base = {});

/// Canonical text form; parse_config(format_config(c)) reproduces c.
/// Without `include_runtime` the keys that cannot change results (out,
/// threads) are left out.
std::string format_config(const SweepConfig& cfg, bool include_runtime = true);

/// "lo:hi:step" (inclusive, values snapped to 1e-9) or "a,b,c".
std::vector<double> parse_h_values(std::string_view text);

}  // namespace tfrqa::pipeline
