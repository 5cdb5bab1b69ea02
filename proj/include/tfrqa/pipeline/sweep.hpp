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
#include <optional>
#include <string>
#include <vector>

#include "tfrqa/pipeline/config.hpp"
#include "tfrqa/recurrence/recurrence_plot.hpp"
#include "tfrqa/recurrence/rqa.hpp"

namespace tfrqa::pipeline {

/// Everything extracted from one analysis window.
struct WindowAnalysis {
  recurrence::RQAReport rqa;
  double epsilon = 0.0;
  double mean_abs = 0.0;
  double ipr = 0.0;
};

/// Embeds, thresholds at `rr` and runs RQA, plus the two spectral baselines on
/// the scalar window. Optionally hands back the recurrence plot.
WindowAnalysis analyze_window(const recurrence::TimeSeries& window, double rr,
                              const recurrence::EmbeddingConfig& embedding,
                              recurrence::RecurrencePlot* plot_out = nullptr);

struct SweepRow {
  tfim::Observable observable = tfim::Observable::xx;
  double h = 0.0;
  int distance = 0;
  WindowAnalysis analysis;
};

struct SweepResult {
  /// Sorted by (observable, distance, h).
  std::vector<SweepRow> rows;
};

/// Windowed (optionally rescaled) series of one (h, l) cell, exactly as the
/// sweep analyzes it.
recurrence::TimeSeries cell_window(const SweepConfig& cfg, tfim::Observable obs, double h,
                                   int distance);

/// Runs every (observable, h) group in parallel. When `image_dir` is set, one
/// recurrence-plot PGM per (observable, h, l) is written there. Failures abort
/// with the offending (h, l) in the message.
SweepResult compute_sweep(const SweepConfig& cfg,
                          const std::optional<std::filesystem::path>& image_dir = std::nullopt);

/// Columns h,l,DET,LAM,DIV,ENTR,RR_achieved,MEAN_ABS,IPR for one observable.
std::string encode_sweep_csv(const SweepResult& result, tfim::Observable obs);

std::string image_name(tfim::Observable obs, int distance, double h);

/// compute_sweep plus outputs under cfg.out: sweep_<obs>.csv per observable,
/// config.txt with the resolved configuration and, if cfg.images, the PGMs.
SweepResult run_sweep(const SweepConfig& cfg);

}  // namespace tfrqa::pipeline
