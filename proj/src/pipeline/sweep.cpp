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

#include "tfrqa/pipeline/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tfrqa/pipeline/csv.hpp"
#include "tfrqa/pipeline/window.hpp"
#include "tfrqa/recurrence/export.hpp"
#include "tfrqa/spectral/spectrum.hpp"
#include "tfrqa/tfim/observables.hpp"

namespace tfrqa::pipeline {

namespace {

struct SampleRange {
  std::size_t first = 0;
  std::size_t count = 0;
};

std::string cell_label(tfim::Observable obs, double h, int distance) {
  return std::string(tfim::to_string(obs)) + " cell (h=" + format_double(h) +
         ", l=" + std::to_string(distance) + ")";
}

// Grid samples of the original simulation that one (h) group has to produce.
SampleRange required_samples(const SweepConfig& cfg, double h) {
  const std::size_t n_lo = grid_index_at_or_after(cfg.t_lo, cfg.dt);
  const std::size_t n_hi = grid_index_at_or_after(cfg.t_hi, cfg.dt);
  std::size_t first = n_lo;
  std::size_t last = n_hi - 1;
  if (cfg.rescale) {
    const IndexRange src = rescale_source_range(n_lo, n_hi, h);
    first = src.first;
    last = src.last;
  }
  const std::size_t available = cfg.spec_for(h).num_samples();
  if (last >= available) {
    throw std::out_of_range("needs simulated data up to t = " +
                            format_double(static_cast<double>(last) * cfg.dt) +
                            " but t_max = " + format_double(cfg.t_max));
  }
  return {first, last - first + 1};
}

recurrence::TimeSeries window_from(const SweepConfig& cfg, const tfim::CorrelatorSeries& series,
                                   double h, int distance) {
  recurrence::TimeSeries raw(series.column(distance), cfg.dt, series.time(0));
  if (cfg.rescale) raw = rescale_time(raw, h);
  return select_window(raw, cfg.t_lo, cfg.t_hi);
}

}  // namespace

WindowAnalysis analyze_window(const recurrence::TimeSeries& window, double rr,
                              const recurrence::EmbeddingConfig& embedding,
                              recurrence::RecurrencePlot* plot_out) {
  const recurrence::TimeSeries trajectory = recurrence::embed(window, embedding);
  const recurrence::DistanceMatrix distances =
      recurrence::distance_matrix(trajectory, embedding.metric);
  recurrence::RecurrencePlot plot = recurrence::threshold_by_rate(distances, rr);

  WindowAnalysis out;
  out.rqa = recurrence::rqa(plot);
  out.epsilon = plot.epsilon();
  out.mean_abs = spectral::mean_abs(window);
  out.ipr = spectral::ipr(window).ipr;
  if (plot_out != nullptr) *plot_out = std::move(plot);
  return out;
}

recurrence::TimeSeries cell_window(const SweepConfig& cfg, tfim::Observable obs, double h,
                                   int distance) {
  const SampleRange range = required_samples(cfg, h);
  const tfim::CorrelatorSeries series =
      tfim::simulate_range(cfg.spec_for(h), obs, {distance}, range.first, range.count);
  return window_from(cfg, series, h, distance);
}

std::string image_name(tfim::Observable obs, int distance, double h) {
  return "rp_" + std::string(tfim::to_string(obs)) + "_l" + std::to_string(distance) + "_h" +
         format_double(h) + ".pgm";
}

SweepResult compute_sweep(const SweepConfig& cfg,
                          const std::optional<std::filesystem::path>& image_dir) {
  cfg.validate();

  struct Group {
    tfim::Observable observable;
    double h;
  };
  std::vector<Group> groups;
  for (auto obs : cfg.observables) {
    for (double h : cfg.h_values) groups.push_back({obs, h});
  }
  const std::size_t n_dist = cfg.distances.size();
  std::vector<SweepRow> rows(groups.size() * n_dist);
  std::vector<std::string> errors(groups.size());

  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
  const auto n_groups = static_cast<std::ptrdiff_t>(groups.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t g = 0; g < n_groups; ++g) {
    const Group group = groups[static_cast<std::size_t>(g)];
    int current = cfg.distances.front();
    try {
      const SampleRange range = required_samples(cfg, group.h);
      const tfim::CorrelatorSeries series = tfim::simulate_range(
          cfg.spec_for(group.h), group.observable, cfg.distances, range.first, range.count);
      for (std::size_t d = 0; d < n_dist; ++d) {
        current = cfg.distances[d];
        const recurrence::TimeSeries window = window_from(cfg, series, group.h, current);
        recurrence::RecurrencePlot plot;
        SweepRow& row = rows[static_cast<std::size_t>(g) * n_dist + d];
        row.observable = group.observable;
        row.h = group.h;
        row.distance = current;
        row.analysis = analyze_window(window, cfg.rr, cfg.embedding,
                                      image_dir ? &plot : nullptr);
        if (image_dir) {
          recurrence::write_pgm(plot, *image_dir / image_name(group.observable, current, group.h));
        }
      }
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(g)] =
          cell_label(group.observable, group.h, current) + ": " + e.what();
    }
  }
  for (const auto& err : errors) {
    if (!err.empty()) throw std::runtime_error("sweep failed at " + err);
  }

  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.observable != b.observable) return a.observable < b.observable;
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.h < b.h;
  });
  return {std::move(rows)};
}

std::string encode_sweep_csv(const SweepResult& result, tfim::Observable obs) {
  std::string out = "h,l,DET,LAM,DIV,ENTR,RR_achieved,MEAN_ABS,IPR\n";
  for (const auto& row : result.rows) {
    if (row.observable != obs) continue;
    const auto& a = row.analysis;
    out += format_double(row.h) + "," + std::to_string(row.distance) + "," +
           format_double(a.rqa.det) + "," + format_double(a.rqa.lam) + "," +
           format_double(a.rqa.div) + "," + format_double(a.rqa.entr) + "," +
           format_double(a.rqa.rr_achieved) + "," + format_double(a.mean_abs) + "," +
           format_double(a.ipr) + "\n";
  }
  return out;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  std::filesystem::create_directories(cfg.out);
  std::optional<std::filesystem::path> image_dir;
  if (cfg.images) image_dir = cfg.out;

  SweepResult result = compute_sweep(cfg, image_dir);
  for (auto obs : cfg.observables) {
    recurrence::write_file(cfg.out / ("sweep_" + std::string(tfim::to_string(obs)) + ".csv"),
                           encode_sweep_csv(result, obs));
  }
  recurrence::write_file(cfg.out / "config.txt", format_config(cfg, false));
  return result;
}

}  // namespace tfrqa::pipeline
