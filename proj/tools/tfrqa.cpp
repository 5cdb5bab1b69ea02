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

// Command-line front end: simulate correlators, build recurrence plots,
// run parameter sweeps and check the engine against exact diagonalization.

#include <omp.h>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tfrqa/ed/oracle_check.hpp"
#include "tfrqa/pipeline/config.hpp"
#include "tfrqa/pipeline/csv.hpp"
#include "tfrqa/pipeline/sweep.hpp"
#include "tfrqa/pipeline/window.hpp"
#include "tfrqa/recurrence/export.hpp"
#include "tfrqa/tfim/observables.hpp"

namespace fs = std::filesystem;
using namespace tfrqa;

namespace {

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("window must be LO:HI");
  return {pipeline::parse_double(text.substr(0, colon)),
          pipeline::parse_double(text.substr(colon + 1))};
}

struct SimulateArgs {
  pipeline::SweepConfig cfg;
  double h = 1.0;
  std::string observable = "xx";
  std::string distances = "1";
  std::optional<std::string> out;
};

int run_simulate(const SimulateArgs& args) {
  set_threads(args.cfg.threads);
  pipeline::SweepConfig cfg = args.cfg;
  pipeline::apply_setting(cfg, "distances", args.distances);
  const tfim::Observable obs = tfim::parse_observable(args.observable);
  const tfim::CorrelatorSeries series = tfim::simulate_series(cfg.spec_for(args.h), obs, cfg.distances);
  const std::string csv = pipeline::encode_series_csv(series);
  if (!args.out) {
    std::cout << csv;
    return 0;
  }
  fs::create_directories(*args.out);
  const fs::path path = fs::path(*args.out) /
                        ("series_" + std::string(tfim::to_string(obs)) + "_h" +
                         pipeline::format_double(args.h) + ".csv");
  recurrence::write_file(path, csv);
  std::cerr << "wrote " << path.string() << " (" << series.num_times() << " samples, max |Im| "
            << series.max_imag_residue << ")\n";
  return 0;
}

struct RpArgs {
  std::string input;
  std::string column;
  double rr = 0.10;
  std::optional<std::string> window;
  bool rescale = false;
  double h = 1.0;
  std::size_t embed_dim = 1;
  std::size_t embed_delay = 1;
  std::string metric = "euclidean";
  bool matrix_csv = false;
  std::string out = ".";
  int threads = 0;
};

int run_rp(const RpArgs& args) {
  set_threads(args.threads);
  const pipeline::CsvTable table = pipeline::read_csv(args.input);
  if (table.header.size() < 2 || table.header.front() != "t") {
    throw std::invalid_argument(args.input + ": expected a 't' column followed by series columns");
  }
  std::size_t col = 1;
  if (!args.column.empty()) {
    col = 0;
    for (std::size_t c = 1; c < table.header.size(); ++c) {
      if (table.header[c] == args.column) col = c;
    }
    if (col == 0) throw std::invalid_argument("column '" + args.column + "' not in " + args.input);
  }
  const auto& times = table.columns.front();
  if (times.size() < 2) throw std::invalid_argument("series needs at least two samples");
  const double dt = times[1] - times[0];

  recurrence::TimeSeries series(table.columns[col], dt, times.front());
  if (args.rescale) series = pipeline::rescale_time(series, args.h);
  if (args.window) {
    const auto [lo, hi] = parse_window(*args.window);
    series = pipeline::select_window(series, lo, hi);
  }

  recurrence::EmbeddingConfig embedding{args.embed_dim, args.embed_delay,
                                        recurrence::parse_metric(args.metric)};
  recurrence::RecurrencePlot plot;
  const pipeline::WindowAnalysis a = pipeline::analyze_window(series, args.rr, embedding, &plot);

  const fs::path out(args.out);
  fs::create_directories(out);
  recurrence::write_pgm(plot, out / "rp.pgm");
  recurrence::write_file(out / "diag_hist.csv", recurrence::encode_histogram_csv(a.rqa.diag_hist));
  recurrence::write_file(out / "vert_hist.csv", recurrence::encode_histogram_csv(a.rqa.vert_hist));
  if (args.matrix_csv) recurrence::write_file(out / "rp.csv", recurrence::encode_matrix_csv(plot));

  using pipeline::format_double;
  const std::string summary = "epsilon,DET,LAM,DIV,ENTR,RR_achieved,L_max,MEAN_ABS,IPR\n" +
                              format_double(a.epsilon) + "," + format_double(a.rqa.det) + "," +
                              format_double(a.rqa.lam) + "," + format_double(a.rqa.div) + "," +
                              format_double(a.rqa.entr) + "," + format_double(a.rqa.rr_achieved) +
                              "," + std::to_string(a.rqa.l_max) + "," + format_double(a.mean_abs) +
                              "," + format_double(a.ipr) + "\n";
  recurrence::write_file(out / "rqa.csv", summary);
  std::cout << summary;
  return 0;
}

int run_oracle_check() {
  const auto comparisons = ed::compare_with_engine();
  constexpr double kTolerance = 1e-8;
  int failures = 0;
  for (const auto& c : comparisons) {
    if (c.error() > kTolerance) {
      ++failures;
      std::printf("FAIL %s h=%g t=%g l=%d engine=%.15g ed=%.15g\n",
                  std::string(tfim::to_string(c.observable)).c_str(), c.h, c.t, c.distance,
                  c.engine, c.exact);
    }
  }
  std::printf("%zu comparisons, max |engine - ED| = %.3e (tolerance %.0e): %s\n",
              comparisons.size(), ed::max_error(comparisons), kTolerance,
              failures == 0 ? "PASS" : "FAIL");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quench dynamics of the transverse-field Ising chain and recurrence analysis"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  // simulate
  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Dump a correlator time series as CSV");
  simulate->add_option("--L", sim.cfg.L, "Number of sites (even, >= 4)")->capture_default_str();
  simulate->add_option("--h", sim.h, "Post-quench transverse field")->capture_default_str();
  simulate->add_option("--t_max", sim.cfg.t_max, "Final time")->capture_default_str();
  simulate->add_option("--dt", sim.cfg.dt, "Time step")->capture_default_str();
  simulate->add_option("--observables,--observable", sim.observable, "xx or zz")
      ->capture_default_str();
  simulate->add_option("--distances", sim.distances, "Comma-separated distances")
      ->capture_default_str();
  simulate->add_option("--out", sim.out, "Output directory (stdout if omitted)");
  simulate->add_option("--threads", sim.cfg.threads, "Worker threads, 0 = auto")
      ->capture_default_str();

  // rp
  RpArgs rp;
  auto* rp_cmd = app.add_subcommand("rp", "Recurrence plot and RQA of one series column");
  rp_cmd->add_option("input", rp.input, "Series CSV (t column first)")->required();
  rp_cmd->add_option("--column", rp.column, "Column name (default: first series column)");
  rp_cmd->add_option("--rr", rp.rr, "Target recurrence rate")->capture_default_str();
  rp_cmd->add_option("--window", rp.window, "Half-open time window LO:HI");
  rp_cmd->add_flag("--rescale", rp.rescale, "Rescale time by min(h, 1) before windowing");
  rp_cmd->add_option("--h", rp.h, "Field used by --rescale")->capture_default_str();
  rp_cmd->add_option("--embed_dim", rp.embed_dim, "Embedding dimension")->capture_default_str();
  rp_cmd->add_option("--embed_delay", rp.embed_delay, "Embedding delay (samples)")
      ->capture_default_str();
  rp_cmd->add_option("--metric", rp.metric, "euclidean or maximum")->capture_default_str();
  rp_cmd->add_flag("--matrix-csv", rp.matrix_csv, "Also dump R as rp.csv");
  rp_cmd->add_option("--out", rp.out, "Output directory")->capture_default_str();
  rp_cmd->add_option("--threads", rp.threads, "Worker threads, 0 = auto")->capture_default_str();

  // sweep
  std::optional<std::string> config_path;
  std::vector<std::pair<std::string, std::optional<std::string>>> overrides;
  for (const auto& key : pipeline::config_keys()) overrides.emplace_back(key, std::nullopt);
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep over h and distances");
  sweep->add_option("--config", config_path, "key = value configuration file");
  for (auto& [key, value] : overrides) {
    if (key == "rescale" || key == "images") {
      sweep->add_option("--" + key, value, "Override '" + key + "' (true/false)")
          ->expected(0, 1)
          ->default_str("true");
    } else {
      sweep->add_option("--" + key, value, "Override '" + key + "'");
    }
  }

  app.add_subcommand("oracle-check", "Compare the engine with exact diagonalization at L = 8");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (rp_cmd->parsed()) return run_rp(rp);
    if (sweep->parsed()) {
      pipeline::SweepConfig cfg;
      if (config_path) cfg = pipeline::load_config(*config_path, cfg);
      for (const auto& [key, value] : overrides) {
        if (value) pipeline::apply_setting(cfg, key, value->empty() ? "true" : *value);
      }
      const auto result = pipeline::run_sweep(cfg);
      std::cerr << "wrote " << result.rows.size() << (result.rows.size() == 1 ? " row" : " rows")
                << " to " << cfg.out.string() << "\n";
      return 0;
    }
    return run_oracle_check();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
