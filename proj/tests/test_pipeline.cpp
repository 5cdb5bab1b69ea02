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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "tfrqa/pipeline/config.hpp"
#include "tfrqa/pipeline/csv.hpp"
#include "tfrqa/pipeline/sweep.hpp"
#include "tfrqa/pipeline/window.hpp"
#include "tfrqa/recurrence/export.hpp"
#include "tfrqa/tfim/observables.hpp"

using namespace tfrqa;
namespace fs = std::filesystem;

namespace {

recurrence::TimeSeries ramp(std::size_t n, double dt) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i);
  return recurrence::TimeSeries(std::move(x), dt);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tfrqa_test_" + name);
  fs::remove_all(dir);
  return dir;
}

pipeline::SweepConfig small_config() {
  pipeline::SweepConfig cfg;
  cfg.L = 32;
  cfg.t_max = 60.0;
  cfg.h_values = {0.4, 0.9, 1.0, 1.7};
  cfg.distances = {1, 3};
  cfg.observables = {tfim::Observable::xx, tfim::Observable::zz_connected};
  cfg.t_lo = 40.0;
  cfg.t_hi = 60.0;
  cfg.images = true;
  return cfg;
}

}  // namespace

TEST_CASE("window selection on the time grid") {
  const recurrence::TimeSeries full = ramp(5001, 0.1);
  const recurrence::TimeSeries w = pipeline::select_window(full, 300.0, 500.0);
  CHECK(w.size() == 2000);
  CHECK(w.t0() == doctest::Approx(300.0));
  CHECK(w.scalar(0) == 3000.0);
  CHECK(w.scalar(1999) == 4999.0);

  const recurrence::TimeSeries all = pipeline::select_window(full, 0.0, 500.1);
  CHECK(all.data() == full.data());
  CHECK(pipeline::select_window(full, 0.0, 0.25).size() == 3);

  CHECK_THROWS_AS(pipeline::select_window(full, 3.0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(pipeline::select_window(full, 3.01, 3.05), std::invalid_argument);
  CHECK_THROWS_AS(pipeline::select_window(full, 400.0, 600.0), std::out_of_range);
  CHECK(pipeline::grid_index_at_or_after(300.0, 0.1) == 3000);
  CHECK(pipeline::grid_index_at_or_after(0.25, 0.1) == 3);
}

TEST_CASE("time rescaling by the Fermi velocity ratio") {
  const recurrence::TimeSeries full = ramp(10001, 0.1);
  for (double h : {1.0, 1.5, 3.0}) {
    const recurrence::TimeSeries same = pipeline::rescale_time(full, h);
    CHECK(same.data() == full.data());
    CHECK(same.t0() == full.t0());
  }
  const recurrence::TimeSeries half = pipeline::rescale_time(full, 0.5);
  CHECK(half.dt() == 0.1);
  const recurrence::TimeSeries w = pipeline::select_window(half, 300.0, 500.0);
  CHECK(w.size() == 2000);
  CHECK(w.scalar(0) == 6000.0);
  CHECK(w.scalar(1) == 6002.0);
  CHECK(w.scalar(1999) == 9998.0);

  // Zero-order hold: a factor 0.3 maps output sample m to floor(m / 0.3).
  const recurrence::TimeSeries slow = pipeline::rescale_time(ramp(101, 1.0), 0.3);
  CHECK(slow.size() == 31);
  CHECK(slow.scalar(10) == 33.0);

  const pipeline::IndexRange r = pipeline::rescale_source_range(3000, 5000, 0.5);
  CHECK(r.first == 6000);
  CHECK(r.last == 9998);
  const pipeline::IndexRange id = pipeline::rescale_source_range(3000, 5000, 2.0);
  CHECK(id.first == 3000);
  CHECK(id.last == 4999);
}

TEST_CASE("rescaled windows agree with the source range used for simulation") {
  for (double h : {0.15, 0.33, 0.5, 0.77, 0.95}) {
    const recurrence::TimeSeries full = ramp(40000, 0.1);
    const recurrence::TimeSeries w = pipeline::select_window(pipeline::rescale_time(full, h), 300.0, 500.0);
    const pipeline::IndexRange r = pipeline::rescale_source_range(3000, 5000, h);
    INFO("h = " << h);
    CHECK(w.scalar(0) == static_cast<double>(r.first));
    CHECK(w.scalar(w.size() - 1) == static_cast<double>(r.last));
  }
}

TEST_CASE("default configuration mirrors the phase-diagram sweep") {
  const pipeline::SweepConfig cfg;
  REQUIRE(cfg.h_values.size() == 59);
  CHECK(cfg.h_values.front() == 0.1);
  CHECK(cfg.h_values.back() == 3.0);
  CHECK(cfg.h_values[18] == 1.0);
  CHECK(cfg.distances == std::vector<int>{1, 2, 3, 6, 10, 20});
  CHECK(cfg.t_lo == 300.0);
  CHECK(cfg.t_hi == 500.0);
  CHECK(cfg.rr == 0.10);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("configuration files") {
  std::istringstream text(
      "# quench sweep\n"
      "L = 64\n"
      "h = 0.5, 1.0 ,2\n"
      "distances = 1,4\n"
      "observables = xx, zz\n"
      "window = 10:20   # late window\n"
      "rescale = yes\n"
      "embed_dim = 2\n"
      "embed_delay = 3\n"
      "metric = maximum\n"
      "\n"
      "threads = 2\n");
  const pipeline::SweepConfig cfg = pipeline::parse_config(text);
  CHECK(cfg.L == 64);
  CHECK(cfg.h_values == std::vector<double>{0.5, 1.0, 2.0});
  CHECK(cfg.distances == std::vector<int>{1, 4});
  CHECK(cfg.observables.size() == 2);
  CHECK(cfg.t_lo == 10.0);
  CHECK(cfg.t_hi == 20.0);
  CHECK(cfg.rescale);
  CHECK(cfg.embedding.dimension == 2);
  CHECK(cfg.embedding.delay == 3);
  CHECK(cfg.embedding.metric == recurrence::Metric::maximum);
  CHECK(cfg.threads == 2);
  CHECK(cfg.t_max == 500.0);

  std::istringstream again(pipeline::format_config(cfg));
  const pipeline::SweepConfig round = pipeline::parse_config(again);
  CHECK(pipeline::format_config(round) == pipeline::format_config(cfg));
  CHECK(pipeline::format_config(cfg, false).find("threads") == std::string::npos);
  for (const std::string& key : pipeline::config_keys()) {
    CHECK(pipeline::format_config(cfg).find(key + " = ") != std::string::npos);
  }

  std::istringstream unknown("colour = blue\n");
  CHECK_THROWS_WITH_AS(pipeline::parse_config(unknown), "config line 1: unknown config key 'colour'",
                       std::invalid_argument);
  std::istringstream malformed("L 64\n");
  CHECK_THROWS_AS(pipeline::parse_config(malformed), std::invalid_argument);
  pipeline::SweepConfig bad;
  CHECK_THROWS_AS(pipeline::apply_setting(bad, "rescale", "maybe"), std::invalid_argument);
  CHECK_THROWS_AS(pipeline::apply_setting(bad, "window", "300"), std::invalid_argument);
  CHECK_THROWS_AS(pipeline::apply_setting(bad, "L", "12.5"), std::invalid_argument);
  CHECK_THROWS_AS(pipeline::load_config("/nonexistent/sweep.conf"), std::runtime_error);

  bad.distances = {65};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  pipeline::SweepConfig late;
  late.t_hi = 600.0;
  CHECK_THROWS_AS(late.validate(), std::invalid_argument);
}

TEST_CASE("h ranges") {
  CHECK(pipeline::parse_h_values("0.5:1.0:0.25") == std::vector<double>{0.5, 0.75, 1.0});
  CHECK(pipeline::parse_h_values("2") == std::vector<double>{2.0});
  CHECK(pipeline::parse_h_values("0.1:0.3:0.1") == std::vector<double>{0.1, 0.2, 0.3});
  CHECK_THROWS_AS(pipeline::parse_h_values("1:0:0.1"), std::invalid_argument);
  CHECK_THROWS_AS(pipeline::parse_h_values("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(pipeline::parse_h_values(""), std::invalid_argument);
}

TEST_CASE("number formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0, 3.0}) {
    CHECK(pipeline::parse_double(pipeline::format_double(x)) == x);
  }
  CHECK(pipeline::format_double(0.5) == "0.5");
  CHECK(pipeline::format_double(3.0) == "3");
  CHECK_THROWS_AS(pipeline::parse_double("1.5x"), std::invalid_argument);
  CHECK_THROWS_AS(pipeline::parse_int("7 "), std::invalid_argument);

  const pipeline::CsvTable table = pipeline::parse_csv("t,xx_1\n0,0\n0.1,-0.25\n");
  CHECK(table.header == std::vector<std::string>{"t", "xx_1"});
  CHECK(table.columns[1] == std::vector<double>{0.0, -0.25});
  CHECK_THROWS_AS(pipeline::parse_csv("a,b\n1\n"), std::invalid_argument);
}

TEST_CASE("series CSV encoding") {
  const tfim::CorrelatorSeries s =
      tfim::simulate_series({16, 0.5, 0.2, 0.1}, tfim::Observable::xx, {1, 2});
  const std::string text = pipeline::encode_series_csv(s);
  CHECK(text.rfind("t,xx_1,xx_2\n0,0,0\n0.1,", 0) == 0);
  const pipeline::CsvTable table = pipeline::parse_csv(text);
  CHECK(table.columns[1] == s.column(1));
  CHECK(table.columns[2] == s.column(2));
}

TEST_CASE("single-point sweep produces one row and the matching bitmap") {
  pipeline::SweepConfig cfg = small_config();
  cfg.h_values = {0.7};
  cfg.distances = {3};
  cfg.observables = {tfim::Observable::xx};
  cfg.out = scratch("single");
  const pipeline::SweepResult result = pipeline::run_sweep(cfg);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].h == 0.7);
  CHECK(result.rows[0].distance == 3);

  const tfim::CorrelatorSeries full =
      tfim::simulate_series(cfg.spec_for(0.7), tfim::Observable::xx, {3});
  const recurrence::TimeSeries window =
      pipeline::select_window(recurrence::TimeSeries(full.column(3), cfg.dt), 40.0, 60.0);
  recurrence::RecurrencePlot plot;
  const pipeline::WindowAnalysis direct = pipeline::analyze_window(window, cfg.rr, {}, &plot);
  CHECK(slurp(cfg.out / "rp_xx_l3_h0.7.pgm") == recurrence::encode_pgm(plot));
  CHECK(direct.rqa.det == result.rows[0].analysis.rqa.det);

  const std::string csv = slurp(cfg.out / "sweep_xx.csv");
  CHECK(csv.rfind("h,l,DET,LAM,DIV,ENTR,RR_achieved,MEAN_ABS,IPR\n0.7,3,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  std::istringstream saved(slurp(cfg.out / "config.txt"));
  CHECK(pipeline::format_config(pipeline::parse_config(saved), false) ==
        pipeline::format_config(cfg, false));
}

TEST_CASE("sweep outputs are byte-identical across reruns and thread counts") {
  pipeline::SweepConfig cfg = small_config();
  std::vector<fs::path> dirs;
  for (int threads : {1, 3, 1}) {
    cfg.threads = threads;
    cfg.out = scratch("determinism_" + std::to_string(dirs.size()));
    pipeline::run_sweep(cfg);
    dirs.push_back(cfg.out);
  }
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dirs[0])) {
    ++files;
    const std::string name = entry.path().filename().string();
    INFO(name);
    CHECK(slurp(dirs[1] / name) == slurp(entry.path()));
    CHECK(slurp(dirs[2] / name) == slurp(entry.path()));
  }
  CHECK(files == 2 + 1 + 4 * 2 * 2);
}

TEST_CASE("rows are ordered by observable, distance and field") {
  pipeline::SweepConfig cfg = small_config();
  const pipeline::SweepResult result = pipeline::compute_sweep(cfg);
  REQUIRE(result.rows.size() == 16);
  CHECK(result.rows[0].observable == tfim::Observable::xx);
  CHECK(result.rows[0].distance == 1);
  CHECK(result.rows[3].h == 1.7);
  CHECK(result.rows[4].distance == 3);
  CHECK(result.rows[8].observable == tfim::Observable::zz_connected);
  for (const auto& row : result.rows) {
    CHECK(row.analysis.rqa.rr_achieved >= cfg.rr);
    CHECK(row.analysis.mean_abs >= 0.0);
  }
  const std::string xx = pipeline::encode_sweep_csv(result, tfim::Observable::xx);
  CHECK(std::count(xx.begin(), xx.end(), '\n') == 9);
}

TEST_CASE("rescaled sweep reports the cell that lacks data") {
  pipeline::SweepConfig cfg = small_config();
  cfg.rescale = true;
  cfg.h_values = {1.5, 0.5};
  CHECK_THROWS_WITH_AS(pipeline::compute_sweep(cfg),
                       doctest::Contains("cell (h=0.5, l=1): needs simulated data up to t = 119.8"),
                       std::runtime_error);
  cfg.t_max = 120.0;
  CHECK_NOTHROW(pipeline::compute_sweep(cfg));
}

TEST_CASE("rescaling sharpens the nearest-neighbour change at the critical field") {
  pipeline::SweepConfig cfg;
  cfg.t_max = 625.0;
  cfg.distances = {1};
  auto det_at = [&](double h, bool rescale) {
    cfg.rescale = rescale;
    return pipeline::analyze_window(pipeline::cell_window(cfg, tfim::Observable::xx, h, 1), cfg.rr,
                                    cfg.embedding)
        .rqa.det;
  };
  const double critical = det_at(1.0, false);
  CHECK(det_at(1.0, true) == critical);
  const double plain = critical - det_at(0.8, false);
  const double rescaled = critical - det_at(0.8, true);
  CHECK(plain > 0.0);
  CHECK(rescaled > 1.5 * plain);
}
