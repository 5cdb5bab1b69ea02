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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "tfrqa/recurrence/export.hpp"
#include "tfrqa/recurrence/recurrence_plot.hpp"
#include "tfrqa/recurrence/rqa.hpp"
#include "tfrqa/recurrence/time_series.hpp"

using namespace tfrqa::recurrence;

namespace {

TimeSeries white_noise(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> x(n);
  for (double& v : x) v = g(rng);
  return TimeSeries(std::move(x), 0.1);
}

TimeSeries dyadic_series(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 1023);
  std::vector<double> x(n);
  for (double& v : x) v = pick(rng) / 8.0;
  return TimeSeries(std::move(x));
}

RecurrencePlot plot_of(const TimeSeries& x, double rr, const EmbeddingConfig& cfg = {}) {
  return threshold_by_rate(distance_matrix(embed(x, cfg), cfg.metric), rr);
}

RecurrencePlot checkerboard(std::size_t n) {
  std::vector<std::uint8_t> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = (i + j) % 2 == 0 ? 1 : 0;
  }
  return RecurrencePlot::from_cells(n, cells);
}

double tie_mass(const DistanceMatrix& d, double eps) {
  std::size_t ties = 0;
  const std::vector<double> upper = d.upper_triangle();
  for (double v : upper) ties += v == eps ? 1 : 0;
  return static_cast<double>(ties) / static_cast<double>(upper.size());
}

}  // namespace

TEST_CASE("delay embedding") {
  const TimeSeries x4(std::vector<double>{1, 2, 3, 4});
  const TimeSeries one = embed(x4, {});
  CHECK(one.data() == x4.data());
  CHECK(one.dim() == 1);

  const TimeSeries e = embed(x4, {2, 1});
  REQUIRE(e.size() == 3);
  CHECK(e.data() == std::vector<double>{1, 2, 2, 3, 3, 4});

  const TimeSeries x5(std::vector<double>{1, 2, 3, 4, 5}, 0.5, 10.0);
  const TimeSeries e2 = embed(x5, {2, 2});
  REQUIRE(e2.size() == 3);
  CHECK(e2.data() == std::vector<double>{1, 3, 2, 4, 3, 5});
  CHECK(e2.dt() == 0.5);
  CHECK(e2.t0() == 10.0);

  CHECK_THROWS_AS(embed(x4, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(embed(x4, {0, 1}), std::invalid_argument);
  CHECK(EmbeddingConfig{3, 2}.embedded_length(10) == 6);
}

TEST_CASE("distance matrices") {
  const DistanceMatrix zero = distance_matrix(TimeSeries(std::vector<double>(4, 2.5)));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(zero(i, j) == 0.0);
  }
  const DistanceMatrix pair = distance_matrix(TimeSeries(std::vector<double>{0, 3}));
  CHECK(pair(0, 1) == 3.0);
  CHECK(pair(1, 0) == 3.0);

  const TimeSeries vectors(std::vector<double>{0, 0, 3, 4}, 2, 1.0, 0.0);
  CHECK(distance_matrix(vectors, Metric::euclidean)(0, 1) == 5.0);
  CHECK(distance_matrix(vectors, Metric::maximum)(0, 1) == 4.0);
  CHECK(parse_metric("maximum") == Metric::maximum);
  CHECK(to_string(Metric::euclidean) == "euclidean");
  CHECK_THROWS_AS(parse_metric("manhattan"), std::invalid_argument);
}

TEST_CASE("nearest-rank thresholding") {
  CHECK(nearest_rank_quantile({4, 1, 3, 2}, 0.5) == 2.0);
  CHECK(nearest_rank_quantile({4, 1, 3, 2}, 0.26) == 2.0);
  CHECK(nearest_rank_quantile({4, 1, 3, 2}, 0.25) == 1.0);
  CHECK_THROWS_AS(nearest_rank_quantile({4, 1, 3, 2}, 1.0), std::invalid_argument);
  CHECK(nearest_rank_quantile({0.1 * 3}, 0.1) == doctest::Approx(0.3));

  // Three points on a line have distances {1, 2, 3}; a fourth point at 10 adds larger ones.
  DistanceMatrix d(3);
  const double values[3][3] = {{0, 1, 2}, {1, 0, 4}, {2, 4, 0}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) d(i, j) = values[i][j];
  }
  const RecurrencePlot rp = threshold_by_rate(d, 0.5);
  CHECK(rp.epsilon() == 2.0);
  CHECK(rp.rr_target() == 0.5);
  CHECK(rp.rr_achieved() == doctest::Approx(2.0 / 3.0));

  const RecurrencePlot constant = plot_of(TimeSeries(std::vector<double>(7, -1.0)), 0.1);
  CHECK(constant.epsilon() == 0.0);
  for (std::uint8_t c : constant.cells()) CHECK(c == 1);
  CHECK(constant.rr_achieved() == 1.0);

  CHECK_THROWS_AS(threshold_by_rate(DistanceMatrix(1), 0.1), std::invalid_argument);
  CHECK_THROWS_AS(threshold_by_rate(d, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(threshold_by_rate(d, 1.5), std::invalid_argument);
}

TEST_CASE("recurrence rate control on white noise") {
  const TimeSeries noise = white_noise(2000, 20240601);
  const RecurrencePlot rp = plot_of(noise, 0.10);
  CHECK(rp.rr_achieved() >= 0.10);
  CHECK(rp.rr_achieved() <= 0.101);
  const RQAReport report = rqa(rp);
  CHECK(report.det < 0.25);
  CHECK(report.lam < 0.3);
}

TEST_CASE("recurrence plots are symmetric with a unit diagonal") {
  const RecurrencePlot rp = plot_of(white_noise(300, 7), 0.2, {3, 2, Metric::maximum});
  for (std::size_t i = 0; i < rp.size(); ++i) {
    CHECK(rp(i, i));
    for (std::size_t j = 0; j < i; ++j) CHECK(rp(i, j) == rp(j, i));
  }
  CHECK_THROWS_AS(RecurrencePlot::from_cells(2, {1, 1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RecurrencePlot::from_cells(2, {0, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RecurrencePlot::from_cells(2, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("line histograms") {
  SUBCASE("all-ones plot") {
    const RecurrencePlot rp = plot_of(TimeSeries(std::vector<double>(5, 1.0)), 0.1);
    CHECK(diagonal_histogram(rp) == LineHistogram{{1, 2}, {2, 2}, {3, 2}, {4, 2}});
    CHECK(vertical_histogram(rp) == LineHistogram{{5, 5}});
    CHECK(diagonal_histogram(rp, 0) == LineHistogram{{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 1}});
    CHECK(diagonal_histogram(rp, 3) == LineHistogram{{1, 2}, {2, 2}});
  }
  SUBCASE("checkerboard at T = 6") {
    // Offsets +-2 hold full diagonals of length 4, offsets +-4 of length 2; odd
    // offsets are empty. Every column alternates, so vertical runs have length 1.
    const RecurrencePlot rp = checkerboard(6);
    CHECK(diagonal_histogram(rp) == LineHistogram{{2, 2}, {4, 2}});
    CHECK(vertical_histogram(rp) == LineHistogram{{1, 18}});
    const RQAReport report = rqa(rp);
    CHECK(report.det == 1.0);
    CHECK(report.lam == 0.0);
    CHECK(report.l_max == 4);
    CHECK(report.div == 0.25);
    CHECK(report.entr == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    const TimeSeries period2(std::vector<double>{0, 1, 0, 1, 0, 1});
    const RecurrencePlot from_signal = plot_of(period2, 0.4);
    CHECK(from_signal.cells() == rp.cells());
    CHECK(from_signal.rr_achieved() == doctest::Approx(0.4));
  }
}

TEST_CASE("closed-form quantifiers for a constant signal") {
  const RQAReport five = rqa(plot_of(TimeSeries(std::vector<double>(5, 3.0)), 0.1));
  CHECK(std::abs(five.det - 0.9) < 1e-12);
  CHECK(std::abs(five.lam - 1.0) < 1e-12);
  CHECK(std::abs(five.div - 0.25) < 1e-12);
  CHECK(std::abs(five.entr - std::log(3.0)) < 1e-12);
  CHECK(five.rr_achieved == 1.0);

  for (std::size_t T = 3; T <= 40; ++T) {
    const RQAReport r = rqa(plot_of(TimeSeries(std::vector<double>(T, 0.0)), 0.5));
    const double t = static_cast<double>(T);
    INFO("T = " << T);
    CHECK(r.det == doctest::Approx(1.0 - 2.0 / (t * (t - 1.0))).epsilon(1e-13));
    CHECK(r.div == doctest::Approx(1.0 / (t - 1.0)).epsilon(1e-13));
    CHECK(r.entr == doctest::Approx(std::log(t - 2.0)).epsilon(1e-13));
    CHECK(r.lam == 1.0);
    CHECK(r.l_max == T - 1);
  }
}

TEST_CASE("degenerate lengths give finite reports") {
  for (std::size_t T : {2, 3}) {
    for (const std::vector<double>& x :
         {std::vector<double>(T, 0.0), std::vector<double>{0.0, 1.0, 5.0}}) {
      const std::vector<double> trimmed(x.begin(), x.begin() + static_cast<long>(T));
      const RQAReport r = rqa(plot_of(TimeSeries(trimmed), 0.1));
      INFO("T = " << T);
      CHECK(std::isfinite(r.det));
      CHECK(std::isfinite(r.lam));
      CHECK(std::isfinite(r.div));
      CHECK(std::isfinite(r.entr));
      CHECK(r.det >= 0.0);
      CHECK(r.det <= 1.0);
      CHECK(r.entr >= 0.0);
    }
  }
  const RQAReport two = rqa(plot_of(TimeSeries(std::vector<double>{0.0, 1.0}), 0.5));
  CHECK(two.det == 0.0);
  CHECK(two.lam == 1.0);
  CHECK(two.div == 1.0);
  CHECK(two.entr == 0.0);
  CHECK(two.l_max == 1);
}

TEST_CASE("quantifier bounds hold on random inputs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> rr_pick(0.01, 0.6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t T = 10 + static_cast<std::size_t>(trial) * 7;
    const RQAReport r = rqa(plot_of(white_noise(T, 1000 + trial), rr_pick(rng)));
    CHECK(r.det >= 0.0);
    CHECK(r.det <= 1.0);
    CHECK(r.lam >= 0.0);
    CHECK(r.lam <= 1.0);
    CHECK(r.entr >= 0.0);
    CHECK(r.div == 1.0 / static_cast<double>(r.l_max));
  }
}

TEST_CASE("recurrence rate is monotone and bounded by the tie mass") {
  const TimeSeries x = dyadic_series(200, 5);
  const DistanceMatrix d = distance_matrix(x);
  double previous = 0.0;
  for (int step = 1; step <= 60; ++step) {
    const double target = 0.01 * step;
    const RecurrencePlot rp = threshold_by_rate(d, target);
    CHECK(rp.rr_achieved() >= previous);
    CHECK(rp.rr_achieved() >= target - 1e-12);
    CHECK(rp.rr_achieved() <= target + tie_mass(d, rp.epsilon()) + 1e-12);
    previous = rp.rr_achieved();
  }
}

TEST_CASE("thresholding is shift invariant and scale equivariant") {
  for (std::uint64_t seed : {1, 2, 3}) {
    for (const EmbeddingConfig& cfg : {EmbeddingConfig{}, EmbeddingConfig{2, 3, Metric::euclidean},
                                       EmbeddingConfig{3, 1, Metric::maximum}}) {
      const TimeSeries x = dyadic_series(400, seed);
      std::vector<double> shifted = x.data();
      std::vector<double> scaled = x.data();
      for (double& v : shifted) v += 3.0;
      for (double& v : scaled) v *= 4.0;

      const RecurrencePlot base = plot_of(x, 0.1, cfg);
      const RecurrencePlot moved = plot_of(TimeSeries(shifted), 0.1, cfg);
      const RecurrencePlot grown = plot_of(TimeSeries(scaled), 0.1, cfg);
      CHECK(moved.cells() == base.cells());
      CHECK(moved.epsilon() == base.epsilon());
      CHECK(grown.cells() == base.cells());
      CHECK(grown.epsilon() == 4.0 * base.epsilon());

      const RQAReport a = rqa(base);
      const RQAReport b = rqa(moved);
      CHECK(a.det == b.det);
      CHECK(a.lam == b.lam);
      CHECK(a.entr == b.entr);
      CHECK(a.diag_hist == b.diag_hist);
      CHECK(a.vert_hist == b.vert_hist);
    }
  }
}

TEST_CASE("a pure sine is strongly deterministic") {
  // Twenty periods of 100 samples under the trivial embedding, and a faster
  // sine resolved by a quarter-period delay embedding.
  std::vector<double> slow(2000);
  std::vector<double> fast(2000);
  for (std::size_t n = 0; n < slow.size(); ++n) {
    slow[n] = std::sin(2.0 * std::numbers::pi * static_cast<double>(n) / 100.0);
    fast[n] = std::sin(0.1 * static_cast<double>(n));
  }
  const RQAReport r = rqa(plot_of(TimeSeries(slow, 0.1), 0.10));
  CHECK(r.det > 0.95);
  CHECK(r.rr_achieved >= 0.10);
  const RQAReport e = rqa(plot_of(TimeSeries(fast, 0.1), 0.10, {2, 16, Metric::euclidean}));
  CHECK(e.det > 0.95);
}

TEST_CASE("bitmap and text export") {
  const RecurrencePlot ones = RecurrencePlot::from_cells(2, {1, 1, 1, 1});
  CHECK(encode_pgm(ones) == std::string("P5\n2 2\n255\n") + std::string(4, '\0'));

  const RecurrencePlot identity = RecurrencePlot::from_cells(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
  const std::string w(1, '\xff');
  const std::string b(1, '\0');
  CHECK(encode_pgm(identity) == "P5\n3 3\n255\n" + w + w + b + w + b + w + b + w + w);

  const RecurrencePlot board = checkerboard(3);
  CHECK(encode_matrix_csv(board) == "1,0,1\n0,1,0\n1,0,1\n");
  CHECK(encode_histogram_csv({{2, 5}, {7, 1}}) == "length,count\n2,5\n7,1\n");
  CHECK(encode_histogram_csv({}) == "length,count\n");
  CHECK_THROWS_AS(write_file("/nonexistent-dir/rp.pgm", "x"), std::runtime_error);
}
