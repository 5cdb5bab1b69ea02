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

#include "tfrqa/tfim/contractions.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tfrqa::tfim {

using cplx = std::complex<double>;

MajoranaContractions::MajoranaContractions(int L, double time)
    : L_(L),
      time_(time),
      aa_(static_cast<std::size_t>(L + 1)),
      bb_(static_cast<std::size_t>(L + 1)),
      ba_(static_cast<std::size_t>(L + 1)) {}

std::size_t MajoranaContractions::index(int r) const {
  if (std::abs(r) > L_ / 2) {
    throw std::out_of_range("separation " + std::to_string(r) + " exceeds L/2 = " +
                            std::to_string(L_ / 2));
  }
  return static_cast<std::size_t>(r + L_ / 2);
}

cplx MajoranaContractions::operator()(Majorana x, int site_x, Majorana y, int site_y) const {
  const int r = site_y - site_x;
  if (x == Majorana::A && y == Majorana::A) return aa(r);
  if (x == Majorana::B && y == Majorana::B) return bb(r);
  if (x == Majorana::B && y == Majorana::A) return ba(r);
  // {A_l, B_m} = 0 for all l, m.
  return -ba(-r);
}

MajoranaContractions contractions_at(const ModeTable& modes, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("time must be non-negative");

  const std::size_t n_pos = modes.num_positive();
  const int half = modes.L / 2;

  // Pair (k, -k) starts in the vacuum |0> and evolves inside
  // span{|0>, c_k^dag c_-k^dag |0>}:
  //   alpha = cos(eps t) + i sin(eps t) cos(theta),  beta = -sin(theta) sin(eps t).
  // n_k = <c_k^dag c_k> = beta^2 and f_k = <c_k c_-k> = -conj(alpha) beta.
  std::vector<double> occupation(n_pos);
  std::vector<cplx> anomalous(n_pos);
  for (std::size_t m = 0; m < n_pos; ++m) {
    const Mode& mode = modes.positive(m);
    const double phase = mode.energy * t;
    const double s = std::sin(phase);
    const double c = std::cos(phase);
    const cplx alpha(c, s * std::cos(mode.bogoliubov_angle));
    const double beta = -std::sin(mode.bogoliubov_angle) * s;
    occupation[m] = beta * beta;
    anomalous[m] = -std::conj(alpha) * beta;
  }

  // G(r) = <c_l^dag c_{l+r}> = (2/L) sum_{k>0} cos(kr) n_k          (even in r)
  // F(r) = <c_l c_{l+r}>     = (-2i/L) sum_{k>0} sin(kr) f_k        (odd in r)
  const double norm = 2.0 / static_cast<double>(modes.L);
  MajoranaContractions out(modes.L, t);
  for (int r = 0; r <= half; ++r) {
    const double* cr = &modes.cos_kr[static_cast<std::size_t>(r) * n_pos];
    const double* sr = &modes.sin_kr[static_cast<std::size_t>(r) * n_pos];
    double g = 0.0;
    cplx fsum = 0.0;
    for (std::size_t m = 0; m < n_pos; ++m) {
      g += cr[m] * occupation[m];
      fsum += sr[m] * anomalous[m];
    }
    g *= norm;
    const cplx f = cplx(0.0, -norm) * fsum;

    const double delta = (r == 0) ? 1.0 : 0.0;
    const std::size_t pos = static_cast<std::size_t>(half + r);
    const std::size_t neg = static_cast<std::size_t>(half - r);
    // <A_l A_m> = delta + 2i Im F(r), <B_l B_m> = -delta + 2i Im F(r),
    // <B_l A_m> = -delta + 2 G(r) - 2 Re F(r).
    out.aa_[pos] = cplx(delta, 2.0 * f.imag());
    out.bb_[pos] = cplx(-delta, 2.0 * f.imag());
    out.ba_[pos] = cplx(-delta + 2.0 * g - 2.0 * f.real(), 0.0);
    out.aa_[neg] = cplx(delta, -2.0 * f.imag());
    out.bb_[neg] = cplx(-delta, -2.0 * f.imag());
    out.ba_[neg] = cplx(-delta + 2.0 * g + 2.0 * f.real(), 0.0);
  }
  return out;
}

}  // namespace tfrqa::tfim
