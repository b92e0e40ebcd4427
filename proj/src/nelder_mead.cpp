// Copyright 2026 The qchannel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qchannel/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qchannel {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                             const NelderMeadOptions& opts) {
  const std::size_t d = x0.size();
  NelderMeadResult best{x0, 0, 0};
  const auto eval = [&](const std::vector<double>& x) {
    ++best.evaluations;
    const double v = f(x);
    return std::isnan(v) ? INFINITY : v;
  };
  best.value = eval(x0);
  if (d == 0 || best.value <= opts.target) return best;

  const double dd = static_cast<double>(d);
  const double c_expand = 1.0 + 2.0 / dd;
  const double c_contract = 0.75 - 0.5 / dd;
  const double c_shrink = 1.0 - 1.0 / dd;

  std::vector<std::vector<double>> simplex(d + 1);
  std::vector<double> values(d + 1);
  std::vector<std::size_t> order(d + 1);
  std::vector<double> centroid(d), trial(d), trial2(d);
  double step = opts.initial_step;

  while (best.evaluations < opts.max_evaluations && best.value > opts.target) {
    // (Re)build the simplex around the best point.
    simplex[0] = best.x;
    values[0] = best.value;
    for (std::size_t i = 0; i < d; ++i) {
      simplex[i + 1] = best.x;
      simplex[i + 1][i] += step;
      values[i + 1] = eval(simplex[i + 1]);
    }

    for (;;) {
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
      const std::size_t lo = order.front(), hi = order.back(), second = order[d - 1];
      if (values[lo] < best.value) {
        best.value = values[lo];
        best.x = simplex[lo];
      }
      if (best.value <= opts.target || best.evaluations >= opts.max_evaluations) break;

      double size = 0;
      for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j < d; ++j) size = std::max(size, std::abs(simplex[i][j] - simplex[lo][j]));
      }
      if (size < opts.collapse_size) break;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t i = 0; i <= d; ++i) {
        if (i == hi) continue;
        for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i][j];
      }
      for (double& c : centroid) c /= dd;

      for (std::size_t j = 0; j < d; ++j) trial[j] = centroid[j] + (centroid[j] - simplex[hi][j]);
      const double fr = eval(trial);
      if (fr < values[lo]) {
        for (std::size_t j = 0; j < d; ++j) trial2[j] = centroid[j] + c_expand * (trial[j] - centroid[j]);
        const double fe = eval(trial2);
        if (fe < fr) {
          simplex[hi] = trial2;
          values[hi] = fe;
        } else {
          simplex[hi] = trial;
          values[hi] = fr;
        }
        continue;
      }
      if (fr < values[second]) {
        simplex[hi] = trial;
        values[hi] = fr;
        continue;
      }
      const bool outside = fr < values[hi];
      for (std::size_t j = 0; j < d; ++j) {
        trial2[j] = outside ? centroid[j] + c_contract * (trial[j] - centroid[j])
                            : centroid[j] - c_contract * (centroid[j] - simplex[hi][j]);
      }
      const double fc = eval(trial2);
      if (fc < (outside ? fr : values[hi])) {
        simplex[hi] = trial2;
        values[hi] = fc;
        continue;
      }
      for (std::size_t i = 0; i <= d; ++i) {
        if (i == lo) continue;
        for (std::size_t j = 0; j < d; ++j) simplex[i][j] = simplex[lo][j] + c_shrink * (simplex[i][j] - simplex[lo][j]);
        values[i] = eval(simplex[i]);
      }
    }
    step = std::max(step * 0.5, 1e-3);
  }
  return best;
}

}  // namespace qchannel
