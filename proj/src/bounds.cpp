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

#include "qchannel/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qchannel {

namespace {

using i64 = std::int64_t;

void check_args(int m, int n) {
  if (m < 0 || n < 0 || m > 20 || n > 20) throw std::invalid_argument("bounds: m and n must lie in [0, 20]");
}

i64 pow2(int e) { return i64{1} << e; }

// ceil(num / den) for den > 0, clamped at 0.
i64 ceil_div_clamped(i64 num, i64 den) {
  if (num <= 0) return 0;
  return (num + den - 1) / den;
}

}  // namespace

i64 lb_random_qcm(int m, int n) {
  check_args(m, n);
  return ceil_div_clamped(pow2(2 * m + 1) * (pow2(n) - 1) - 3 * i64{n}, 4);
}

i64 lb_measured_qcm(int m, int n) {
  check_args(m, n);
  if (n >= m) {
    return ceil_div_clamped(pow2(n + m + 1) - pow2(2 * m) - std::max<i64>(2, 3 * i64{m}) - 1, 6);
  }
  return ceil_div_clamped(pow2(2 * n) - 3 * i64{n} - 1, 6);
}

i64 lb_qcm_isometry(int m, int n) {
  check_args(m, n);
  return ceil_div_clamped(pow2(n + m + 1) - pow2(2 * m) - 2 * i64{n} - m - 1, 4);
}

i64 param_count_extreme(int m, int n) {
  check_args(m, n);
  return pow2(2 * m + n + 1) - pow2(2 * m + 1);
}

BoundsReport table1(int m, int n) {
  check_args(m, n);
  BoundsReport r;
  r.m = m;
  r.n = n;
  r.lb_qcm = ceil_div_clamped(pow2(2 * (m + n)), 4);
  r.lb_random = lb_random_qcm(m, n);
  r.lb_measured = lb_measured_qcm(m, n);
  r.lb_isometry = lb_qcm_isometry(m, n);
  r.param_count_extreme = param_count_extreme(m, n);
  r.ub_asymptotic_qcm = pow2(2 * (m + n));
  r.ub_asymptotic_random = pow2(2 * m + n);
  r.ub_asymptotic_measured = m < n ? m * pow2(2 * m + 1) + pow2(m + n) : n * pow2(2 * m + 1);
  r.qubits_qcm = m + 2 * n;
  r.qubits_random = m + n;
  r.qubits_measured = m < n ? n : m + 1;
  return r;
}

std::string BoundsReport::to_text() const {
  std::ostringstream out;
  out << "m=" << m << "\n"
      << "n=" << n << "\n"
      << "lb_qcm=" << lb_qcm << "\n"
      << "lb_random=" << lb_random << "\n"
      << "lb_measured=" << lb_measured << "\n"
      << "lb_isometry=" << lb_isometry << "\n"
      << "param_count_extreme=" << param_count_extreme << "\n"
      << "ub_qcm=" << ub_asymptotic_qcm << "\n"
      << "ub_random=" << ub_asymptotic_random << "\n"
      << "ub_measured=" << ub_asymptotic_measured << "\n"
      << "qubits_qcm=" << qubits_qcm << "\n"
      << "qubits_random=" << qubits_random << "\n"
      << "qubits_measured=" << qubits_measured << "\n";
  return out.str();
}

std::string bounds_csv(int m_max, int n_max) {
  check_args(m_max, n_max);
  std::ostringstream out;
  out << "m,n,lb_random_qcm,lb_measured_qcm,lb_qcm_isometry,param_count_extreme\n";
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      out << m << "," << n << "," << lb_random_qcm(m, n) << "," << lb_measured_qcm(m, n) << ","
          << lb_qcm_isometry(m, n) << "," << param_count_extreme(m, n) << "\n";
    }
  }
  return out.str();
}

}  // namespace qchannel
