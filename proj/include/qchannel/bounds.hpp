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

#pragma once

#include <cstdint>
#include <string>

namespace qchannel {

// CNOT lower bounds and parameter counts, evaluated in exact integer
// arithmetic. Negative values clamp to 0. Arguments must lie in [0, 20].

/// ceil(2^{2m-1}(2^n - 1) - 3n/4)
std::int64_t lb_random_qcm(int m, int n);
/// n >= m: ceil((2^{n+m+1} - 4^m - max(2, 3m) - 1) / 6); n < m: ceil((4^n - 3n - 1) / 6)
std::int64_t lb_measured_qcm(int m, int n);
/// ceil((2^{n+m+1} - 4^m - 2n - m - 1) / 4)
std::int64_t lb_qcm_isometry(int m, int n);
/// Real parameters of an extreme channel: 2^{2m+n+1} - 2^{2m+1}
std::int64_t param_count_extreme(int m, int n);

struct BoundsReport {
  int m = 0, n = 0;
  std::int64_t lb_qcm = 0, lb_random = 0, lb_measured = 0, lb_isometry = 0, param_count_extreme = 0;
  std::int64_t ub_asymptotic_qcm = 0, ub_asymptotic_random = 0, ub_asymptotic_measured = 0;
  int qubits_qcm = 0, qubits_random = 0, qubits_measured = 0;

  /// One "key=value" pair per line.
  std::string to_text() const;
};

/**
 * Summary table. lb_qcm and the ub_asymptotic_* fields are the leading-order
 * expressions (ceil(4^{m+n}/4); 4^{m+n}, 2^{2m+n} and m 2^{2m+1} + 2^{m+n} or
 * n 2^{2m+1}); the other lower bounds are exact.
 */
BoundsReport table1(int m, int n);

/// CSV header plus one row per (m, n) in [0, m_max] x [0, n_max].
std::string bounds_csv(int m_max, int n_max);

}  // namespace qchannel
