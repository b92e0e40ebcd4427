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

#include <optional>
#include <utility>
#include <vector>

#include "qchannel/channel.hpp"
#include "qchannel/circuit.hpp"
#include "qchannel/isometry.hpp"

namespace qchannel {

/**
 * Recursive QR plan for a channel with measurements. Outcome prefixes s are
 * integers whose most significant bit is the first measurement.
 */
struct CompilePlan {
  int m = 0, n = 0, k = 0;
  int l = 0;
  int k_tilde = 0;
  /// stages[i][s]: 2^{m+1} x 2^m isometry applied in round i after prefix s.
  std::vector<std::vector<CMat>> stages;
  /// finals[s]: 2^{m+l} x 2^m isometry applied after all rounds.
  std::vector<CMat> finals;
  int final_measure_count = 0;
  CMat v;  ///< the dilation isometry the plan was built from
};

/** Probability-weighted list of channels on the same (m, n). */
struct ConvexMixture {
  std::vector<std::pair<double, KrausSet>> components;

  /// Throws std::invalid_argument on bad probabilities or mixed dimensions.
  void validate() const;
  /// sum_j p_j J(E_j)
  CMat choi() const;
};

CompilePlan plan_measured(const KrausSet& ks, std::optional<int> force_k = std::nullopt);

/// Rebuild the dilation isometry from the plan's stage and final factors.
CMat reconstruct(const CompilePlan& plan);

/**
 * Circuit with one reused ancilla: each round applies the stage isometries
 * (one guarded copy per outcome prefix), measures and resets the ancilla; the
 * finals follow, then the leftover environment qubits are measured and
 * discarded. No rewriting is applied.
 */
Circuit compile_measured(const KrausSet& ks, std::optional<int> force_k = std::nullopt);

/// Dilation isometry on n + k qubits followed by tracing out the top k.
Circuit compile_qcm(const KrausSet& ks, std::optional<int> force_k = std::nullopt);

/**
 * One QCM circuit per component. Throws "component not implementable in m+n
 * qubits" when a component has Kraus rank above 2^m.
 */
std::vector<std::pair<double, Circuit>> compile_random_qcm(const ConvexMixture& mix);

/// CNOT count of compile_measured for an m -> n channel with k environment qubits.
long predict_upper_bound(int m, int n, int k, const IsoCostModel& cost);

}  // namespace qchannel
