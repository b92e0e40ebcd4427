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

#include <string>
#include <vector>

#include "qchannel/channel.hpp"
#include "qchannel/circuit.hpp"

namespace qchannel {

/** Operator applied by a circuit for one full measurement record. */
struct BranchOperator {
  std::string outcome;  ///< register values c0 c1 ..., '-' for registers never written
  CMat op;              ///< 2^p x 2^m, all qubits kept
};

/**
 * Product of the gate matrices restricted to the input columns:
 * 2^p x 2^{|inputs|}. Rejects measurements, resets, traces and conditions.
 */
CMat simulate_unitary(const Circuit& c);

/// One operator per measurement record, in increasing record order.
std::vector<BranchOperator> simulate_branches(const Circuit& c);

/**
 * Kraus operators of the implemented channel. Qubits outside the output list
 * (traced, measured and discarded, or idle) become extra Kraus indices.
 * Operators with squared norm below 1e-28 are dropped.
 */
KrausSet circuit_to_kraus(const Circuit& c);

/**
 * Probability of each measurement record for the pure input state @p psi,
 * in the order of simulate_branches.
 */
std::vector<double> outcome_distribution(const Circuit& c, const CVec& psi);

}  // namespace qchannel
