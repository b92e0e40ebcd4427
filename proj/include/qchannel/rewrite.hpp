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

#include "qchannel/circuit.hpp"

namespace qchannel {

/**
 * Remove unitaries whose qubits are only discarded afterwards. A backward scan
 * tracks which qubits are dead (traced, or measured into a register nobody
 * reads, and not an output). A CNOT is removed only when both of its qubits are
 * dead.
 */
Circuit drop_dead_unitaries(const Circuit& c);

/**
 * Replace CNOT(a -> b) followed (on qubit a) by an unconditioned MEASURE of a
 * with the MEASURE followed by X on b conditioned on the outcome. Applied until
 * no such pattern is left.
 */
Circuit classicalize_controls(const Circuit& c);

/// classicalize_controls, then drop_dead_unitaries.
Circuit apply_rewrites(const Circuit& c);

}  // namespace qchannel
