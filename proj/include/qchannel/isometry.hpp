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

#include <functional>
#include <vector>

#include "qchannel/circuit.hpp"

namespace qchannel {

enum class RotationAxis { Y, Z };

/**
 * @brief Uniformly controlled rotation.
 *
 * Implements the block diagonal sum over control patterns s of
 * R_axis(angles[s]), with controls[0] the most significant bit of s. Uses the
 * Gray-code construction: 2^c rotations interleaved with 2^c CNOTs for c >= 1,
 * a single rotation for c = 0.
 */
std::vector<Gate> multiplexed_rotation(RotationAxis axis, const std::vector<int>& controls, int target,
                                       const std::vector<double>& angles);

/** Predicted CNOT count of an isometry from m to n qubits. */
struct IsoCostModel {
  std::function<long(int, int)> n_iso;
};

/// Exact CNOT count of decompose_isometry for a 2^n x 2^m input.
long builtin_iso_cnots(int m, int n);
IsoCostModel builtin_cost_model();

/**
 * @brief Synthesize a circuit for the isometry @p v (2^n' x 2^m').
 *
 * The circuit acts on n' qubits; the last m' qubits carry the input and the
 * others start in |0>. The result equals v up to a global phase. Columns are
 * reduced one at a time to standard basis vectors by ladders of multiplexed
 * Rz and Ry rotations; the ladder shape depends only on (m', n').
 *
 * Throws std::invalid_argument("not an isometry") if v^dagger v differs from
 * the identity by more than 1e-9.
 */
Circuit decompose_isometry(const CMat& v);

/**
 * Apply the reduction for the first @p columns columns of @p v and return the
 * reduced matrix G v. Column j < columns equals a phase times e_j.
 */
CMat reduce_columns(const CMat& v, int columns);

}  // namespace qchannel
