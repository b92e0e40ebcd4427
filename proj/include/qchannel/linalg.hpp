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

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qchannel {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/** Result of a rectangular QR decomposition B = q * r. */
struct QrResult {
  CMat q;  ///< p x p unitary
  CMat r;  ///< p x c, upper triangular with real nonnegative diagonal
};

/**
 * @brief Householder QR of a tall complex matrix.
 *
 * The phase of every reflection is fixed so that diag(r) is real and
 * nonnegative. A column whose remaining part is exactly zero gets the identity
 * reflection, so rank-deficient inputs (e.g. zero-padded Kraus stacks) are
 * handled and produce zeros on the diagonal of r.
 *
 * Throws std::invalid_argument("non-tall matrix") when rows < cols.
 */
QrResult qr_rectangular(const CMat& b);

/**
 * @brief Extend the orthonormal columns of @p v to a square unitary.
 *
 * The first v.cols() columns of the result are copied from v unchanged; the
 * rest come from Gram-Schmidt against e_0, e_1, ... in order, skipping
 * candidates whose residual norm falls below 1e-6.
 */
CMat complete_to_unitary(const CMat& v);

/**
 * Partial trace of a 2^p x 2^p operator, keeping the listed qubits (qubit 0 is
 * the most significant bit of the row index). The kept qubits appear in the
 * result in increasing index order.
 */
CMat partial_trace(const CMat& rho, const std::vector<int>& keep);

/// min over phi of ||a - e^{i phi} b||_F
double frob_distance_up_to_phase(const CMat& a, const CMat& b);

CMat kron(const CMat& a, const CMat& b);

/// ||v^dagger v - I||_F
double isometry_residual(const CMat& v);

bool is_power_of_two(Eigen::Index x);
int log2_exact(Eigen::Index x);

}  // namespace qchannel
