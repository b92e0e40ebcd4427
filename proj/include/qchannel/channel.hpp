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
#include <optional>
#include <string>
#include <vector>

#include "qchannel/linalg.hpp"

namespace qchannel {

/**
 * A channel from m to n qubits in Kraus form, E(X) = sum_i A_i X A_i^dagger.
 * Every operator is 2^n x 2^m.
 */
struct KrausSet {
  int m = 0;
  int n = 0;
  std::vector<CMat> ops;

  /// Checks shapes and trace preservation (tolerance 1e-9); throws on failure.
  void validate() const;
  /// ||sum_i A_i^dagger A_i - I||_F
  double tp_residual() const;
  int size() const { return static_cast<int>(ops.size()); }
};

/**
 * Unnormalized Choi matrix J = sum_ij |i><j| (x) E(|i><j|) with the input
 * factor first; tr J = 2^m and tracing out the output factor gives I.
 */
struct ChoiMatrix {
  int m = 0;
  int n = 0;
  CMat j;
};

/// Stinespring isometry V = [A_1; ...; A_K; 0; ...] from m to n + k qubits.
struct DilationIsometry {
  CMat v;
  int k = 0;
};

ChoiMatrix choi_from_kraus(const KrausSet& ks);

/**
 * Minimal Kraus form from the Hermitian eigendecomposition of J. Eigenvalues
 * above tol * tr(J) are kept in descending order; each eigenvector's largest
 * entry is rotated onto the positive reals.
 *
 * Throws std::invalid_argument("invalid Choi matrix") on a non-Hermitian or
 * negative (below -1e-9 * max(1, tr J)) input.
 */
KrausSet kraus_from_choi(const ChoiMatrix& c, double tol = 1e-9);

int kraus_rank(const KrausSet& ks, double tol = 1e-9);

/**
 * Extremality test on the minimal Kraus form: the K^2 products A_i^dagger A_j
 * must be linearly independent. Rank is read off the Gram matrix of the
 * vectorized products at relative threshold 1e-8.
 */
bool is_extreme(const KrausSet& ks);

double choi_distance(const KrausSet& a, const KrausSet& b);
bool kraus_equivalent(const KrausSet& a, const KrausSet& b, double tol = 1e-8);

/**
 * Stack the Kraus operators into an isometry and pad with zero blocks up to a
 * power of two.
 *
 * With @p minimize set, the operator list is first reduced to minimal Kraus
 * rank K' (it is kept as given when it is already minimal). The environment
 * size is ceil(log2 K') unless @p force_k asks for a larger one.
 */
DilationIsometry stinespring_isometry(const KrausSet& ks, bool minimize = true,
                                      std::optional<int> force_k = std::nullopt);

/**
 * Seeded random channel of Kraus rank @p kraus_rank (with probability one):
 * a Gaussian 2^n K x 2^m matrix is orthonormalized by QR and cut into K blocks.
 */
KrausSet random_channel(int m, int n, int kraus_rank, std::uint64_t seed);

/// Number of environment qubits needed for K operators.
int ceil_log2(int k);

// Frequently used example channels.
KrausSet unitary_channel(const CMat& u);
KrausSet amplitude_damping(double gamma);
KrausSet depolarizing_qubit();

// JSON encoding: {"m":..,"n":..,"kraus":[matrix,...],"choi":matrix?}, each
// matrix a list of rows and each entry an [re, im] pair.
std::string kraus_to_json(const KrausSet& ks, bool with_choi = false);
KrausSet kraus_from_json(const std::string& text);

}  // namespace qchannel
