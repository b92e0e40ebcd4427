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

#include <algorithm>
#include <random>

#include "qchannel/circuit.hpp"
#include "qchannel/linalg.hpp"

namespace qchannel::testing {

inline CMat gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  CMat a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      a(i, j) = Complex(re, normal(rng));
    }
  }
  return a;
}

/// Isometry from Eigen's own QR, independent of the library's Householder code.
inline CMat random_isometry(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  Eigen::HouseholderQR<CMat> qr(gaussian(rows, cols, seed));
  return qr.householderQ() * CMat::Identity(rows, cols);
}

inline CMat random_unitary(Eigen::Index dim, std::uint64_t seed) { return random_isometry(dim, dim, seed); }

inline CMat pauli_x() {
  CMat x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

inline CMat hadamard() {
  CMat h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

/// I (x) ... (x) u (x) ... (x) I with qubit 0 as the leftmost factor.
inline CMat embed(int p, int q, const CMat& u) {
  CMat out = CMat::Identity(1, 1);
  for (int i = 0; i < p; ++i) out = kron(out, i == q ? u : CMat::Identity(2, 2));
  return out;
}

/// |0><0|_c (x) I + |1><1|_c (x) X_t built from projectors.
inline CMat cnot_matrix(int p, int c, int t) {
  CMat p0 = CMat::Zero(2, 2), p1 = CMat::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  CMat a = CMat::Identity(1, 1), b = CMat::Identity(1, 1);
  for (int i = 0; i < p; ++i) {
    a = kron(a, i == c ? p0 : CMat::Identity(2, 2));
    b = kron(b, i == c ? p1 : (i == t ? pauli_x() : CMat::Identity(2, 2)));
  }
  return a + b;
}

/// Full unitary of a circuit of unconditioned unitary gates, by Kronecker products.
inline CMat kron_unitary(const Circuit& c) {
  const Eigen::Index d = Eigen::Index{1} << c.num_qubits;
  CMat u = CMat::Identity(d, d);
  for (const Gate& g : c.gates) {
    const CMat step = g.type == OpType::CNOT ? cnot_matrix(c.num_qubits, g.qubits[0], g.qubits[1])
                                             : embed(c.num_qubits, g.qubits[0], gate_matrix(g));
    u = step * u;
  }
  return u;
}

}  // namespace qchannel::testing
