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

#include "qchannel/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qchannel {

QrResult qr_rectangular(const CMat& b) {
  const Eigen::Index rows = b.rows();
  const Eigen::Index cols = b.cols();
  if (rows < cols) throw std::invalid_argument("non-tall matrix");
  if (!b.allFinite()) throw std::invalid_argument("non-finite matrix entry");

  CMat r = b;
  CMat q = CMat::Identity(rows, rows);

  for (Eigen::Index j = 0; j < cols; ++j) {
    const Eigen::Index len = rows - j;
    CVec x = r.block(j, j, len, 1);
    const double alpha = x.norm();
    if (alpha == 0.0) continue;
    const double sigma = x.tail(len - 1).squaredNorm();
    if (sigma == 0.0) continue;
    const double abs_x0 = std::abs(x(0));
    const Complex phase = abs_x0 > 0.0 ? x(0) / abs_x0 : Complex(1.0);

    // Reflect x onto phase * alpha * e_0. The first component of
    // v = x - phase*alpha*e_0 is rewritten to avoid cancellation.
    CVec v = x;
    v(0) = -phase * sigma / (abs_x0 + alpha);
    const double vnorm2 = v.squaredNorm();

    // r <- H r on the trailing block, q <- q H.
    auto block = r.block(j, j, len, cols - j);
    const Eigen::RowVectorXcd w = v.adjoint() * block;
    block.noalias() -= (2.0 / vnorm2) * v * w;
    auto qcols = q.rightCols(len);
    const CVec qv = qcols * v;
    qcols.noalias() -= (2.0 / vnorm2) * qv * v.adjoint();

    r(j, j) = phase * alpha;
    r.block(j + 1, j, len - 1, 1).setZero();
  }

  // Rotate the diagonal onto the nonnegative reals.
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag == 0.0) continue;
    const Complex phase = d / mag;
    r.row(j) *= std::conj(phase);
    q.col(j) *= phase;
    r(j, j) = mag;
  }
  return {std::move(q), std::move(r)};
}

double isometry_residual(const CMat& v) {
  return (v.adjoint() * v - CMat::Identity(v.cols(), v.cols())).norm();
}

CMat complete_to_unitary(const CMat& v) {
  const Eigen::Index p = v.rows();
  const Eigen::Index c = v.cols();
  if (c > p || isometry_residual(v) > 1e-9) {
    throw std::invalid_argument("not an isometry");
  }
  CMat u(p, p);
  u.leftCols(c) = v;
  Eigen::Index filled = c;
  for (Eigen::Index i = 0; i < p && filled < p; ++i) {
    CVec w = CVec::Unit(p, i);
    for (int pass = 0; pass < 2; ++pass) {
      w -= u.leftCols(filled) * (u.leftCols(filled).adjoint() * w);
    }
    const double norm = w.norm();
    if (norm < 1e-6) continue;
    u.col(filled++) = w / norm;
  }
  if (filled != p) throw std::logic_error("unitary completion ran out of candidates");
  return u;
}

bool is_power_of_two(Eigen::Index x) { return x > 0 && (x & (x - 1)) == 0; }

int log2_exact(Eigen::Index x) {
  if (!is_power_of_two(x)) throw std::invalid_argument("dimension is not a power of two");
  int k = 0;
  while ((Eigen::Index{1} << k) < x) ++k;
  return k;
}

CMat partial_trace(const CMat& rho, const std::vector<int>& keep) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("partial_trace: non-square operator");
  const int p = log2_exact(rho.rows());
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate qubit index");
  }
  for (int q : kept) {
    if (q < 0 || q >= p) throw std::out_of_range("partial_trace: qubit index out of range");
  }

  const auto kept_index = [&](Eigen::Index full) {
    Eigen::Index out = 0;
    for (int q : kept) out = (out << 1) | ((full >> (p - 1 - q)) & 1);
    return out;
  };
  Eigen::Index kept_mask = 0;
  for (int q : kept) kept_mask |= Eigen::Index{1} << (p - 1 - q);
  const Eigen::Index traced_mask = (rho.rows() - 1) & ~kept_mask;

  const Eigen::Index dim = Eigen::Index{1} << kept.size();
  CMat out = CMat::Zero(dim, dim);
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      if ((r & traced_mask) != (c & traced_mask)) continue;
      out(kept_index(r), kept_index(c)) += rho(r, c);
    }
  }
  return out;
}

double frob_distance_up_to_phase(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frob_distance_up_to_phase: shape mismatch");
  }
  const Complex overlap = (a.array().conjugate() * b.array()).sum();
  // Align the phase explicitly; the closed form |a|^2 + |b|^2 - 2|<a,b>|
  // cancels down to sqrt(eps) for nearly equal inputs.
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1, 0);
  return (a * phase - b).norm();
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qchannel
