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

#include "qchannel/channel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qchannel {

namespace {

Eigen::Index dim_of(int qubits) { return Eigen::Index{1} << qubits; }

// Column-stacking vectorization: entry (a, i) goes to index i * rows + a.
CVec vec(const CMat& a) { return Eigen::Map<const CVec>(a.data(), a.size()); }

CMat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const CMat>(v.data(), rows, cols);
}

}  // namespace

int ceil_log2(int k) {
  if (k < 1) throw std::invalid_argument("ceil_log2: argument must be positive");
  int bits = 0;
  while ((1 << bits) < k) ++bits;
  return bits;
}

double KrausSet::tp_residual() const {
  const Eigen::Index d = dim_of(m);
  CMat sum = CMat::Zero(d, d);
  for (const auto& a : ops) sum += a.adjoint() * a;
  return (sum - CMat::Identity(d, d)).norm();
}

void KrausSet::validate() const {
  if (m < 0 || n < 0) throw std::invalid_argument("negative qubit count");
  if (ops.empty()) throw std::invalid_argument("empty Kraus list");
  for (const auto& a : ops) {
    if (a.rows() != dim_of(n) || a.cols() != dim_of(m)) {
      throw std::invalid_argument("Kraus operator has wrong shape");
    }
    if (!a.allFinite()) throw std::invalid_argument("non-finite Kraus entry");
  }
  if (tp_residual() > 1e-9) throw std::invalid_argument("Kraus operators are not trace preserving");
}

ChoiMatrix choi_from_kraus(const KrausSet& ks) {
  const Eigen::Index d = dim_of(ks.m + ks.n);
  ChoiMatrix c{ks.m, ks.n, CMat::Zero(d, d)};
  for (const auto& a : ks.ops) {
    const CVec v = vec(a);
    c.j.noalias() += v * v.adjoint();
  }
  return c;
}

KrausSet kraus_from_choi(const ChoiMatrix& c, double tol) {
  const Eigen::Index d = dim_of(c.m + c.n);
  if (c.j.rows() != d || c.j.cols() != d) throw std::invalid_argument("invalid Choi matrix");
  const double scale = std::max(1.0, c.j.norm());
  if ((c.j - c.j.adjoint()).norm() > 1e-8 * scale) throw std::invalid_argument("invalid Choi matrix");

  const CMat herm = 0.5 * (c.j + c.j.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> eig(herm);
  const Eigen::VectorXd& vals = eig.eigenvalues();
  const double trace = herm.trace().real();
  if (vals(0) < -1e-9 * std::max(1.0, trace)) throw std::invalid_argument("invalid Choi matrix");

  KrausSet ks{c.m, c.n, {}};
  for (Eigen::Index i = d - 1; i >= 0; --i) {
    if (vals(i) <= tol * trace) break;
    CVec u = eig.eigenvectors().col(i);
    Eigen::Index big = 0;
    u.cwiseAbs().maxCoeff(&big);
    u *= std::conj(u(big)) / std::abs(u(big));
    ks.ops.push_back(std::sqrt(vals(i)) * unvec(u, dim_of(c.n), dim_of(c.m)));
  }
  if (ks.ops.empty()) throw std::invalid_argument("invalid Choi matrix");
  return ks;
}

int kraus_rank(const KrausSet& ks, double tol) {
  const ChoiMatrix c = choi_from_kraus(ks);
  Eigen::SelfAdjointEigenSolver<CMat> eig(c.j, Eigen::EigenvaluesOnly);
  const double trace = c.j.trace().real();
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i) > tol * trace) ++rank;
  }
  return rank;
}

bool is_extreme(const KrausSet& ks) {
  const KrausSet minimal = kraus_from_choi(choi_from_kraus(ks));
  const int k = minimal.size();
  const Eigen::Index d = dim_of(ks.m);
  if (static_cast<Eigen::Index>(k) * k > d * d) return false;

  CMat products(d * d, static_cast<Eigen::Index>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      products.col(i * k + j) = vec(minimal.ops[i].adjoint() * minimal.ops[j]);
    }
  }
  const CMat gram = products.adjoint() * products;
  Eigen::SelfAdjointEigenSolver<CMat> eig(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& vals = eig.eigenvalues();
  const double top = vals.cwiseAbs().maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) > 1e-8 * top) ++rank;
  }
  return rank == k * k;
}

double choi_distance(const KrausSet& a, const KrausSet& b) {
  if (a.m != b.m || a.n != b.n) throw std::invalid_argument("channel dimension mismatch");
  return (choi_from_kraus(a).j - choi_from_kraus(b).j).norm();
}

bool kraus_equivalent(const KrausSet& a, const KrausSet& b, double tol) {
  return choi_distance(a, b) < tol;
}

DilationIsometry stinespring_isometry(const KrausSet& ks, bool minimize, std::optional<int> force_k) {
  ks.validate();
  std::vector<CMat> ops = ks.ops;
  if (minimize && kraus_rank(ks) < ks.size()) {
    ops = kraus_from_choi(choi_from_kraus(ks)).ops;
  }
  int k = ceil_log2(static_cast<int>(ops.size()));
  if (force_k) {
    if (*force_k < k) throw std::invalid_argument("requested environment too small for the Kraus rank");
    k = *force_k;
  }
  const Eigen::Index block = dim_of(ks.n);
  DilationIsometry dil{CMat::Zero(block * dim_of(k), dim_of(ks.m)), k};
  for (std::size_t i = 0; i < ops.size(); ++i) {
    dil.v.block(static_cast<Eigen::Index>(i) * block, 0, block, dil.v.cols()) = ops[i];
  }
  return dil;
}

KrausSet random_channel(int m, int n, int kraus_rank, std::uint64_t seed) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative qubit count");
  if (kraus_rank < 1 || kraus_rank > (1 << (m + n))) {
    throw std::invalid_argument("infeasible Kraus rank for the channel dimensions");
  }
  if (n + ceil_log2(kraus_rank) < m ||
      static_cast<long>(kraus_rank) * dim_of(n) < dim_of(m)) {
    throw std::invalid_argument("infeasible Kraus rank for the channel dimensions");
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index rows = dim_of(n) * kraus_rank;
  const Eigen::Index cols = dim_of(m);
  CMat g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  const CMat v = qr_rectangular(g).q.leftCols(cols);

  KrausSet ks{m, n, {}};
  for (int i = 0; i < kraus_rank; ++i) {
    ks.ops.push_back(v.block(i * dim_of(n), 0, dim_of(n), cols));
  }
  return ks;
}

KrausSet unitary_channel(const CMat& u) {
  return KrausSet{log2_exact(u.cols()), log2_exact(u.rows()), {u}};
}

KrausSet amplitude_damping(double gamma) {
  CMat a1 = CMat::Zero(2, 2);
  a1(0, 0) = 1.0;
  a1(1, 1) = std::sqrt(1.0 - gamma);
  CMat a2 = CMat::Zero(2, 2);
  a2(0, 1) = std::sqrt(gamma);
  return KrausSet{1, 1, {a1, a2}};
}

KrausSet depolarizing_qubit() {
  CMat i = CMat::Identity(2, 2);
  CMat x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  return KrausSet{1, 1, {0.5 * i, 0.5 * x, 0.5 * y, 0.5 * z}};
}

}  // namespace qchannel
