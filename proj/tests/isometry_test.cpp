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

#include "qchannel/isometry.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qchannel {
namespace {

using testing::kron_unitary;
using testing::random_isometry;

Circuit wrap(int p, const std::vector<Gate>& gates) {
  Circuit c{p, 0, {}, {}, gates};
  for (int q = 0; q < p; ++q) {
    c.inputs.push_back(q);
    c.outputs.push_back(q);
  }
  return c;
}

/// sum_s |s><s|_controls (x) R(angles[s])_target, assembled entry by entry.
CMat multiplexor_oracle(int p, RotationAxis axis, const std::vector<int>& controls, int target,
                        const std::vector<double>& angles) {
  const Eigen::Index d = Eigen::Index{1} << p;
  CMat out = CMat::Zero(d, d);
  const auto bit = [p](Eigen::Index x, int q) { return static_cast<int>((x >> (p - 1 - q)) & 1); };
  for (Eigen::Index col = 0; col < d; ++col) {
    std::size_t s = 0;
    for (int c : controls) s = 2 * s + bit(col, c);
    const CMat r = axis == RotationAxis::Y ? ry_matrix(angles[s]) : rz_matrix(angles[s]);
    const int in = bit(col, target);
    for (int outb = 0; outb < 2; ++outb) {
      const Eigen::Index row = in == outb ? col : col ^ (Eigen::Index{1} << (p - 1 - target));
      out(row, col) = r(outb, in);
    }
  }
  return out;
}

TEST(MultiplexedRotation, NoControls) {
  const auto gates = multiplexed_rotation(RotationAxis::Y, {}, 0, {0.7});
  ASSERT_EQ(gates.size(), 1u);
  EXPECT_EQ(wrap(1, gates).count(OpType::CNOT), 0);
  EXPECT_LT((kron_unitary(wrap(1, gates)) - ry_matrix(0.7)).norm(), 1e-14);
}

TEST(MultiplexedRotation, OneControlShape) {
  const double t0 = 0.3, t1 = -1.1;
  const auto gates = multiplexed_rotation(RotationAxis::Y, {0}, 1, {t0, t1});
  ASSERT_EQ(gates.size(), 4u);
  EXPECT_EQ(gates[0], Gate::ry(1, 0.5 * (t0 + t1)));
  EXPECT_EQ(gates[1], Gate::cnot(0, 1));
  EXPECT_EQ(gates[2], Gate::ry(1, 0.5 * (t0 - t1)));
  EXPECT_EQ(gates[3], Gate::cnot(0, 1));
  EXPECT_LT((kron_unitary(wrap(2, gates)) - multiplexor_oracle(2, RotationAxis::Y, {0}, 1, {t0, t1})).norm(), 1e-14);
}

TEST(MultiplexedRotation, MatchesBlockDiagonal) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(-4, 4);
  const std::vector<std::vector<int>> control_sets = {{0}, {1}, {0, 1}, {2, 0}, {0, 1, 3}, {3, 1, 2}};
  for (RotationAxis axis : {RotationAxis::Y, RotationAxis::Z}) {
    for (const auto& controls : control_sets) {
      int target = 0;
      while (std::find(controls.begin(), controls.end(), target) != controls.end()) ++target;
      std::vector<double> angles(std::size_t{1} << controls.size());
      for (double& a : angles) a = ang(rng);
      const auto gates = multiplexed_rotation(axis, controls, target, angles);
      const Circuit c = wrap(4, gates);
      EXPECT_EQ(c.count(OpType::CNOT), 1 << controls.size());
      EXPECT_LT((kron_unitary(c) - multiplexor_oracle(4, axis, controls, target, angles)).norm(), 1e-12);
    }
  }
}

TEST(MultiplexedRotation, BadAngleCount) {
  EXPECT_THROW(multiplexed_rotation(RotationAxis::Y, {0}, 1, {0.1}), std::invalid_argument);
}

double synth_distance(const CMat& v, const Circuit& c) {
  const CMat u = kron_unitary(c);
  return frob_distance_up_to_phase(CMat(u.leftCols(v.cols())), v);
}

TEST(DecomposeIsometry, SingleQubitUnitary) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CMat u = testing::random_unitary(2, seed);
    const Circuit c = decompose_isometry(u);
    EXPECT_EQ(c.count(OpType::CNOT), 0);
    EXPECT_LT(synth_distance(u, c), 1e-10);
  }
}

TEST(DecomposeIsometry, PrepareOne) {
  CMat v(2, 1);
  v << 0, 1;
  const Circuit c = decompose_isometry(v);
  EXPECT_EQ(c.count(OpType::CNOT), 0);
  EXPECT_LT(synth_distance(v, c), 1e-12);
}

TEST(DecomposeIsometry, RandomOneToTwo) {
  const CMat v = random_isometry(4, 2, 17);
  const Circuit c = decompose_isometry(v);
  EXPECT_LT(synth_distance(v, c), 1e-8);
  EXPECT_LE(c.count(OpType::CNOT), 8 * 8);
}

TEST(DecomposeIsometry, AllShapesBudgetAndCostModel) {
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= std::min(n, 3); ++m) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const CMat v = random_isometry(Eigen::Index{1} << n, Eigen::Index{1} << m, 1000 * n + 10 * m + seed);
        const Circuit c = decompose_isometry(v);
        ASSERT_NO_THROW(c.validate());
        EXPECT_EQ(c.num_qubits, n);
        EXPECT_LT(synth_distance(v, c), 1e-8) << m << "->" << n;
        EXPECT_LE(c.count(OpType::CNOT), 8L << (m + n));
        EXPECT_EQ(c.count(OpType::CNOT), builtin_iso_cnots(m, n)) << m << "->" << n;
        EXPECT_EQ(builtin_cost_model().n_iso(m, n), builtin_iso_cnots(m, n));
      }
    }
  }
}

TEST(DecomposeIsometry, StructuredInputsKeepCount) {
  // Count depends only on the shape, also for sparse or permutation inputs.
  const long expected = builtin_iso_cnots(2, 3);
  CMat perm = CMat::Zero(8, 4);
  for (int j = 0; j < 4; ++j) perm(7 - j, j) = 1;
  CMat first = CMat::Identity(8, 4);
  for (const CMat& v : {perm, first}) {
    const Circuit c = decompose_isometry(v);
    EXPECT_EQ(c.count(OpType::CNOT), expected);
    EXPECT_LT(synth_distance(v, c), 1e-10);
  }
}

TEST(DecomposeIsometry, Deterministic) {
  const CMat v = random_isometry(8, 2, 5);
  EXPECT_EQ(decompose_isometry(v), decompose_isometry(v));
}

TEST(DecomposeIsometry, Errors) {
  try {
    decompose_isometry(CMat::Ones(4, 2));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "not an isometry");
  }
  EXPECT_THROW(decompose_isometry(CMat::Identity(3, 3)), std::invalid_argument);
  EXPECT_THROW(decompose_isometry(CMat::Identity(2, 4)), std::invalid_argument);
}

TEST(ReduceColumns, ColumnByColumn) {
  const CMat v = random_isometry(16, 4, 23);
  for (int cols = 0; cols <= 4; ++cols) {
    const CMat w = reduce_columns(v, cols);
    EXPECT_LT(isometry_residual(w), 1e-10);
    for (int j = 0; j < cols; ++j) {
      EXPECT_NEAR(std::abs(w(j, j)), 1.0, 1e-10);
      EXPECT_NEAR(w.col(j).norm(), 1.0, 1e-10);
    }
    // Untouched columns stay orthogonal to the finished basis vectors.
    for (int j = cols; j < 4; ++j) {
      for (int i = 0; i < cols; ++i) EXPECT_LT(std::abs(w(i, j)), 1e-10);
    }
  }
  EXPECT_LT((reduce_columns(v, 0) - v).norm(), 1e-15);
  EXPECT_THROW(reduce_columns(v, 5), std::invalid_argument);
}

TEST(BuiltinIsoCnots, SmallValues) {
  EXPECT_EQ(builtin_iso_cnots(0, 0), 0);
  EXPECT_EQ(builtin_iso_cnots(0, 1), 0);
  EXPECT_EQ(builtin_iso_cnots(1, 1), 0);
  EXPECT_EQ(builtin_iso_cnots(1, 2), 12);
  EXPECT_THROW(builtin_iso_cnots(2, 1), std::invalid_argument);
}

}  // namespace
}  // namespace qchannel
