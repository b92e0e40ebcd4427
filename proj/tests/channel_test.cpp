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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qchannel {
namespace {

using testing::random_unitary;

/// J = sum_ij |i><j| (x) E(|i><j|), straight from the definition.
CMat choi_by_definition(const KrausSet& ks) {
  const Eigen::Index dm = Eigen::Index{1} << ks.m, dn = Eigen::Index{1} << ks.n;
  CMat j = CMat::Zero(dm * dn, dm * dn);
  for (Eigen::Index a = 0; a < dm; ++a) {
    for (Eigen::Index b = 0; b < dm; ++b) {
      CMat eab = CMat::Zero(dm, dm);
      eab(a, b) = 1;
      CMat image = CMat::Zero(dn, dn);
      for (const CMat& k : ks.ops) image += k * eab * k.adjoint();
      j += kron(eab, image);
    }
  }
  return j;
}

CMat pauli(int which) {
  CMat p(2, 2);
  switch (which) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

KrausSet identity_channel(int m) {
  return unitary_channel(CMat::Identity(Eigen::Index{1} << m, Eigen::Index{1} << m));
}

TEST(ChoiFromKraus, IdentityQubit) {
  const CMat j = choi_from_kraus(identity_channel(1)).j;
  CMat expected = CMat::Zero(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1;
  EXPECT_EQ(j, expected);
}

TEST(ChoiFromKraus, FullyDepolarizing) {
  const KrausSet ks = depolarizing_qubit();
  EXPECT_LT((choi_from_kraus(ks).j - CMat::Identity(4, 4) / 2.0).norm(), 1e-14);
  KrausSet by_hand{1, 1, {}};
  for (int p = 0; p < 4; ++p) by_hand.ops.push_back(pauli(p) / 2.0);
  EXPECT_LT((choi_from_kraus(by_hand).j - CMat::Identity(4, 4) / 2.0).norm(), 1e-14);
}

TEST(ChoiFromKraus, MatchesDefinitionAndTrace) {
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const int kmax = 1 << (m + n);
      for (int k = 1; k <= kmax; ++k) {
        if ((k << n) < (1 << m)) continue;
        const KrausSet ks = random_channel(m, n, k, 100 + 10 * m + n + 1000 * k);
        const ChoiMatrix c = choi_from_kraus(ks);
        EXPECT_LT((c.j - choi_by_definition(ks)).norm(), 1e-12);
        EXPECT_NEAR(c.j.trace().real(), double(1 << m), 1e-10);
        const CMat j_h = c.j - c.j.adjoint();
        EXPECT_LT(j_h.norm(), 1e-10);
        std::vector<int> keep;
        for (int q = 0; q < m; ++q) keep.push_back(q);
        EXPECT_LT((partial_trace(c.j, keep) - CMat::Identity(1 << m, 1 << m)).norm(), 1e-8);
      }
    }
  }
}

TEST(ChoiFromKraus, InvariantUnderKrausMixing) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const KrausSet ks = random_channel(1, 2, 3, seed);
    const CMat w = random_unitary(3, seed + 77);
    KrausSet mixed{1, 2, {}};
    for (int i = 0; i < 3; ++i) {
      CMat b = CMat::Zero(4, 2);
      for (int j = 0; j < 3; ++j) b += w(i, j) * ks.ops[j];
      mixed.ops.push_back(b);
    }
    EXPECT_LT((choi_from_kraus(ks).j - choi_from_kraus(mixed).j).norm(), 1e-10);
  }
}

TEST(KrausFromChoi, Examples) {
  EXPECT_EQ(kraus_from_choi(choi_from_kraus(identity_channel(1))).size(), 1);
  EXPECT_EQ(kraus_from_choi({1, 1, CMat::Identity(4, 4) / 2.0}).size(), 4);
}

TEST(KrausFromChoi, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int m = static_cast<int>(seed % 3), n = static_cast<int>((seed / 3) % 3);
    const int k = 1 + static_cast<int>(seed % 4);
    if ((k << n) < (1 << m) || k > (1 << (m + n))) continue;
    const KrausSet ks = random_channel(m, n, k, seed);
    const KrausSet back = kraus_from_choi(choi_from_kraus(ks));
    EXPECT_EQ(back.m, m);
    EXPECT_EQ(back.n, n);
    EXPECT_EQ(back.size(), k);
    EXPECT_LT(back.tp_residual(), 1e-9);
    EXPECT_LT((choi_from_kraus(back).j - choi_from_kraus(ks).j).norm(), 1e-8);
  }
}

TEST(KrausFromChoi, RejectsInvalid) {
  CMat neg = CMat::Identity(4, 4);
  neg(0, 0) = -1;
  EXPECT_THROW(kraus_from_choi({1, 1, neg}), std::invalid_argument);
  CMat non_herm = CMat::Identity(4, 4);
  non_herm(0, 1) = 1;
  EXPECT_THROW(kraus_from_choi({1, 1, non_herm}), std::invalid_argument);
  try {
    kraus_from_choi({1, 1, neg});
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "invalid Choi matrix");
  }
}

TEST(KrausRank, Examples) {
  EXPECT_EQ(kraus_rank(unitary_channel(random_unitary(4, 1))), 1);
  EXPECT_EQ(kraus_rank(amplitude_damping(0.5)), 2);
  EXPECT_EQ(kraus_rank(depolarizing_qubit()), 4);
  EXPECT_EQ(kraus_rank(random_channel(1, 1, 2, 3)), 2);
}

TEST(AmplitudeDamping, MatchesClosedForm) {
  const KrausSet ks = amplitude_damping(0.5);
  ASSERT_EQ(ks.size(), 2);
  CMat a1(2, 2), a2(2, 2);
  a1 << 1, 0, 0, std::sqrt(0.5);
  a2 << 0, std::sqrt(0.5), 0, 0;
  EXPECT_LT((ks.ops[0] - a1).norm(), 1e-15);
  EXPECT_LT((ks.ops[1] - a2).norm(), 1e-15);
}

TEST(IsExtreme, Examples) {
  EXPECT_TRUE(is_extreme(unitary_channel(random_unitary(2, 5))));
  EXPECT_TRUE(is_extreme(unitary_channel(random_unitary(8, 6))));
  EXPECT_FALSE(is_extreme(depolarizing_qubit()));
  EXPECT_TRUE(is_extreme(amplitude_damping(0.3)));
}

TEST(IsExtreme, RankAboveInputDimensionIsNever) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_FALSE(is_extreme(random_channel(1, 1, 3, seed)));
}

TEST(KrausEquivalent, Examples) {
  const KrausSet ad = amplitude_damping(0.4);
  EXPECT_TRUE(kraus_equivalent(ad, ad));
  KrausSet mixed{1, 1, {(ad.ops[0] + ad.ops[1]) / std::sqrt(2.0), (ad.ops[0] - ad.ops[1]) / std::sqrt(2.0)}};
  EXPECT_TRUE(kraus_equivalent(ad, mixed));
  EXPECT_FALSE(kraus_equivalent(identity_channel(1), depolarizing_qubit()));
  EXPECT_NEAR(choi_distance(identity_channel(1), depolarizing_qubit()),
              (choi_from_kraus(identity_channel(1)).j - CMat::Identity(4, 4) / 2.0).norm(), 1e-14);
  EXPECT_THROW(choi_distance(identity_channel(1), identity_channel(2)), std::invalid_argument);
}

TEST(StinespringIsometry, Unitary) {
  const CMat u = random_unitary(4, 8);
  const DilationIsometry d = stinespring_isometry(unitary_channel(u));
  EXPECT_EQ(d.k, 0);
  EXPECT_LT((d.v - u).norm(), 1e-15);
}

TEST(StinespringIsometry, AmplitudeDampingStacks) {
  const KrausSet ad = amplitude_damping(0.5);
  const DilationIsometry d = stinespring_isometry(ad);
  EXPECT_EQ(d.k, 1);
  ASSERT_EQ(d.v.rows(), 4);
  EXPECT_EQ(CMat(d.v.topRows(2)), ad.ops[0]);
  EXPECT_EQ(CMat(d.v.bottomRows(2)), ad.ops[1]);
  EXPECT_LT(isometry_residual(d.v), 1e-12);
}

TEST(StinespringIsometry, RankThreePadded) {
  const KrausSet ks = random_channel(1, 1, 3, 4);
  const DilationIsometry d = stinespring_isometry(ks);
  EXPECT_EQ(d.k, 2);
  ASSERT_EQ(d.v.rows(), 8);
  EXPECT_EQ(CMat(d.v.bottomRows(2)), CMat::Zero(2, 2));
  EXPECT_LT(isometry_residual(d.v), 1e-12);
}

TEST(StinespringIsometry, MinimizesRedundantList) {
  const KrausSet ad = amplitude_damping(0.2);
  KrausSet redundant{1, 1, {ad.ops[0] / std::sqrt(2.0), ad.ops[0] / std::sqrt(2.0), ad.ops[1]}};
  const DilationIsometry d = stinespring_isometry(redundant);
  EXPECT_EQ(d.k, 1);
  EXPECT_EQ(stinespring_isometry(redundant, false).k, 2);
}

TEST(StinespringIsometry, ForcedEnvironment) {
  const DilationIsometry d = stinespring_isometry(amplitude_damping(0.2), true, 3);
  EXPECT_EQ(d.k, 3);
  EXPECT_EQ(d.v.rows(), 16);
  EXPECT_LT(isometry_residual(d.v), 1e-12);
  EXPECT_THROW(stinespring_isometry(random_channel(1, 1, 3, 1), true, 1), std::invalid_argument);
}

TEST(RandomChannel, UnitaryWhenRankOne) {
  const KrausSet ks = random_channel(1, 1, 1, 42);
  ASSERT_EQ(ks.size(), 1);
  EXPECT_LT((ks.ops[0].adjoint() * ks.ops[0] - CMat::Identity(2, 2)).norm(), 1e-12);
}

TEST(RandomChannel, DeterministicAndValid) {
  const KrausSet a = random_channel(2, 1, 3, 9), b = random_channel(2, 1, 3, 9);
  ASSERT_EQ(a.size(), b.size());
  for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a.ops[i], b.ops[i]);
  EXPECT_NO_THROW(a.validate());
  EXPECT_NE(random_channel(2, 1, 3, 10).ops[0], a.ops[0]);
}

TEST(RandomChannel, Infeasible) {
  EXPECT_THROW(random_channel(2, 0, 3, 1), std::invalid_argument);
  EXPECT_THROW(random_channel(1, 1, 0, 1), std::invalid_argument);
  EXPECT_THROW(random_channel(1, 1, 5, 1), std::invalid_argument);
}

TEST(KrausSetValidate, Errors) {
  EXPECT_THROW((KrausSet{1, 1, {}}).validate(), std::invalid_argument);
  EXPECT_THROW((KrausSet{1, 1, {CMat::Identity(4, 2)}}).validate(), std::invalid_argument);
  EXPECT_THROW((KrausSet{1, 1, {CMat::Identity(2, 2) * 2.0}}).validate(), std::invalid_argument);
  EXPECT_NO_THROW(amplitude_damping(0.7).validate());
}

TEST(CeilLog2, Values) {
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(2), 1);
  EXPECT_EQ(ceil_log2(3), 2);
  EXPECT_EQ(ceil_log2(8), 3);
  EXPECT_EQ(ceil_log2(9), 4);
  EXPECT_THROW(ceil_log2(0), std::invalid_argument);
}

TEST(ChannelJson, RoundTrip) {
  const KrausSet ks = random_channel(1, 2, 3, 12);
  const KrausSet back = kraus_from_json(kraus_to_json(ks, true));
  ASSERT_EQ(back.size(), ks.size());
  for (int i = 0; i < ks.size(); ++i) EXPECT_EQ(back.ops[i], ks.ops[i]);
}

TEST(ChannelJson, Errors) {
  EXPECT_THROW(kraus_from_json("{"), std::invalid_argument);
  EXPECT_THROW(kraus_from_json(R"({"m":1,"n":1})"), std::invalid_argument);
  EXPECT_THROW(kraus_from_json(R"({"m":1,"n":1,"kraus":[[[[1,0],[0,0]],[[0,0]]]]})"), std::invalid_argument);
  EXPECT_THROW(kraus_from_json(R"({"m":1,"n":1,"kraus":[[[[2,0],[0,0]],[[0,0],[2,0]]]]})"), std::invalid_argument);
  EXPECT_NO_THROW(kraus_from_json(R"({"m":1,"n":1,"kraus":[[[[1,0],[0,0]],[[0,0],[1,0]]]]})"));
}

}  // namespace
}  // namespace qchannel
