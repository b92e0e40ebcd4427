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

#include "qchannel/bounds.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace qchannel {
namespace {

TEST(LbRandomQcm, Examples) {
  EXPECT_EQ(lb_random_qcm(1, 1), 2);
  EXPECT_EQ(lb_random_qcm(1, 2), 5);
  // m = 0: ceil((2^n - 1)/2 - 3n/4), evaluated by hand.
  EXPECT_EQ(lb_random_qcm(0, 1), 0);
  EXPECT_EQ(lb_random_qcm(0, 3), 2);
  EXPECT_EQ(lb_random_qcm(0, 4), 5);
  EXPECT_EQ(lb_random_qcm(0, 5), 12);
}

TEST(LbMeasuredQcm, Examples) {
  EXPECT_EQ(lb_measured_qcm(1, 2), 2);
  EXPECT_EQ(lb_measured_qcm(2, 2), 2);
  EXPECT_EQ(lb_measured_qcm(2, 1), 0);
  EXPECT_EQ(lb_measured_qcm(1, 1), 0);
  // n < m branch: ceil((4^3 - 9 - 1)/6) = 9.
  EXPECT_EQ(lb_measured_qcm(4, 3), 9);
}

TEST(LbQcmIsometry, Examples) {
  EXPECT_EQ(lb_qcm_isometry(1, 1), 0);
  EXPECT_EQ(lb_qcm_isometry(1, 2), 2);
  EXPECT_EQ(lb_qcm_isometry(0, 1), 0);
  EXPECT_EQ(lb_qcm_isometry(2, 2), 3);
}

TEST(ParamCountExtreme, Examples) {
  EXPECT_EQ(param_count_extreme(1, 1), 8);
  EXPECT_EQ(param_count_extreme(2, 2), 96);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(param_count_extreme(0, n), (std::int64_t{2} << n) - 2);
}

TEST(Bounds, ArgumentRange) {
  EXPECT_THROW(lb_random_qcm(-1, 0), std::invalid_argument);
  EXPECT_THROW(lb_measured_qcm(0, 21), std::invalid_argument);
  EXPECT_NO_THROW(param_count_extreme(20, 20));
}

TEST(Bounds, MatchesGoldenFile) {
  std::ifstream in(std::string(QCHANNEL_TEST_DATA) + "/bounds_golden.csv");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(bounds_csv(5, 5), ss.str());
}

TEST(Bounds, NonNegativeAndMonotoneInOutputs) {
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const BoundsReport r = table1(m, n);
      for (std::int64_t v : {r.lb_qcm, r.lb_random, r.lb_measured, r.lb_isometry, r.param_count_extreme,
                             r.ub_asymptotic_qcm, r.ub_asymptotic_random, r.ub_asymptotic_measured}) {
        EXPECT_GE(v, 0);
      }
      EXPECT_LE(lb_random_qcm(m, n), lb_random_qcm(m, n + 1));
      EXPECT_LE(param_count_extreme(m, n), param_count_extreme(m, n + 1));
    }
  }
}

TEST(Bounds, MeasuredNotAboveRandom) {
  for (int m = 1; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) EXPECT_LE(lb_measured_qcm(m, n), lb_random_qcm(m, n)) << m << "," << n;
  }
  // Without inputs the two formulas cross once.
  EXPECT_EQ(lb_measured_qcm(0, 2), 1);
  EXPECT_EQ(lb_random_qcm(0, 2), 0);
}

TEST(Table1, Fields) {
  EXPECT_EQ(table1(2, 1).qubits_measured, 3);
  EXPECT_EQ(table1(1, 2).qubits_measured, 2);
  EXPECT_EQ(table1(1, 1).ub_asymptotic_random, 8);
  const BoundsReport r = table1(1, 2);
  EXPECT_EQ(r.lb_measured, 2);
  EXPECT_EQ(r.lb_random, 5);
  EXPECT_EQ(r.lb_isometry, 2);
  EXPECT_EQ(r.param_count_extreme, 24);
  EXPECT_EQ(r.qubits_qcm, 5);
  EXPECT_EQ(r.qubits_random, 3);
  EXPECT_EQ(r.lb_qcm, 16);
  EXPECT_NE(r.to_text().find("lb_measured=2"), std::string::npos);
}

TEST(BoundsCsv, Header) {
  const std::string csv = bounds_csv(0, 0);
  EXPECT_EQ(csv, "m,n,lb_random_qcm,lb_measured_qcm,lb_qcm_isometry,param_count_extreme\n0,0,0,0,0,0\n");
}

}  // namespace
}  // namespace qchannel
