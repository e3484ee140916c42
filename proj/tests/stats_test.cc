// Copyright 2026 The PET Fabric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/stats.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "core/random.h"

namespace petfabric {
namespace {

TEST(ChiSquareTest, SurvivalReferenceValues) {
  // Tabulated critical values: P(chi2_1 > 3.841459) = 0.05,
  // P(chi2_100 > 135.8067) = 0.01, P(chi2_2 > x) = exp(-x/2).
  EXPECT_NEAR(ChiSquareSurvival(3.841459, 1), 0.05, 1e-6);
  EXPECT_NEAR(ChiSquareSurvival(135.8067, 100), 0.01, 1e-5);
  EXPECT_NEAR(ChiSquareSurvival(4.0, 2), std::exp(-2.0), 1e-12);
  EXPECT_DOUBLE_EQ(ChiSquareSurvival(0.0, 5), 1.0);
}

TEST(ChiSquareTest, UniformCounts) {
  const std::vector<std::uint64_t> flat(10, 100);
  const TestResult r = ChiSquareUniform(flat);
  EXPECT_DOUBLE_EQ(r.statistic, 0.0);
  EXPECT_DOUBLE_EQ(r.dof, 9.0);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
  // Hand-computed: expected 25 each, (35-25)^2/25 + 3 * ... = 4 + 0 + ...
  const std::vector<std::uint64_t> skew = {35, 25, 20, 20};
  const TestResult s = ChiSquareUniform(skew);
  EXPECT_NEAR(s.statistic, (100.0 + 0.0 + 25.0 + 25.0) / 25.0, 1e-12);
  EXPECT_DOUBLE_EQ(s.dof, 3.0);
  EXPECT_DOUBLE_EQ(ChiSquareUniform({}).p_value, 1.0);
}

TEST(ChiSquareTest, DetectsSkew) {
  std::vector<std::uint64_t> counts(101, 1000);
  counts[0] = 1600;
  EXPECT_LT(ChiSquareUniform(counts).p_value, 1e-6);
}

TEST(ChiSquareTest, TwoSampleHomogeneity) {
  const std::vector<std::uint64_t> a = {10, 20, 30, 0};
  const std::vector<std::uint64_t> b = {20, 40, 60, 0};
  const TestResult same = ChiSquareTwoSample(a, b);
  EXPECT_NEAR(same.statistic, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(same.dof, 2.0);  // the empty bin does not count
  // 2x2 table {{30,10},{10,30}}: chi2 = 80 * (900-100)^2 / (40^4) = 20.
  const TestResult diff = ChiSquareTwoSample(std::vector<std::uint64_t>{30, 10},
                                             std::vector<std::uint64_t>{10, 30});
  EXPECT_NEAR(diff.statistic, 20.0, 1e-9);
  EXPECT_LT(diff.p_value, 1e-4);
}

TEST(KsTest, KolmogorovTail) {
  // Q(1.3581) ~= 0.05 and Q(1.6276) ~= 0.01 from the Kolmogorov table.
  EXPECT_NEAR(KolmogorovQ(1.3581), 0.05, 5e-4);
  EXPECT_NEAR(KolmogorovQ(1.6276), 0.01, 2e-4);
  EXPECT_DOUBLE_EQ(KolmogorovQ(0.0), 1.0);
}

TEST(KsTest, StatisticAndPower) {
  const std::vector<double> a = {1, 2, 3, 4};
  const std::vector<double> b = {3, 4, 5, 6};
  EXPECT_DOUBLE_EQ(KolmogorovSmirnovTwoSample(a, b).statistic, 0.5);
  EXPECT_DOUBLE_EQ(KolmogorovSmirnovTwoSample(a, a).statistic, 0.0);

  // Calibration: same-distribution samples reject at about the nominal rate.
  int rejections = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    std::vector<double> x(1000), y(1000);
    for (auto& v : x) v = rng.StandardNormal();
    for (auto& v : y) v = rng.StandardNormal();
    rejections += KolmogorovSmirnovTwoSample(x, y).p_value < 0.05;
  }
  EXPECT_LE(rejections, 20);

  Rng rng(1);
  std::vector<double> x(2000), z(2000);
  for (auto& v : x) v = rng.StandardNormal();
  for (auto& v : z) v = rng.StandardNormal() + 0.3;
  EXPECT_LT(KolmogorovSmirnovTwoSample(x, z).p_value, 1e-6);
}

TEST(SummaryTest, Basic) {
  const std::vector<double> v = {4, 1, 3, 2};
  const Summary s = Summarize(v);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.median, 2.5);
  EXPECT_NEAR(s.stddev, std::sqrt(5.0 / 3.0), 1e-12);
  EXPECT_DOUBLE_EQ(s.min, 1);
  EXPECT_DOUBLE_EQ(s.max, 4);
  const std::vector<double> odd = {5, 1, 9};
  EXPECT_DOUBLE_EQ(Median(odd), 5);
  EXPECT_DOUBLE_EQ(Summarize(std::vector<double>{7}).stddev, 0.0);
}

}  // namespace
}  // namespace petfabric
