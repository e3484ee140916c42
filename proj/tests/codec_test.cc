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

#include "core/codec.h"

#include <cmath>
#include <cstdint>
#include <limits>

#include <gtest/gtest.h>

#include "core/error.h"
#include "core/random.h"

namespace petfabric {
namespace {

void ExpectCode(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(DeriveParamsTest, WeightDomain) {
  const EncodingParams p = DeriveParams(50, 120, 1);
  EXPECT_EQ(p.q_min, 50);
  EXPECT_EQ(p.q, 170);
  EXPECT_EQ(p.offset(), 50);
}

TEST(DeriveParamsTest, NegativeAndUnitDomains) {
  const EncodingParams neg = DeriveParams(-10, 20, 1);
  EXPECT_EQ(neg.q_min, -10);
  EXPECT_EQ(neg.q, 30);
  const EncodingParams unit = DeriveParams(0.0, 1.0, 100);
  EXPECT_EQ(unit.q_min, 0);
  EXPECT_EQ(unit.q, 100);
}

TEST(DeriveParamsTest, RejectsBadInputs) {
  ExpectCode(ErrorCode::kDomainInverted, [] { DeriveParams(5, 4, 1); });
  ExpectCode(ErrorCode::kInvalidArgument, [] { DeriveParams(0, 1, 0); });
  ExpectCode(ErrorCode::kInvalidArgument,
             [] { DeriveParams(0, std::numeric_limits<double>::infinity(), 1); });
  ExpectCode(ErrorCode::kOverflow, [] { DeriveParams(0, 1e300, 1000); });
}

TEST(EncodeTest, PointValues) {
  const EncodingParams w = DeriveParams(50, 120, 1);
  EXPECT_EQ(Encode(72.4, w), 122);
  EXPECT_DOUBLE_EQ(Decode(122, w), 72.0);
  const EncodingParams n = DeriveParams(-10, 20, 1);
  EXPECT_EQ(Encode(-10, n), 0);
  EXPECT_DOUBLE_EQ(Decode(0, n), -10.0);
  // Floor, not truncation, below zero.
  EXPECT_EQ(Encode(-0.5, n), 9);
}

TEST(EncodeTest, NeverClamps) {
  const EncodingParams w = DeriveParams(50, 120, 1);
  ExpectCode(ErrorCode::kOutOfDomain, [&] { Encode(49.9, w); });
  ExpectCode(ErrorCode::kOutOfDomain, [&] { Encode(120.1, w); });
  ExpectCode(ErrorCode::kOutOfDomain,
             [&] { Encode(std::numeric_limits<double>::quiet_NaN(), w); });
  // Decode accepts noisy values outside [0, q].
  EXPECT_DOUBLE_EQ(Decode(-30, w), -80.0);
}

TEST(FloorScaledTest, ImmuneToProductRounding) {
  // 0.009 * 1000 rounds to exactly 9.0 in double arithmetic, but the double
  // nearest 0.009 lies below 9/1000, so the true floor is 8.
  EXPECT_EQ(FloorScaled(0.009, 1000), 8);
  EXPECT_EQ(FloorScaled(0.019, 1000), 18);
  EXPECT_EQ(FloorScaled(0.29, 100), 28);
  EXPECT_EQ(FloorScaled(0.5, 100), 50);
  EXPECT_EQ(FloorScaled(-0.5, 100), -50);
  EXPECT_EQ(FloorScaled(-0.29, 100), -29);
}

// decode(encode(x)) lies in (x - 1/k, x] for every x in the domain.
void SweepRoundTrip(double lo, double hi, std::int64_t k, std::uint64_t seed) {
  const EncodingParams p = DeriveParams(lo, hi, k);
  Rng rng(seed);
  const double bound = 1.0 / static_cast<double>(k);
  for (int i = 0; i < 100000; ++i) {
    const double x = lo + (hi - lo) * rng.Uniform01();
    const EncodedValue y = Encode(x, p);
    ASSERT_GE(y, 0);
    ASSERT_LE(y, p.q);
    const double err = x - Decode(y, p);
    ASSERT_GE(err, 0.0) << "x=" << x;
    ASSERT_LT(err, bound + 1e-12) << "x=" << x;
  }
}

TEST(RoundTripTest, WeightDomain) { SweepRoundTrip(50, 120, 1, 1); }
TEST(RoundTripTest, NegativeDomain) { SweepRoundTrip(-10, 20, 10, 2); }
TEST(RoundTripTest, UnitDomain) { SweepRoundTrip(0, 1, 100, 3); }

}  // namespace
}  // namespace petfabric
