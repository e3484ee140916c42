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

#include "core/envelope.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "core/error.h"

namespace petfabric {
namespace {

struct Fixture {
  bool ok = false;
  std::string name;
  std::string hex;
};

// Fixtures were produced by an independent CBOR encoder (Python cbor2 in
// canonical mode) and frozen.
std::vector<Fixture> LoadFixtures() {
  std::ifstream in(std::string(PETFABRIC_TESTDATA) + "/cbor_fixtures.txt");
  std::vector<Fixture> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Fixture f;
    std::string status;
    fields >> status >> f.name >> f.hex;
    f.ok = status == "ok";
    out.push_back(f);
  }
  return out;
}

Envelope Raw() {
  Envelope e;
  e.sensor_id = "s1";
  e.value = 122;
  return e;
}

TEST(EnvelopeTest, MinimalRawRoundTrip) {
  const Envelope e = Raw();
  const auto bytes = EncodePayload(e);
  EXPECT_EQ(ToHex(bytes), "a5006273310100020003187a0600");
  EXPECT_EQ(DecodePayload(bytes), e);
}

TEST(EnvelopeTest, GoldenFixturesRoundTrip) {
  const auto fixtures = LoadFixtures();
  ASSERT_GE(fixtures.size(), 10u);
  int good = 0;
  for (const Fixture& f : fixtures) {
    if (!f.ok) continue;
    ++good;
    const auto bytes = FromHex(f.hex);
    const Envelope e = DecodePayload(bytes);
    EXPECT_EQ(ToHex(EncodePayload(e)), f.hex) << f.name;
  }
  EXPECT_GE(good, 5);
}

TEST(EnvelopeTest, MalformedFixturesFail) {
  for (const Fixture& f : LoadFixtures()) {
    if (f.ok) continue;
    try {
      DecodePayload(FromHex(f.hex));
      ADD_FAILURE() << f.name << " decoded";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDecode) << f.name;
    }
  }
}

TEST(EnvelopeTest, FixtureFieldValues) {
  // ass_share: sensor-2, seq 9, share index 2, value 84000, origin 2^32 us.
  const Envelope e = DecodePayload(FromHex(
      "a6006873656e736f722d3201090203031a000148200402061b0000000100000000"));
  EXPECT_EQ(e.sensor_id, "sensor-2");
  EXPECT_EQ(e.sequence, 9u);
  EXPECT_EQ(e.scheme, Scheme::kAssShare);
  EXPECT_EQ(e.value, 84000);
  EXPECT_EQ(e.share_index, 2u);
  EXPECT_FALSE(e.epsilon.has_value());
  EXPECT_EQ(e.origin_us, std::uint64_t{1} << 32);
}

TEST(EnvelopeTest, FloatWidths) {
  Envelope e = Raw();
  e.scheme = Scheme::kLdp;
  for (double eps : {0.5, 100000.0, 0.1, 1e300}) {
    e.epsilon = eps;
    const auto bytes = EncodePayload(e);
    EXPECT_EQ(DecodePayload(bytes).epsilon, eps);
  }
  e.epsilon = 0.5;
  EXPECT_NE(ToHex(EncodePayload(e)).find("05f93800"), std::string::npos);
  e.epsilon = 100000.0;
  EXPECT_NE(ToHex(EncodePayload(e)).find("05fa47c35000"), std::string::npos);
}

TEST(EnvelopeTest, StableBytes) {
  Envelope e = Raw();
  e.scheme = Scheme::kGdp;
  e.epsilon = 1.0;
  e.value = -43555;
  EXPECT_EQ(EncodePayload(e), EncodePayload(e));
  EXPECT_EQ(DecodePayload(EncodePayload(e)), e);
}

TEST(EnvelopeTest, ValidationOnEncode) {
  Envelope e = Raw();
  e.scheme = Scheme::kAssShare;
  EXPECT_THROW(EncodePayload(e), Error);  // share index missing
  e.share_index = 1;
  e.value = -1;
  EXPECT_THROW(EncodePayload(e), Error);
  e = Raw();
  e.epsilon = 1.0;
  EXPECT_THROW(EncodePayload(e), Error);  // raw carries no epsilon
  e = Raw();
  e.sensor_id = std::string("\xc3\x28", 2);
  EXPECT_THROW(EncodePayload(e), Error);
}

TEST(HexTest, RoundTripAndErrors) {
  const std::vector<std::uint8_t> v = {0x00, 0xab, 0xff};
  EXPECT_EQ(ToHex(v), "00abff");
  EXPECT_EQ(FromHex("00ABff"), v);
  EXPECT_THROW(FromHex("abc"), Error);
  EXPECT_THROW(FromHex("zz"), Error);
}

TEST(Utf8Test, Validity) {
  EXPECT_TRUE(IsValidUtf8("caf\xc3\xa9"));
  EXPECT_FALSE(IsValidUtf8("\xc3\x28"));
  EXPECT_FALSE(IsValidUtf8("\xed\xa0\x80"));  // surrogate
  EXPECT_FALSE(IsValidUtf8("\xc0\xaf"));      // overlong
}

}  // namespace
}  // namespace petfabric
