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

// Wire envelope and its canonical CBOR payload.
//
// The payload is a definite-length CBOR map with unsigned integer keys in
// ascending order:
//
//   0  sensor id        text string
//   1  sequence         unsigned
//   2  scheme tag       unsigned (0 raw, 1 ldp, 2 gdp, 3 ass-share, 4 krr)
//   3  value            integer; unsigned share value when scheme = 3
//   4  share index      unsigned, present iff scheme = 3
//   5  epsilon          float, present iff scheme is 1, 2 or 4
//   6  origin time      unsigned microseconds
//
// Integers use the shortest head; floats use the shortest of half, single and
// double that holds the value exactly. The decoder accepts only definite
// lengths, minimal integer heads, ascending unique keys and no trailing bytes.

#ifndef PETFABRIC_CORE_ENVELOPE_H_
#define PETFABRIC_CORE_ENVELOPE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace petfabric {

enum class Scheme : std::uint8_t {
  kRaw = 0,
  kLdp = 1,
  kGdp = 2,
  kAssShare = 3,
  kKrr = 4,
};

const char* SchemeName(Scheme scheme);

bool SchemeCarriesEpsilon(Scheme scheme);

struct Envelope {
  // Transport-level; not part of the CBOR payload.
  std::string topic;

  std::string sensor_id;
  std::uint64_t sequence = 0;
  Scheme scheme = Scheme::kRaw;
  std::int64_t value = 0;
  std::optional<std::uint64_t> share_index;
  std::optional<double> epsilon;
  std::uint64_t origin_us = 0;

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

// Throws kInvalidArgument when the optional fields disagree with the scheme,
// a share value is negative, or the sensor id is not UTF-8.
void ValidateEnvelope(const Envelope& env);

std::vector<std::uint8_t> EncodePayload(const Envelope& env);

// Throws kDecode on malformed bytes, an unknown scheme tag, missing mandatory
// keys, or optional keys inconsistent with the scheme. The returned envelope
// has an empty topic.
Envelope DecodePayload(std::span<const std::uint8_t> bytes);

std::string ToHex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> FromHex(const std::string& hex);

bool IsValidUtf8(const std::string& s);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_ENVELOPE_H_
