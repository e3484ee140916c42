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

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>

#include "core/error.h"

namespace petfabric {

namespace {

enum Major : std::uint8_t {
  kUnsigned = 0,
  kNegative = 1,
  kText = 3,
  kMap = 5,
  kSimple = 7,
};

enum Key : std::uint64_t {
  kKeySensor = 0,
  kKeySequence = 1,
  kKeyScheme = 2,
  kKeyValue = 3,
  kKeyShareIndex = 4,
  kKeyEpsilon = 5,
  kKeyOrigin = 6,
  kKeyCount = 7,
};

class Writer {
 public:
  void Head(std::uint8_t major, std::uint64_t arg) {
    const auto m = static_cast<std::uint8_t>(major << 5);
    if (arg < 24) {
      out_.push_back(static_cast<std::uint8_t>(m | arg));
    } else if (arg <= 0xff) {
      out_.push_back(m | 24);
      Be(arg, 1);
    } else if (arg <= 0xffff) {
      out_.push_back(m | 25);
      Be(arg, 2);
    } else if (arg <= 0xffffffffULL) {
      out_.push_back(m | 26);
      Be(arg, 4);
    } else {
      out_.push_back(m | 27);
      Be(arg, 8);
    }
  }

  void Int(std::int64_t v) {
    if (v >= 0) {
      Head(kUnsigned, static_cast<std::uint64_t>(v));
    } else {
      // -1 - v without overflow at INT64_MIN.
      Head(kNegative, ~static_cast<std::uint64_t>(v));
    }
  }

  void Text(const std::string& s) {
    Head(kText, s.size());
    out_.insert(out_.end(), s.begin(), s.end());
  }

  void Float(double v);

  std::vector<std::uint8_t> Take() { return std::move(out_); }

 private:
  void Be(std::uint64_t v, int bytes) {
    for (int i = bytes - 1; i >= 0; --i) {
      out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }

  std::vector<std::uint8_t> out_;
};

// Half-precision bits for v when the conversion is exact.
std::optional<std::uint16_t> ExactHalf(double v) {
  if (std::isnan(v)) return 0x7e00;
  const std::uint16_t sign = std::signbit(v) ? 0x8000 : 0;
  const double a = std::fabs(v);
  if (a == 0.0) return sign;
  if (std::isinf(a)) return static_cast<std::uint16_t>(sign | 0x7c00);
  if (a < 0x1.0p-14) {
    const double m = std::ldexp(a, 24);
    if (m != std::floor(m) || m >= 1024.0) return std::nullopt;
    return static_cast<std::uint16_t>(sign | static_cast<std::uint16_t>(m));
  }
  int e = 0;
  const double f = std::frexp(a, &e);  // a = f * 2^e, f in [0.5, 1)
  const int exponent = e - 1;
  if (exponent > 15) return std::nullopt;
  const double mant = (f * 2.0 - 1.0) * 1024.0;
  if (mant != std::floor(mant)) return std::nullopt;
  return static_cast<std::uint16_t>(
      sign | static_cast<std::uint16_t>((exponent + 15) << 10) |
      static_cast<std::uint16_t>(mant));
}

double HalfToDouble(std::uint16_t h) {
  const int exponent = (h >> 10) & 0x1f;
  const int mant = h & 0x3ff;
  double v;
  if (exponent == 0) {
    v = std::ldexp(static_cast<double>(mant), -24);
  } else if (exponent == 31) {
    v = mant == 0 ? std::numeric_limits<double>::infinity()
                  : std::numeric_limits<double>::quiet_NaN();
  } else {
    v = std::ldexp(static_cast<double>(mant + 1024), exponent - 25);
  }
  return (h & 0x8000) ? -v : v;
}

void Writer::Float(double v) {
  const auto m = static_cast<std::uint8_t>(kSimple << 5);
  if (auto half = ExactHalf(v)) {
    out_.push_back(m | 25);
    Be(*half, 2);
    return;
  }
  // Narrowing a finite double beyond the float range is undefined.
  const bool fits = std::fabs(v) <= std::numeric_limits<float>::max();
  const auto single = fits ? static_cast<float>(v) : 0.0f;
  if (fits && static_cast<double>(single) == v) {
    out_.push_back(m | 26);
    Be(std::bit_cast<std::uint32_t>(single), 4);
    return;
  }
  out_.push_back(m | 27);
  Be(std::bit_cast<std::uint64_t>(v), 8);
}

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kDecode, "CBOR payload: " + what);
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  bool AtEnd() const { return pos_ == in_.size(); }

  // Reads an item head; rejects indefinite lengths and non-minimal heads.
  std::pair<std::uint8_t, std::uint64_t> Head() {
    const std::uint8_t initial = Byte();
    const std::uint8_t major = initial >> 5;
    const std::uint8_t info = initial & 0x1f;
    if (major == kSimple) {
      // Floats are read by the caller from the raw additional info.
      return {major, info};
    }
    std::uint64_t arg;
    if (info < 24) {
      arg = info;
    } else if (info <= 27) {
      const int bytes = 1 << (info - 24);
      arg = Be(bytes);
      const std::uint64_t floor = info == 24 ? 24 : (1ULL << (4 << (info - 24)));
      if (arg < floor) Fail("non-minimal integer head");
    } else if (info == 31) {
      Fail("indefinite-length item");
    } else {
      Fail("reserved additional information " + std::to_string(info));
    }
    return {major, arg};
  }

  std::uint64_t Unsigned(const char* field) {
    auto [major, arg] = Head();
    if (major != kUnsigned) Fail(std::string(field) + " is not unsigned");
    return arg;
  }

  std::int64_t Integer(const char* field) {
    auto [major, arg] = Head();
    if (major != kUnsigned && major != kNegative) {
      Fail(std::string(field) + " is not an integer");
    }
    if (arg > static_cast<std::uint64_t>(
                  std::numeric_limits<std::int64_t>::max())) {
      Fail(std::string(field) + " exceeds 64-bit signed range");
    }
    const auto v = static_cast<std::int64_t>(arg);
    return major == kUnsigned ? v : -1 - v;
  }

  std::string Text(const char* field) {
    auto [major, len] = Head();
    if (major != kText) Fail(std::string(field) + " is not a text string");
    if (len > in_.size() - pos_) Fail("text string runs past end");
    std::string s(reinterpret_cast<const char*>(in_.data() + pos_),
                  static_cast<std::size_t>(len));
    pos_ += static_cast<std::size_t>(len);
    if (!IsValidUtf8(s)) Fail(std::string(field) + " is not valid UTF-8");
    return s;
  }

  double Float(const char* field) {
    auto [major, info] = Head();
    if (major != kSimple) Fail(std::string(field) + " is not a float");
    switch (info) {
      case 25:
        return HalfToDouble(static_cast<std::uint16_t>(Be(2)));
      case 26:
        return static_cast<double>(
            std::bit_cast<float>(static_cast<std::uint32_t>(Be(4))));
      case 27:
        return std::bit_cast<double>(Be(8));
      default:
        Fail(std::string(field) + " is not a float");
    }
  }

 private:
  std::uint8_t Byte() {
    if (pos_ >= in_.size()) Fail("truncated input");
    return in_[pos_++];
  }

  std::uint64_t Be(int bytes) {
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v = (v << 8) | Byte();
    return v;
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

const char* SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kRaw: return "raw";
    case Scheme::kLdp: return "ldp";
    case Scheme::kGdp: return "gdp";
    case Scheme::kAssShare: return "ass-share";
    case Scheme::kKrr: return "krr";
  }
  return "unknown";
}

bool SchemeCarriesEpsilon(Scheme scheme) {
  return scheme == Scheme::kLdp || scheme == Scheme::kGdp ||
         scheme == Scheme::kKrr;
}

void ValidateEnvelope(const Envelope& env) {
  if (static_cast<std::uint8_t>(env.scheme) > 4) {
    throw Error(ErrorCode::kInvalidArgument, "unknown scheme tag");
  }
  if (!IsValidUtf8(env.sensor_id)) {
    throw Error(ErrorCode::kInvalidArgument, "sensor id is not valid UTF-8");
  }
  const bool is_share = env.scheme == Scheme::kAssShare;
  if (env.share_index.has_value() != is_share) {
    throw Error(ErrorCode::kInvalidArgument,
                "share index must be present exactly for ass-share payloads");
  }
  if (is_share && env.value < 0) {
    throw Error(ErrorCode::kInvalidArgument, "share value must be unsigned");
  }
  if (env.epsilon.has_value() != SchemeCarriesEpsilon(env.scheme)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must be present exactly for ldp, gdp and krr "
                "payloads");
  }
  if (env.epsilon && !(*env.epsilon > 0.0 && std::isfinite(*env.epsilon))) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
}

std::vector<std::uint8_t> EncodePayload(const Envelope& env) {
  ValidateEnvelope(env);
  Writer w;
  std::uint64_t entries = 5;
  if (env.share_index) ++entries;
  if (env.epsilon) ++entries;
  w.Head(kMap, entries);
  w.Head(kUnsigned, kKeySensor);
  w.Text(env.sensor_id);
  w.Head(kUnsigned, kKeySequence);
  w.Head(kUnsigned, env.sequence);
  w.Head(kUnsigned, kKeyScheme);
  w.Head(kUnsigned, static_cast<std::uint64_t>(env.scheme));
  w.Head(kUnsigned, kKeyValue);
  w.Int(env.value);
  if (env.share_index) {
    w.Head(kUnsigned, kKeyShareIndex);
    w.Head(kUnsigned, *env.share_index);
  }
  if (env.epsilon) {
    w.Head(kUnsigned, kKeyEpsilon);
    w.Float(*env.epsilon);
  }
  w.Head(kUnsigned, kKeyOrigin);
  w.Head(kUnsigned, env.origin_us);
  return w.Take();
}

Envelope DecodePayload(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  auto [major, entries] = r.Head();
  if (major != kMap) Fail("top-level item is not a map");
  if (entries > kKeyCount) Fail("too many map entries");

  Envelope env;
  bool seen[kKeyCount] = {};
  std::int64_t last_key = -1;
  bool value_unsigned = true;
  for (std::uint64_t i = 0; i < entries; ++i) {
    const std::uint64_t key = r.Unsigned("map key");
    if (key >= kKeyCount) Fail("unknown key " + std::to_string(key));
    if (static_cast<std::int64_t>(key) <= last_key) {
      Fail("keys not in ascending order");
    }
    last_key = static_cast<std::int64_t>(key);
    seen[key] = true;
    switch (key) {
      case kKeySensor:
        env.sensor_id = r.Text("sensor id");
        break;
      case kKeySequence:
        env.sequence = r.Unsigned("sequence");
        break;
      case kKeyScheme: {
        const std::uint64_t tag = r.Unsigned("scheme tag");
        if (tag > 4) Fail("unknown scheme tag " + std::to_string(tag));
        env.scheme = static_cast<Scheme>(tag);
        break;
      }
      case kKeyValue:
        env.value = r.Integer("value");
        value_unsigned = env.value >= 0;
        break;
      case kKeyShareIndex:
        env.share_index = r.Unsigned("share index");
        break;
      case kKeyEpsilon:
        env.epsilon = r.Float("epsilon");
        if (!(*env.epsilon > 0.0 && std::isfinite(*env.epsilon))) {
          Fail("epsilon is not a positive finite number");
        }
        break;
      case kKeyOrigin:
        env.origin_us = r.Unsigned("origin timestamp");
        break;
    }
  }
  if (!r.AtEnd()) Fail("trailing bytes after map");
  for (auto key : {kKeySensor, kKeySequence, kKeyScheme, kKeyValue,
                   kKeyOrigin}) {
    if (!seen[key]) Fail("missing mandatory key " + std::to_string(key));
  }
  const bool is_share = env.scheme == Scheme::kAssShare;
  if (is_share && !seen[kKeyShareIndex]) Fail("share payload without key 4");
  if (!is_share && seen[kKeyShareIndex]) Fail("key 4 on a non-share payload");
  if (is_share && !value_unsigned) Fail("share value is negative");
  if (SchemeCarriesEpsilon(env.scheme) != seen[kKeyEpsilon]) {
    Fail("key 5 presence does not match scheme " +
         std::string(SchemeName(env.scheme)));
  }
  return env;
}

std::string ToHex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> FromHex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "odd-length hex string");
  }
  std::vector<std::uint8_t> out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]);
    const int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kInvalidArgument, "invalid hex digit");
    }
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

bool IsValidUtf8(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xe0) == 0xc0) {
      len = 2;
      cp = c & 0x1f;
    } else if ((c & 0xf0) == 0xe0) {
      len = 3;
      cp = c & 0x0f;
    } else if ((c & 0xf8) == 0xf0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t j = 1; j < len; ++j) {
      const auto cc = static_cast<unsigned char>(s[i + j]);
      if ((cc & 0xc0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3f);
    }
    // Overlong forms, surrogates and values past U+10FFFF.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10ffff ||
        (cp >= 0xd800 && cp <= 0xdfff)) {
      return false;
    }
    i += len;
  }
  return true;
}

}  // namespace petfabric
