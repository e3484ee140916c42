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

// Fixed-point encoding of real sensor readings into non-negative integers.
//
// A reading x in [x_lo, x_hi] at precision k encodes to
//   |q_min| + floor(x * k),   q_min = floor(x_lo * k),
// and the encoded width is q = |q_min| + floor(x_hi * k). Decoding is
// (y - |q_min|) / k and accepts any integer, since noise may push a value
// outside [0, q].

#ifndef PETFABRIC_CORE_CODEC_H_
#define PETFABRIC_CORE_CODEC_H_

#include <cstdint>

namespace petfabric {

// Signed so that noisy values below zero stay representable.
using EncodedValue = std::int64_t;

struct EncodingParams {
  std::int64_t k = 1;
  double x_lo = 0.0;
  double x_hi = 0.0;
  std::int64_t q_min = 0;
  std::int64_t q = 0;

  std::int64_t offset() const { return q_min < 0 ? -q_min : q_min; }
};

// Throws kDomainInverted if x_lo > x_hi, kInvalidArgument if k < 1 or a bound
// is not finite, kOverflow if the encoded width does not fit in 62 bits.
EncodingParams DeriveParams(double x_lo, double x_hi, std::int64_t k);

// Exact floor(x * k) for the double x, immune to rounding of the product.
std::int64_t FloorScaled(double x, std::int64_t k);

// Throws kOutOfDomain when x is outside [x_lo, x_hi]; never clamps.
EncodedValue Encode(double x, const EncodingParams& p);

double Decode(std::int64_t y, const EncodingParams& p);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_CODEC_H_
