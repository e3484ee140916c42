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
#include <string>

#include "core/error.h"

namespace petfabric {

namespace {

constexpr double kScaledLimit = 0x1.0p61;

}  // namespace

std::int64_t FloorScaled(double x, std::int64_t k) {
  const double kd = static_cast<double>(k);
  double n = std::floor(x * kd);
  // The residual x*k - n is computed with a single rounding, so its sign is
  // exact and corrects a product that rounded across an integer.
  const double r = std::fma(x, kd, -n);
  if (r < 0.0) {
    n -= 1.0;
  } else if (r >= 1.0) {
    n += 1.0;
  }
  return static_cast<std::int64_t>(n);
}

EncodingParams DeriveParams(double x_lo, double x_hi, std::int64_t k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "precision k must be >= 1, got " + std::to_string(k));
  }
  if (!std::isfinite(x_lo) || !std::isfinite(x_hi)) {
    throw Error(ErrorCode::kInvalidArgument, "domain bounds must be finite");
  }
  if (x_lo > x_hi) {
    throw Error(ErrorCode::kDomainInverted,
                "domain minimum " + std::to_string(x_lo) +
                    " exceeds maximum " + std::to_string(x_hi));
  }
  const double kd = static_cast<double>(k);
  if (std::fabs(x_lo * kd) >= kScaledLimit ||
      std::fabs(x_hi * kd) >= kScaledLimit) {
    throw Error(ErrorCode::kOverflow, "scaled domain exceeds 61 bits");
  }
  EncodingParams p;
  p.k = k;
  p.x_lo = x_lo;
  p.x_hi = x_hi;
  p.q_min = FloorScaled(x_lo, k);
  p.q = p.offset() + FloorScaled(x_hi, k);
  if (p.q < 0) {
    // Only reachable when x_hi*k < -|q_min|, i.e. never for x_lo <= x_hi.
    throw Error(ErrorCode::kInternal, "negative encoded width");
  }
  return p;
}

EncodedValue Encode(double x, const EncodingParams& p) {
  if (!(x >= p.x_lo && x <= p.x_hi)) {
    throw Error(ErrorCode::kOutOfDomain,
                "value " + std::to_string(x) + " outside [" +
                    std::to_string(p.x_lo) + ", " + std::to_string(p.x_hi) +
                    "]");
  }
  return p.offset() + FloorScaled(x, p.k);
}

double Decode(std::int64_t y, const EncodingParams& p) {
  return static_cast<double>(y - p.offset()) / static_cast<double>(p.k);
}

}  // namespace petfabric
