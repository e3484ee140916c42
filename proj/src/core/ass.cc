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

#include "core/ass.h"

#include <array>
#include <string>

#include "core/error.h"

namespace petfabric {

namespace {

using u128 = unsigned __int128;

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t SubMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : m - (b - a);
}

}  // namespace

std::uint64_t AddMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // a, b < m. A wrapped sum is still correct after subtracting m mod 2^64.
  const std::uint64_t s = a + b;
  return (s < a || s >= m) ? s - m : s;
}

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  // The first twelve primes are a deterministic witness set below 2^64.
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t NextPrimeAbove(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!IsPrime(c)) ++c;
  return c;
}

FieldParams FieldParams::Create(std::uint64_t modulus, std::uint64_t n_max,
                                std::int64_t q) {
  if (n_max == 0 || q < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "field needs n_max >= 1 and q >= 1");
  }
  const u128 bound = static_cast<u128>(n_max) * static_cast<std::uint64_t>(q);
  if (bound > kFieldBound) {
    throw Error(ErrorCode::kOverflow,
                "n_max * q exceeds the 62-bit field bound");
  }
  if (!IsPrime(modulus)) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus " + std::to_string(modulus) + " is not prime");
  }
  if (static_cast<u128>(modulus) <= bound) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus " + std::to_string(modulus) +
                    " does not exceed n_max * q = " +
                    std::to_string(static_cast<std::uint64_t>(bound)));
  }
  return FieldParams(modulus, n_max, q);
}

FieldParams ChooseModulus(std::uint64_t n_max, std::int64_t q) {
  if (n_max == 0 || q < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "choose_modulus needs n_max >= 1 and q >= 1");
  }
  const u128 bound = static_cast<u128>(n_max) * static_cast<std::uint64_t>(q);
  if (bound > kFieldBound) {
    throw Error(ErrorCode::kOverflow,
                "n_max * q exceeds the 62-bit field bound");
  }
  return FieldParams::Create(
      NextPrimeAbove(static_cast<std::uint64_t>(bound)), n_max, q);
}

ShareBundle Split(std::string sensor_id, EncodedValue secret, std::uint32_t m,
                  const FieldParams& fp, Rng& rng) {
  if (m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "share count m must be >= 1");
  }
  if (secret < 0 || secret > fp.q()) {
    throw Error(ErrorCode::kOutOfRange,
                "secret " + std::to_string(secret) + " outside [0, " +
                    std::to_string(fp.q()) + "]");
  }
  const std::uint64_t mod = fp.modulus();
  ShareBundle bundle{std::move(sensor_id), mod, {}};
  bundle.shares.reserve(m);
  std::uint64_t last = static_cast<std::uint64_t>(secret) % mod;
  for (std::uint32_t j = 0; j + 1 < m; ++j) {
    const std::uint64_t share = rng.UniformBelow(mod);
    last = SubMod(last, share, mod);
    bundle.shares.emplace_back(share);
  }
  bundle.shares.emplace_back(last);
  return bundle;
}

std::int64_t ReconstructSum(std::span<const ShareBundle> bundles,
                            const FieldParams& fp) {
  if (bundles.size() > fp.n_max()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(bundles.size()) + " bundles exceed n_max " +
                    std::to_string(fp.n_max()));
  }
  const std::uint64_t mod = fp.modulus();
  std::vector<MissingShare> missing;
  std::uint64_t total = 0;
  const std::size_t m = bundles.empty() ? 0 : bundles.front().m();
  for (const ShareBundle& b : bundles) {
    if (b.modulus != mod) {
      throw Error(ErrorCode::kModulusMismatch,
                  "bundle from " + b.sensor_id + " uses modulus " +
                      std::to_string(b.modulus) + ", expected " +
                      std::to_string(mod));
    }
    if (b.m() != m || m == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bundle from " + b.sensor_id + " has " +
                      std::to_string(b.m()) + " shares, expected " +
                      std::to_string(m));
    }
    for (std::size_t j = 0; j < b.shares.size(); ++j) {
      const auto& share = b.shares[j];
      if (!share) {
        missing.push_back({b.sensor_id, static_cast<std::uint32_t>(j + 1)});
        continue;
      }
      if (*share >= mod) {
        throw Error(ErrorCode::kOutOfRange,
                    "share value not reduced mod " + std::to_string(mod));
      }
      total = AddMod(total, *share, mod);
    }
  }
  if (!missing.empty()) throw MissingShareError(std::move(missing));
  return static_cast<std::int64_t>(total);
}

double ReconstructAverage(std::span<const ShareBundle> bundles,
                          const FieldParams& fp, const EncodingParams& p) {
  if (bundles.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "average of zero bundles");
  }
  const double sum = static_cast<double>(ReconstructSum(bundles, fp));
  const double n = static_cast<double>(bundles.size());
  return (sum / n - static_cast<double>(p.offset())) /
         static_cast<double>(p.k);
}

EncodedValue ReconstructSecret(const ShareBundle& bundle,
                               const FieldParams& fp) {
  return ReconstructSum(std::span<const ShareBundle>(&bundle, 1), fp);
}

}  // namespace petfabric
