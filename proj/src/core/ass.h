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

// (m, m) additive secret sharing over Z_Q.
//
// A sensor splits its encoded reading into m shares: m-1 uniform draws from
// Z_Q and a final share that makes the total congruent to the secret. Share j
// is published on channel j. A server holding every share of every sensor sums
// them mod Q; because Q > n_max * q the modular sum is the exact integer sum.
// Any m-1 shares of one sensor are jointly uniform and carry no information.

#ifndef PETFABRIC_CORE_ASS_H_
#define PETFABRIC_CORE_ASS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/codec.h"
#include "core/random.h"

namespace petfabric {

// Largest n_max * q accepted when choosing a modulus.
inline constexpr std::uint64_t kFieldBound = std::uint64_t{1} << 62;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t NextPrimeAbove(std::uint64_t n);

class FieldParams {
 public:
  // Verifies that `modulus` is prime and exceeds n_max * q. Used when a config
  // pins its own modulus.
  static FieldParams Create(std::uint64_t modulus, std::uint64_t n_max,
                            std::int64_t q);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t n_max() const { return n_max_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const FieldParams&, const FieldParams&) = default;

 private:
  FieldParams(std::uint64_t modulus, std::uint64_t n_max, std::int64_t q)
      : modulus_(modulus), n_max_(n_max), q_(q) {}

  std::uint64_t modulus_;
  std::uint64_t n_max_;
  std::int64_t q_;
};

// Smallest prime Q > n_max * q. Throws kInvalidArgument for zero arguments and
// kOverflow when n_max * q exceeds kFieldBound.
FieldParams ChooseModulus(std::uint64_t n_max, std::int64_t q);

// Shares of one sensor's reading. An empty optional marks a share that never
// arrived; Split always fills every slot.
struct ShareBundle {
  std::string sensor_id;
  std::uint64_t modulus = 0;
  std::vector<std::optional<std::uint64_t>> shares;

  std::size_t m() const { return shares.size(); }
};

// Throws kOutOfRange if secret is outside [0, q], kInvalidArgument if m < 1.
ShareBundle Split(std::string sensor_id, EncodedValue secret, std::uint32_t m,
                  const FieldParams& fp, Rng& rng);

// Exact sum of all secrets behind `bundles`. Throws MissingShareError listing
// every absent (sensor, channel), kModulusMismatch if a bundle was split under
// another modulus, kInvalidArgument for inconsistent m or too many bundles.
std::int64_t ReconstructSum(std::span<const ShareBundle> bundles,
                            const FieldParams& fp);

// (S / n - |q_min|) / k for the exact encoded sum S.
double ReconstructAverage(std::span<const ShareBundle> bundles,
                          const FieldParams& fp, const EncodingParams& p);

// Recovers one sensor's secret. Diagnostic only: the server-side protocol
// reconstructs aggregates, never individual readings.
EncodedValue ReconstructSecret(const ShareBundle& bundle,
                               const FieldParams& fp);

std::uint64_t AddMod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_ASS_H_
