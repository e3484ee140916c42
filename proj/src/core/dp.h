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

// Laplace-mechanism differential privacy over encoded integers.
//
// Local DP perturbs each encoded reading at the sensor and rounds the noise so
// the result still travels as an integer. Global DP perturbs the aggregate
// once, after collection, and keeps the noise real-valued. Neither path clamps
// its output to [0, q].

#ifndef PETFABRIC_CORE_DP_H_
#define PETFABRIC_CORE_DP_H_

#include <cstddef>
#include <cstdint>
#include <span>

#include "core/codec.h"
#include "core/random.h"

namespace petfabric {

struct PrivacyBudget {
  double epsilon = 1.0;
  // Encoded units.
  std::int64_t sensitivity = 1;

  // Throws kInvalidArgument unless epsilon > 0 (finite) and sensitivity >= 1.
  void Validate() const;

  // Laplace scale sensitivity / epsilon.
  double scale() const {
    return static_cast<double>(sensitivity) / epsilon;
  }
};

enum class Aggregator { kSum, kMean };

struct NoisySum {
  // Encoded units; for kMean this is the noisy mean.
  double value = 0.0;
  std::size_t n = 0;
  PrivacyBudget budget;
};

// Inverse-CDF transform for u in (-1/2, 1/2): -scale * sgn(u) * ln(1 - 2|u|).
double LaplaceFromUniform(double scale, double u);

// One Laplace(0, scale) draw. Throws kInvalidArgument for scale <= 0.
double SampleLaplace(double scale, Rng& rng);

// x + round(Lap(sensitivity / epsilon)).
EncodedValue LdpPerturb(EncodedValue x, const PrivacyBudget& budget, Rng& rng);

// Sum of independently LDP-perturbed records.
NoisySum LdpSum(std::span<const EncodedValue> xs, const PrivacyBudget& budget,
                Rng& rng);

// Exact aggregate plus a single Laplace draw. Throws kInvalidArgument on empty
// input.
NoisySum GdpAggregate(std::span<const EncodedValue> xs,
                      const PrivacyBudget& budget, Aggregator aggregator,
                      Rng& rng);

// Sensitivity of one record on the aggregate: q for a sum, ceil(q / n) for a
// mean over n records.
std::int64_t DefaultSensitivity(const EncodingParams& p, Aggregator aggregator,
                                std::size_t n);

// k-ary randomized response over {0..q}: keeps x with probability
// e^eps / (e^eps + q), otherwise reports one of the other q values uniformly.
// Throws kOutOfRange if x is outside [0, q].
EncodedValue KrrPerturb(EncodedValue x, double epsilon, const EncodingParams& p,
                        Rng& rng);

// Probability that KrrPerturb reports its input unchanged.
double KrrKeepProbability(double epsilon, std::int64_t q);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_DP_H_
