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

#include "core/dp.h"

#include <cmath>
#include <string>

#include "core/error.h"

namespace petfabric {

void PrivacyBudget::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must be a positive finite number, got " +
                    std::to_string(epsilon));
  }
  if (sensitivity < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "sensitivity must be >= 1, got " +
                    std::to_string(sensitivity));
  }
}

double LaplaceFromUniform(double scale, double u) {
  if (u == 0.0) return 0.0;
  const double magnitude = -scale * std::log1p(-2.0 * std::fabs(u));
  return u > 0.0 ? magnitude : -magnitude;
}

double SampleLaplace(double scale, Rng& rng) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kInvalidArgument,
                "Laplace scale must be positive, got " +
                    std::to_string(scale));
  }
  return LaplaceFromUniform(scale, rng.UniformOpen01() - 0.5);
}

EncodedValue LdpPerturb(EncodedValue x, const PrivacyBudget& budget,
                        Rng& rng) {
  budget.Validate();
  return x + std::llround(SampleLaplace(budget.scale(), rng));
}

NoisySum LdpSum(std::span<const EncodedValue> xs, const PrivacyBudget& budget,
                Rng& rng) {
  budget.Validate();
  std::int64_t total = 0;
  for (EncodedValue x : xs) total += LdpPerturb(x, budget, rng);
  return {static_cast<double>(total), xs.size(), budget};
}

NoisySum GdpAggregate(std::span<const EncodedValue> xs,
                      const PrivacyBudget& budget, Aggregator aggregator,
                      Rng& rng) {
  budget.Validate();
  if (xs.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "global aggregation needs at least one record");
  }
  std::int64_t sum = 0;
  for (EncodedValue x : xs) sum += x;
  double exact = static_cast<double>(sum);
  if (aggregator == Aggregator::kMean) {
    exact /= static_cast<double>(xs.size());
  }
  return {exact + SampleLaplace(budget.scale(), rng), xs.size(), budget};
}

std::int64_t DefaultSensitivity(const EncodingParams& p, Aggregator aggregator,
                                std::size_t n) {
  std::int64_t width = p.q < 1 ? 1 : p.q;
  if (aggregator == Aggregator::kSum || n <= 1) return width;
  const auto count = static_cast<std::int64_t>(n);
  return (width + count - 1) / count;
}

double KrrKeepProbability(double epsilon, std::int64_t q) {
  // e^eps / (e^eps + q), arranged so large epsilon does not overflow.
  return 1.0 / (1.0 + static_cast<double>(q) * std::exp(-epsilon));
}

EncodedValue KrrPerturb(EncodedValue x, double epsilon,
                        const EncodingParams& p, Rng& rng) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must be positive, got " + std::to_string(epsilon));
  }
  if (x < 0 || x > p.q) {
    throw Error(ErrorCode::kOutOfRange,
                "randomized response input " + std::to_string(x) +
                    " outside [0, " + std::to_string(p.q) + "]");
  }
  if (p.q == 0 || rng.Bernoulli(KrrKeepProbability(epsilon, p.q))) return x;
  const auto other =
      static_cast<EncodedValue>(rng.UniformBelow(static_cast<std::uint64_t>(p.q)));
  return other >= x ? other + 1 : other;
}

}  // namespace petfabric
