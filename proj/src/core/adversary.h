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

// Attacks against the deployed mechanisms.
//
// The distinguishing attack knows every record but the last, knows the last
// is either s or t (s < t), and sees the Laplace-noised sum z. The optimal
// test answers t iff z exceeds the midpoint threshold, and succeeds with
// probability 1 - exp(-eps * (t - s) / (2 * sensitivity)) / 2.
//
// The eavesdropper sees the shares published on a subset of the channels. With
// every channel it recovers the aggregate; with any proper subset the observed
// shares are uniform over Z_Q whatever the secrets are.

#ifndef PETFABRIC_CORE_ADVERSARY_H_
#define PETFABRIC_CORE_ADVERSARY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/ass.h"
#include "core/dp.h"
#include "core/random.h"
#include "core/stats.h"

namespace petfabric {

enum class Hypothesis { kS, kT };

// Where the Laplace noise is applied in the simulated pipeline.
enum class NoiseModel {
  // One draw on the released sum.
  kGlobal,
  // The target perturbs its own record; the adversary reads that report.
  kLocal,
};

struct HypothesisTest {
  std::int64_t known_prefix_sum = 0;
  std::int64_t s = 0;
  std::int64_t t = 1;
  PrivacyBudget budget;

  // Throws kInvalidArgument unless s < t and the budget is valid.
  void Validate() const;

  double Threshold() const {
    return static_cast<double>(known_prefix_sum) +
           (static_cast<double>(s) + static_cast<double>(t)) / 2.0;
  }
};

// H_t iff z > threshold; ties go to H_s.
Hypothesis Guess(const HypothesisTest& test, double z);

double AnalyticGuessRate(double epsilon, double gap, double sensitivity);

struct GuessRateResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double empirical = 0.0;
  double analytic = 0.0;
  // 3 * sqrt(p (1 - p) / trials) at the analytic p.
  double ci_halfwidth = 0.0;
};

// Monte Carlo of the full pipeline: truth drawn uniformly from {s, t}, noisy
// release through the dp mechanisms, then Guess. Trials run in fixed blocks
// with seeds derived from one draw of `rng`, so the result does not depend on
// `workers`.
GuessRateResult EmpiricalGuessRate(const HypothesisTest& test,
                                   std::uint64_t trials, Rng& rng,
                                   NoiseModel model = NoiseModel::kGlobal,
                                   unsigned workers = 1);

// 1-based channel indices the eavesdropper can observe.
class CoverageSet {
 public:
  CoverageSet() = default;
  explicit CoverageSet(std::vector<std::uint32_t> channels);

  static CoverageSet All(std::uint32_t m);

  bool Contains(std::uint32_t channel) const;
  bool IsFull(std::uint32_t m) const;
  const std::vector<std::uint32_t>& channels() const { return channels_; }

 private:
  std::vector<std::uint32_t> channels_;
};

// `bundle` as seen through `coverage`: unobserved channels become empty.
ShareBundle Observe(const ShareBundle& bundle, const CoverageSet& coverage);

// Exact sum when the coverage spans every channel, nullopt otherwise. Throws
// kInvalidArgument when a bundle holds a share outside the coverage, lacks one
// inside it, or the coverage names a channel beyond m.
std::optional<std::int64_t> EavesdropReconstruct(
    const CoverageSet& coverage, std::span<const ShareBundle> observed,
    const FieldParams& fp);

// Histogram over Z_Q of the observed partial sum (all covered shares of all
// sensors, mod Q) across `trials` fresh sharings of `secrets`.
std::vector<std::uint64_t> PartialSumHistogram(
    const CoverageSet& coverage, std::span<const EncodedValue> secrets,
    std::uint32_t m, const FieldParams& fp, std::uint64_t trials, Rng& rng);

struct UniformityReport {
  std::uint64_t trials = 0;
  TestResult chi_square;
  bool uniform = true;  // p > 0.01
};

// Chi-square of PartialSumHistogram against uniform. Needs Q <= 65536. Empty
// coverage observes nothing and reports uniform with no statistic.
UniformityReport CoverageUniformity(const CoverageSet& coverage,
                                    std::span<const EncodedValue> secrets,
                                    std::uint32_t m, const FieldParams& fp,
                                    std::uint64_t trials, Rng& rng);

struct EavesdropOutcome {
  std::optional<std::int64_t> exact_sum;
  std::optional<UniformityReport> report;
};

// Shares `secrets`, filters them through `coverage`, and either reconstructs
// (full coverage) or measures the uniformity of what leaked.
EavesdropOutcome SimulateEavesdropper(const CoverageSet& coverage,
                                      std::span<const EncodedValue> secrets,
                                      std::uint32_t m, const FieldParams& fp,
                                      std::uint64_t trials, Rng& rng);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_ADVERSARY_H_
