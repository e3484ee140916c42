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

#include "core/adversary.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <thread>

#include "core/error.h"

namespace petfabric {

namespace {

constexpr std::uint64_t kTrialBlock = 4096;
constexpr std::uint64_t kMaxHistogramBins = 65536;

std::uint64_t RunBlock(const HypothesisTest& test, std::uint64_t trials,
                       std::uint64_t seed, NoiseModel model) {
  Rng rng(seed);
  std::uint64_t hits = 0;
  std::array<EncodedValue, 2> records{test.known_prefix_sum, 0};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const bool truth_is_t = rng.Bernoulli(0.5);
    const EncodedValue truth = truth_is_t ? test.t : test.s;
    double z;
    if (model == NoiseModel::kGlobal) {
      records[1] = truth;
      z = GdpAggregate(records, test.budget, Aggregator::kSum, rng).value;
    } else {
      z = static_cast<double>(test.known_prefix_sum +
                              LdpPerturb(truth, test.budget, rng));
    }
    const Hypothesis guess = Guess(test, z);
    if ((guess == Hypothesis::kT) == truth_is_t) ++hits;
  }
  return hits;
}

}  // namespace

void HypothesisTest::Validate() const {
  budget.Validate();
  if (!(s < t)) {
    throw Error(ErrorCode::kInvalidArgument,
                "hypotheses need s < t, got s=" + std::to_string(s) +
                    " t=" + std::to_string(t));
  }
}

Hypothesis Guess(const HypothesisTest& test, double z) {
  return z > test.Threshold() ? Hypothesis::kT : Hypothesis::kS;
}

double AnalyticGuessRate(double epsilon, double gap, double sensitivity) {
  return 1.0 - 0.5 * std::exp(-epsilon * gap / (2.0 * sensitivity));
}

GuessRateResult EmpiricalGuessRate(const HypothesisTest& test,
                                   std::uint64_t trials, Rng& rng,
                                   NoiseModel model, unsigned workers) {
  test.Validate();
  GuessRateResult result;
  result.trials = trials;
  result.analytic = AnalyticGuessRate(
      test.budget.epsilon, static_cast<double>(test.t - test.s),
      static_cast<double>(test.budget.sensitivity));
  result.ci_halfwidth =
      trials == 0 ? 0.0
                  : 3.0 * std::sqrt(result.analytic * (1.0 - result.analytic) /
                                    static_cast<double>(trials));
  if (trials == 0) return result;

  const std::uint64_t master = rng.NextU64();
  const std::uint64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  auto run_range = [&](std::uint64_t first, std::uint64_t step) {
    for (std::uint64_t b = first; b < blocks; b += step) {
      const std::uint64_t n = std::min(kTrialBlock, trials - b * kTrialBlock);
      hits[b] = RunBlock(test, n, DeriveSeed(master, b), model);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, blocks));
  if (workers == 1) {
    run_range(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_range, w, workers);
  }
  for (auto h : hits) result.successes += h;
  result.empirical =
      static_cast<double>(result.successes) / static_cast<double>(trials);
  return result;
}

CoverageSet::CoverageSet(std::vector<std::uint32_t> channels)
    : channels_(std::move(channels)) {
  std::sort(channels_.begin(), channels_.end());
  channels_.erase(std::unique(channels_.begin(), channels_.end()),
                  channels_.end());
  if (!channels_.empty() && channels_.front() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "channels are 1-based");
  }
}

CoverageSet CoverageSet::All(std::uint32_t m) {
  std::vector<std::uint32_t> all(m);
  for (std::uint32_t j = 0; j < m; ++j) all[j] = j + 1;
  return CoverageSet(std::move(all));
}

bool CoverageSet::Contains(std::uint32_t channel) const {
  return std::binary_search(channels_.begin(), channels_.end(), channel);
}

bool CoverageSet::IsFull(std::uint32_t m) const {
  return channels_.size() == m && (m == 0 || channels_.back() == m);
}

ShareBundle Observe(const ShareBundle& bundle, const CoverageSet& coverage) {
  ShareBundle seen = bundle;
  for (std::size_t j = 0; j < seen.shares.size(); ++j) {
    if (!coverage.Contains(static_cast<std::uint32_t>(j + 1))) {
      seen.shares[j].reset();
    }
  }
  return seen;
}

std::optional<std::int64_t> EavesdropReconstruct(
    const CoverageSet& coverage, std::span<const ShareBundle> observed,
    const FieldParams& fp) {
  std::uint32_t m = 0;
  for (const ShareBundle& b : observed) {
    if (m != 0 && b.m() != m) {
      throw Error(ErrorCode::kInvalidArgument,
                  "observed bundles disagree on the share count");
    }
    m = static_cast<std::uint32_t>(b.m());
    for (std::size_t j = 0; j < b.shares.size(); ++j) {
      const bool covered = coverage.Contains(static_cast<std::uint32_t>(j + 1));
      if (covered != b.shares[j].has_value()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "inconsistent coverage: channel " + std::to_string(j + 1) +
                        (covered ? " is covered but unobserved"
                                 : " is observed but not covered") +
                        " for sensor " + b.sensor_id);
      }
    }
  }
  if (!coverage.channels().empty() && coverage.channels().back() > m &&
      m != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "coverage names channel " +
                    std::to_string(coverage.channels().back()) +
                    " beyond m=" + std::to_string(m));
  }
  if (m == 0 || !coverage.IsFull(m)) return std::nullopt;
  return ReconstructSum(observed, fp);
}

std::vector<std::uint64_t> PartialSumHistogram(
    const CoverageSet& coverage, std::span<const EncodedValue> secrets,
    std::uint32_t m, const FieldParams& fp, std::uint64_t trials, Rng& rng) {
  const std::uint64_t mod = fp.modulus();
  if (mod > kMaxHistogramBins) {
    throw Error(ErrorCode::kInvalidArgument,
                "uniformity histogram needs Q <= 65536, got " +
                    std::to_string(mod));
  }
  std::vector<std::uint64_t> counts(mod, 0);
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::uint64_t partial = 0;
    for (std::size_t s = 0; s < secrets.size(); ++s) {
      const ShareBundle b = Split("s" + std::to_string(s), secrets[s], m, fp, rng);
      for (std::uint32_t j = 1; j <= m; ++j) {
        if (coverage.Contains(j)) partial = AddMod(partial, *b.shares[j - 1], mod);
      }
    }
    ++counts[partial];
  }
  return counts;
}

UniformityReport CoverageUniformity(const CoverageSet& coverage,
                                    std::span<const EncodedValue> secrets,
                                    std::uint32_t m, const FieldParams& fp,
                                    std::uint64_t trials, Rng& rng) {
  UniformityReport report;
  report.trials = trials;
  if (coverage.channels().empty() || secrets.empty()) return report;
  const auto counts = PartialSumHistogram(coverage, secrets, m, fp, trials, rng);
  report.chi_square = ChiSquareUniform(counts);
  report.uniform = report.chi_square.p_value > 0.01;
  return report;
}

EavesdropOutcome SimulateEavesdropper(const CoverageSet& coverage,
                                      std::span<const EncodedValue> secrets,
                                      std::uint32_t m, const FieldParams& fp,
                                      std::uint64_t trials, Rng& rng) {
  if (!coverage.channels().empty() && coverage.channels().back() > m) {
    throw Error(ErrorCode::kInvalidArgument,
                "coverage names a channel beyond m=" + std::to_string(m));
  }
  EavesdropOutcome outcome;
  std::vector<ShareBundle> observed;
  observed.reserve(secrets.size());
  for (std::size_t i = 0; i < secrets.size(); ++i) {
    observed.push_back(
        Observe(Split("sensor-" + std::to_string(i), secrets[i], m, fp, rng),
                coverage));
  }
  outcome.exact_sum = EavesdropReconstruct(coverage, observed, fp);
  if (!outcome.exact_sum) {
    outcome.report = CoverageUniformity(coverage, secrets, m, fp, trials, rng);
  }
  return outcome;
}

}  // namespace petfabric
