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

#include "core/experiments.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "core/error.h"
#include "core/random.h"
#include "core/stats.h"

namespace petfabric {

namespace {

constexpr std::uint64_t kDatasetStream = 0;
constexpr std::uint64_t kEpsilonStreamBase = 1000;

void ValidateGrid(const std::vector<double>& grid, const char* field) {
  if (grid.empty()) throw ConfigError(field, "must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(std::isfinite(grid[i]) && grid[i] > 0.0)) {
      throw ConfigError(std::string(field) + "[" + std::to_string(i) + "]",
                        "must be a positive finite number");
    }
  }
}

EncodingParams EncodingOrConfigError(double x_lo, double x_hi,
                                     std::int64_t k) {
  try {
    return DeriveParams(x_lo, x_hi, k);
  } catch (const Error& e) {
    throw ConfigError("encoding", e.what());
  }
}

// Runs fn(i) for every grid index, striding across `workers` threads.
template <typename Fn>
void ForEachPoint(std::size_t points, unsigned workers, Fn fn) {
  workers = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(workers, points)));
  auto stride = [&](std::size_t first) {
    for (std::size_t i = first; i < points; i += workers) fn(i);
  };
  if (workers == 1) {
    stride(0);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(stride, w);
}

}  // namespace

const char* DpModelName(DpModel model) {
  return model == DpModel::kLdp ? "ldp" : "gdp";
}

double DecodeSum(double encoded_sum, std::size_t n, const EncodingParams& p) {
  return (encoded_sum -
          static_cast<double>(n) * static_cast<double>(p.offset())) /
         static_cast<double>(p.k);
}

void WeightSumSpec::Validate() const {
  if (n < 1) throw ConfigError("n", "must be >= 1");
  const EncodingParams p = EncodingOrConfigError(x_lo, x_hi, k);
  ValidateGrid(eps_grid, "eps_grid");
  if (reps < 1) throw ConfigError("reps", "must be >= 1");
  if (sensitivity && *sensitivity <= 0) {
    throw ConfigError("sensitivity", "must be positive");
  }
  if (!sensitivity && p.q == 0) {
    throw ConfigError("encoding", "zero-width domain needs an explicit sensitivity");
  }
}

std::vector<double> WeightDataset(const WeightSumSpec& spec) {
  Rng rng(DeriveSeed(spec.seed, kDatasetStream));
  std::vector<double> xs(spec.n);
  for (double& x : xs) x = spec.x_lo + (spec.x_hi - spec.x_lo) * rng.Uniform01();
  return xs;
}

UtilityReport WeightSumExperiment(const WeightSumSpec& spec,
                                  unsigned workers) {
  spec.Validate();
  UtilityReport report;
  report.model = spec.model;
  report.encoding = DeriveParams(spec.x_lo, spec.x_hi, spec.k);
  report.sensitivity = spec.sensitivity.value_or(report.encoding.q);
  report.dataset = WeightDataset(spec);

  std::vector<EncodedValue> encoded;
  encoded.reserve(report.dataset.size());
  for (double x : report.dataset) {
    report.true_sum += x;
    encoded.push_back(Encode(x, report.encoding));
    report.encoded_sum += encoded.back();
  }

  const PrivacyBudget base{1.0, report.sensitivity};
  report.rows.resize(spec.eps_grid.size());
  ForEachPoint(spec.eps_grid.size(), workers, [&](std::size_t i) {
    PrivacyBudget budget = base;
    budget.epsilon = spec.eps_grid[i];
    Rng rng(DeriveSeed(spec.seed, kEpsilonStreamBase + i));
    std::vector<double> signed_err(spec.reps);
    std::vector<double> abs_err(spec.reps);
    for (std::uint64_t r = 0; r < spec.reps; ++r) {
      const NoisySum noisy =
          spec.model == DpModel::kLdp
              ? LdpSum(encoded, budget, rng)
              : GdpAggregate(encoded, budget, Aggregator::kSum, rng);
      const double err =
          DecodeSum(noisy.value, encoded.size(), report.encoding) -
          report.true_sum;
      signed_err[r] = err;
      abs_err[r] = std::fabs(err);
    }
    const Summary abs_summary = Summarize(abs_err);
    UtilityRow& row = report.rows[i];
    row.epsilon = budget.epsilon;
    row.mean_abs_err = abs_summary.mean;
    row.median_abs_err = abs_summary.median;
    row.std_err = Summarize(signed_err).stddev;
    row.reps = spec.reps;
  });
  return report;
}

std::vector<double> BrewProfile(std::size_t samples) {
  std::vector<double> out(samples);
  if (samples == 0) return out;
  const double ramp_end = 0.25;
  const double hold_end = 0.75;
  for (std::size_t i = 0; i < samples; ++i) {
    const double u =
        samples == 1 ? 0.0
                     : static_cast<double>(i) / static_cast<double>(samples - 1);
    double temp;
    if (u < ramp_end) {
      temp = 20.0 + (93.0 - 20.0) * (u / ramp_end);
    } else if (u < hold_end) {
      temp = 93.0;
    } else {
      // Newtonian cooling towards 60 C.
      temp = 60.0 + (93.0 - 60.0) * std::exp(-6.0 * (u - hold_end));
    }
    out[i] = temp;
  }
  return out;
}

void ProfileSpec::Validate() const {
  if (profile.size() < 2) {
    throw ConfigError("profile", "needs at least two samples");
  }
  const EncodingParams p = EncodingOrConfigError(x_lo, x_hi, k);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (!(profile[i] >= p.x_lo && profile[i] <= p.x_hi)) {
      throw ConfigError("profile[" + std::to_string(i) + "]",
                        "outside the encoding domain");
    }
  }
  ValidateGrid(eps_grid, "eps_grid");
  if (reps < 1) throw ConfigError("reps", "must be >= 1");
  if (sensitivity && *sensitivity <= 0) {
    throw ConfigError("sensitivity", "must be positive");
  }
  if (!sensitivity && p.q == 0) {
    throw ConfigError("encoding", "zero-width domain needs an explicit sensitivity");
  }
}

ProfileReport ProfileObfuscationExperiment(const ProfileSpec& spec,
                                           unsigned workers) {
  spec.Validate();
  ProfileReport report;
  report.encoding = DeriveParams(spec.x_lo, spec.x_hi, spec.k);
  report.sensitivity = spec.sensitivity.value_or(report.encoding.q);
  report.profile = spec.profile;

  std::vector<EncodedValue> encoded;
  for (double x : spec.profile) encoded.push_back(Encode(x, report.encoding));

  report.rows.resize(spec.eps_grid.size());
  ForEachPoint(spec.eps_grid.size(), workers, [&](std::size_t i) {
    const PrivacyBudget budget{spec.eps_grid[i], report.sensitivity};
    Rng rng(DeriveSeed(spec.seed, kEpsilonStreamBase + i));
    double sq = 0.0;
    for (std::uint64_t r = 0; r < spec.reps; ++r) {
      for (std::size_t j = 0; j < encoded.size(); ++j) {
        const double noisy =
            Decode(LdpPerturb(encoded[j], budget, rng), report.encoding);
        const double d = noisy - spec.profile[j];
        sq += d * d;
      }
    }
    const double count =
        static_cast<double>(spec.reps) * static_cast<double>(encoded.size());
    report.rows[i] = {budget.epsilon, std::sqrt(sq / count), spec.reps};
  });
  return report;
}

}  // namespace petfabric
