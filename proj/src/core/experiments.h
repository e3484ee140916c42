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

// Privacy/utility experiments.
//
// Weight sum: one seeded ground-truth dataset of passenger weights, released
// as a noisy sum at each epsilon of a grid. Errors are measured in raw units
// against the exact raw sum, so they include the encoding's quantization.
//
// Profile obfuscation: a temperature time series perturbed sample by sample
// with LDP; the report is the RMSE between the decoded noisy series and the
// true one.

#ifndef PETFABRIC_CORE_EXPERIMENTS_H_
#define PETFABRIC_CORE_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "core/codec.h"
#include "core/dp.h"

namespace petfabric {

enum class DpModel { kLdp, kGdp };

const char* DpModelName(DpModel model);

// Raw-unit value of an encoded sum over n records.
double DecodeSum(double encoded_sum, std::size_t n, const EncodingParams& p);

struct WeightSumSpec {
  std::uint32_t n = 500;
  double x_lo = 50.0;
  double x_hi = 120.0;
  std::int64_t k = 1;
  DpModel model = DpModel::kLdp;
  std::vector<double> eps_grid = {0.05, 0.1, 0.3, 0.5, 1.0};
  std::uint64_t reps = 1000;
  std::uint64_t seed = 0;
  // Encoded units; defaults to q.
  std::optional<std::int64_t> sensitivity;

  // Throws ConfigError naming the offending field.
  void Validate() const;
};

struct UtilityRow {
  double epsilon = 0.0;
  double mean_abs_err = 0.0;
  double median_abs_err = 0.0;
  // Sample standard deviation of the signed error.
  double std_err = 0.0;
  std::uint64_t reps = 0;
};

struct UtilityReport {
  DpModel model = DpModel::kLdp;
  EncodingParams encoding;
  std::int64_t sensitivity = 0;
  std::vector<double> dataset;
  double true_sum = 0.0;
  std::int64_t encoded_sum = 0;
  std::vector<UtilityRow> rows;
};

// Ground truth: n draws uniform on [x_lo, x_hi) from the seed's data stream.
std::vector<double> WeightDataset(const WeightSumSpec& spec);

// Each epsilon point draws from its own stream, so `workers` only changes
// wall time.
UtilityReport WeightSumExperiment(const WeightSumSpec& spec,
                                  unsigned workers = 1);

// Synthetic brewing cycle: ramp 20 -> 93 C over the first quarter, hold for
// the next half, then decay towards 60 C.
std::vector<double> BrewProfile(std::size_t samples = 300);

struct ProfileSpec {
  std::vector<double> profile = BrewProfile();
  double x_lo = 0.0;
  double x_hi = 100.0;
  std::int64_t k = 10;
  std::vector<double> eps_grid = {0.01, 0.1, 1.0, 10.0};
  std::uint64_t reps = 100;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> sensitivity;

  void Validate() const;
};

struct ProfileRow {
  double epsilon = 0.0;
  // Pooled over every sample of every repetition.
  double rmse = 0.0;
  std::uint64_t reps = 0;
};

struct ProfileReport {
  EncodingParams encoding;
  std::int64_t sensitivity = 0;
  std::vector<double> profile;
  std::vector<ProfileRow> rows;
};

ProfileReport ProfileObfuscationExperiment(const ProfileSpec& spec,
                                           unsigned workers = 1);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_EXPERIMENTS_H_
