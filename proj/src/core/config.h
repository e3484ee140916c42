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

// JSON job configs. Every config carries a top-level "kind"; unknown keys
// anywhere are rejected with the dotted path of the offending field.

#ifndef PETFABRIC_CORE_CONFIG_H_
#define PETFABRIC_CORE_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/adversary.h"
#include "core/experiments.h"
#include "core/scenario.h"

namespace petfabric {

enum class JobKind {
  kScenario,
  kWeightSum,
  kProfile,
  kAdversary,
  kAssDemo,
  kBenchSuite,
};

const char* JobKindName(JobKind kind);

struct AdversarySpec {
  std::vector<double> eps_grid = {0.01, 0.1, 0.3, 0.5, 1.0, 2.0, 5.0};
  std::vector<double> gap_ratios = {0.1, 0.5, 1.0};
  std::uint64_t trials = 100000;
  std::int64_t known_prefix_sum = 0;
  EncodingParams encoding = DeriveParams(50.0, 120.0, 1);
  // Encoded units; defaults to q.
  std::optional<std::int64_t> sensitivity;
  NoiseModel noise_model = NoiseModel::kGlobal;

  // Partial-coverage eavesdropper; skipped when m == 0.
  std::uint32_t eavesdrop_m = 3;
  std::uint64_t eavesdrop_modulus = 101;
  std::vector<EncodedValue> eavesdrop_secrets = {17, 42};
  std::uint64_t eavesdrop_trials = 100000;
  // Empty: every subset of size m - 1 plus the full set.
  std::vector<std::vector<std::uint32_t>> coverages;

  std::uint64_t seed = 0;

  void Validate() const;
};

struct AssDemoSpec {
  std::uint32_t n = 500;
  double x_lo = 50.0;
  double x_hi = 120.0;
  std::vector<std::int64_t> k_values = {1, 100};
  std::uint32_t m = 3;
  std::uint64_t instances = 1000;
  std::optional<std::uint64_t> modulus;
  std::uint64_t seed = 0;

  void Validate() const;
};

struct LoadTestSpec {
  std::string scenario;
  std::vector<double> rates = {0.0, 400.0, 4000.0};
};

struct BenchSuiteSpec {
  std::vector<ScenarioSpec> scenarios;
  std::optional<LoadTestSpec> load_test;
  std::uint64_t seed = 0;

  void Validate() const;
};

struct JobConfig {
  JobKind kind = JobKind::kScenario;
  std::uint64_t seed = 0;
  ScenarioSpec scenario;
  WeightSumSpec weight_sum;
  ProfileSpec profile;
  AdversarySpec adversary;
  AssDemoSpec ass_demo;
  BenchSuiteSpec bench;
};

// Parses and validates. `seed_override`, when set, replaces the config's own
// "seed". Throws ConfigError.
JobConfig ParseConfig(std::string_view json_text,
                      std::optional<std::uint64_t> seed_override = {});

}  // namespace petfabric

#endif  // PETFABRIC_CORE_CONFIG_H_
