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

#ifndef PETFABRIC_CORE_RANDOM_H_
#define PETFABRIC_CORE_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace petfabric {

// Seeded random source injected into every mechanism.
//
// Wraps std::mt19937_64, whose output sequence is fixed by the standard. The
// <random> distributions are implementation-defined, so all conversions to
// doubles, bounded integers and normals are done here to keep CSV outputs
// byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform01();

  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double UniformOpen01();

  // Uniform integer in [0, n) by rejection sampling (no modulo bias).
  // n must be positive.
  std::uint64_t UniformBelow(std::uint64_t n);

  bool Bernoulli(double p) { return Uniform01() < p; }

  // Box-Muller; one normal per call, no cached second value.
  double StandardNormal();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

// Seed for an independent stream `stream` under `master`. Streams derived this
// way are what makes parallel runs independent of the worker count.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream);

// FNV-1a over the bytes of `label`; used to key per-client streams.
std::uint64_t HashLabel(std::string_view label);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_RANDOM_H_
