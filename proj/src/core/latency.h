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

#ifndef PETFABRIC_CORE_LATENCY_H_
#define PETFABRIC_CORE_LATENCY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/random.h"

namespace petfabric {

enum class LatencyDistribution { kConstant, kTruncatedGaussian };

// Delay of one message leg to or from the broker.
struct LatencyModel {
  double per_hop_mean_ms = 3.88;
  double per_hop_jitter_std_ms = 0.0;
  LatencyDistribution distribution = LatencyDistribution::kConstant;

  // Throws kInvalidArgument for negative or non-finite parameters.
  void Validate() const;

  // Never negative. Gaussian draws below zero are redrawn; the constant model
  // consumes no randomness.
  double Sample(Rng& rng) const;
};

// Named profiles:
//   default            3.88 ms constant (46.55 ms over a 12-hop relay chain)
//   calibrated         2.494 ms constant (measured no-PET baseline, 2 hops)
//   calibrated-jitter  2.494 ms, sigma 1.2266 ms (baseline spread over 2 hops)
//   broker-eth         2.26 ms constant (half of a 4.52 ms broker round trip)
//   wifi-no-powersave  4.0 ms, sigma 2.0 ms (half of an 8 ms ping)
//   eth-wifi-target    2.0 ms, sigma 1.0 ms (half of a 4 ms ping)
//   eth                0.4 ms constant (sub-millisecond wired ping)
std::optional<LatencyModel> LatencyPreset(std::string_view name);

std::vector<std::string> LatencyPresetNames();

}  // namespace petfabric

#endif  // PETFABRIC_CORE_LATENCY_H_
