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

#include "core/latency.h"

#include <array>
#include <cmath>
#include <utility>

#include "core/error.h"

namespace petfabric {

namespace {

using enum LatencyDistribution;

struct Preset {
  std::string_view name;
  LatencyModel model;
};

constexpr std::array<Preset, 7> kPresets = {{
    {"default", {3.88, 0.0, kConstant}},
    {"calibrated", {2.494, 0.0, kConstant}},
    {"calibrated-jitter", {2.494, 1.2266, kTruncatedGaussian}},
    {"broker-eth", {2.26, 0.0, kConstant}},
    {"wifi-no-powersave", {4.0, 2.0, kTruncatedGaussian}},
    {"eth-wifi-target", {2.0, 1.0, kTruncatedGaussian}},
    {"eth", {0.4, 0.0, kConstant}},
}};

}  // namespace

void LatencyModel::Validate() const {
  if (!std::isfinite(per_hop_mean_ms) || per_hop_mean_ms < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "per-hop mean must be a non-negative number");
  }
  if (!std::isfinite(per_hop_jitter_std_ms) || per_hop_jitter_std_ms < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "per-hop jitter must be a non-negative number");
  }
}

double LatencyModel::Sample(Rng& rng) const {
  if (distribution == kConstant || per_hop_jitter_std_ms == 0.0) {
    return per_hop_mean_ms;
  }
  // Acceptance is at least one half because the mean is non-negative.
  for (;;) {
    const double d =
        per_hop_mean_ms + per_hop_jitter_std_ms * rng.StandardNormal();
    if (d >= 0.0) return d;
  }
}

std::optional<LatencyModel> LatencyPreset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p.model;
  }
  return std::nullopt;
}

std::vector<std::string> LatencyPresetNames() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

}  // namespace petfabric
