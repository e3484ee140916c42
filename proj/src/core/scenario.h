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

// Benchmark scenarios executed on the virtual-time broker.
//
// Topologies:
//   on-device    the sensor (or a zonal aggregator for GDP) applies the PET
//                and publishes straight to the consumer.
//   virtualized  sensors publish raw readings that pass through a pipeline of
//                virtual nodes; the last node applies the PET and publishes.
//   relay-chain  the sensor applies the PET, then `depth` relays each
//                re-publish the message before it reaches the consumer.
//
// Additive sharing publishes the m shares of a reading one after another,
// each waiting for the broker's confirmation of the previous one, unless
// parallel_shares is set.
//
// Every repetition is an independent simulation seeded with seed + rep, so
// repetitions can be sharded across workers without changing any record.

#ifndef PETFABRIC_CORE_SCENARIO_H_
#define PETFABRIC_CORE_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/codec.h"
#include "core/dp.h"
#include "core/latency.h"
#include "core/stats.h"

namespace petfabric {

enum class Topology { kOnDevice, kVirtualized, kRelayChain };
enum class PetKind { kNone, kLdp, kGdp, kAss, kKrr };

const char* TopologyName(Topology t);
const char* PetKindName(PetKind p);

struct PetSpec {
  PetKind kind = PetKind::kNone;
  double epsilon = 1.0;
  Aggregator aggregator = Aggregator::kSum;
  std::uint32_t m = 3;
  // Encoded units; defaults to DefaultSensitivity of the encoding.
  std::optional<std::int64_t> sensitivity;
  // Prime override for additive sharing; defaults to ChooseModulus.
  std::optional<std::uint64_t> modulus;
  bool parallel_shares = false;
};

struct DataGenerator {
  enum class Kind { kUniform, kConstant };
  Kind kind = Kind::kUniform;
  double lo = 50.0;
  double hi = 120.0;
  double value = 0.0;
};

struct ScenarioSpec {
  std::string name = "scenario";
  Topology topology = Topology::kOnDevice;
  std::uint32_t relay_depth = 0;
  std::uint32_t virtual_nodes = 1;
  PetSpec pet;
  std::uint32_t sensors = 1;
  DataGenerator generator;
  EncodingParams encoding = DeriveParams(50.0, 120.0, 1);
  LatencyModel latency;
  // Compute time at the node that applies the PET.
  double compute_ms = 0.0;
  // Unattributed per-run cost, booked as compute on the critical path.
  double fixed_overhead_ms = 0.0;
  double broker_service_ms = 0.0;
  std::uint64_t repetitions = 100;
  std::uint64_t seed = 0;
  // Background filler traffic (messages per second) around each measurement.
  double load_rate = 0.0;
  double load_window_ms = 100.0;
  // Drop one share per repetition; reconstruction must then fail.
  bool inject_share_loss = false;

  // Throws ConfigError naming the offending field.
  void Validate() const;
};

// Calibrated node compute time for a PET at a topology, in milliseconds.
double DefaultComputeMs(PetKind pet, Topology topology);

// Hops on the critical path implied by the topology alone.
std::uint32_t ExpectedHopCount(const ScenarioSpec& spec);

struct RunRecord {
  std::string scenario;
  std::uint64_t rep = 0;
  std::uint64_t seed = 0;
  std::uint64_t message_id = 0;
  double compute_ms = 0.0;
  std::vector<double> hop_delays;
  double end_to_end_ms = 0.0;
  std::uint32_t hop_count = 0;
  std::uint64_t background_delivered = 0;
};

struct ShareLoss {
  std::string sensor_id;
  std::uint32_t channel = 0;
};

// The (sensor, channel) whose share repetition `rep` drops when
// inject_share_loss is set.
ShareLoss ChooseShareLoss(const ScenarioSpec& spec, std::uint64_t rep);

// One simulation. Throws MissingShareError when a share never arrives.
RunRecord RunRepetition(const ScenarioSpec& spec, std::uint64_t rep);

// All repetitions, ordered by rep. With workers > 1 the repetitions are
// sharded across threads; the output is identical either way.
std::vector<RunRecord> RunScenario(const ScenarioSpec& spec,
                                   unsigned workers = 1);

struct LoadComparison {
  double rate = 0.0;
  Summary baseline;
  Summary loaded;
  TestResult ks;
  std::uint64_t background_delivered = 0;
  std::vector<RunRecord> loaded_records;
};

// Runs `base` without load and with `rate` messages per second of filler and
// compares the end-to-end distributions.
LoadComparison LoadTest(const ScenarioSpec& base, double rate,
                        unsigned workers = 1);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_SCENARIO_H_
