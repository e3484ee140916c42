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

#include "core/scenario.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <string>
#include <thread>

#include "core/ass.h"
#include "core/broker.h"
#include "core/envelope.h"
#include "core/error.h"
#include "core/random.h"

namespace petfabric {

namespace {

// Independent random streams of one repetition.
enum Stream : std::uint64_t {
  kDataStream = 1,
  kPetStream = 2,
  kLoadStream = 3,
  kLossStream = 4,
  kBrokerStream = 5,
};

constexpr const char* kConsumer = "consumer";
constexpr const char* kAggregator = "zonal-aggregator";

std::string SensorId(std::uint32_t i) { return "sensor-" + std::to_string(i); }
std::string SensorTopic(const std::string& id) {
  return "cabin/vendor-a/" + id + "/value";
}
std::string NodeId(std::uint32_t j) { return "vnode-" + std::to_string(j); }
std::string NodeTopic(std::uint32_t j) {
  return "cabin/vnode/" + NodeId(j) + "/value";
}
std::string RelayId(std::uint32_t j) { return "relay-" + std::to_string(j); }
std::string RelayTopic(std::uint32_t j) {
  return "cabin/relay/" + RelayId(j) + "/value";
}
// Share channel B_j, one signal per originating sensor.
std::string ShareTopic(std::uint32_t channel, const std::string& sensor) {
  return "cabin/ass/b" + std::to_string(channel) + "/" + sensor;
}

bool FiniteNonNegative(double v) { return std::isfinite(v) && v >= 0.0; }

std::uint64_t RepSeed(const ScenarioSpec& spec, std::uint64_t rep) {
  return spec.seed + rep;
}

// Mutable state of one simulated repetition.
class Simulation {
 public:
  Simulation(const ScenarioSpec& spec, std::uint64_t rep)
      : spec_(spec),
        rep_(rep),
        seed_(RepSeed(spec, rep)),
        data_rng_(DeriveSeed(seed_, kDataStream)),
        pet_rng_(DeriveSeed(seed_, kPetStream)),
        broker_(MakeOptions(spec, DeriveSeed(seed_, kBrokerStream))) {
    if (spec.pet.kind == PetKind::kAss) {
      field_ = spec.pet.modulus
                   ? FieldParams::Create(*spec.pet.modulus, spec.sensors,
                                         spec.encoding.q)
                   : ChooseModulus(spec.sensors, spec.encoding.q);
    }
    if (spec.pet.kind != PetKind::kNone && spec.pet.kind != PetKind::kAss) {
      budget_.epsilon = spec.pet.epsilon;
      budget_.sensitivity =
          spec.pet.sensitivity.value_or(DefaultSensitivity(
              spec.encoding, spec.pet.aggregator, spec.sensors));
    }
  }

  RunRecord Run() {
    const double t0 = spec_.load_rate > 0.0 ? spec_.load_window_ms / 2.0 : 0.0;
    std::shared_ptr<LoadStats> load;
    if (spec_.load_rate > 0.0) {
      Rng phase_rng(DeriveSeed(seed_, kLoadStream));
      const double phase = phase_rng.Uniform01() * 1000.0 / spec_.load_rate;
      load = InjectLoad(broker_, spec_.load_rate, spec_.load_window_ms / 1000.0,
                        phase);
    }

    for (std::uint32_t i = 0; i < spec_.sensors; ++i) {
      readings_.push_back(Encode(Draw(), spec_.encoding));
    }
    truth_sum_ = 0;
    for (EncodedValue v : readings_) truth_sum_ += v;

    WireConsumer();
    switch (spec_.topology) {
      case Topology::kOnDevice:
        WireOnDevice(t0);
        break;
      case Topology::kVirtualized:
        WireVirtualized(t0);
        break;
      case Topology::kRelayChain:
        WireRelayChain(t0);
        break;
    }
    if (spec_.inject_share_loss) {
      const ShareLoss loss = ChooseShareLoss(spec_, rep_);
      broker_.InjectLoss(ShareSender(loss.sensor_id),
                         ShareTopic(loss.channel, loss.sensor_id));
    }
    broker_.Run();
    Finish();

    RunRecord rec;
    rec.scenario = spec_.name;
    rec.rep = rep_;
    rec.seed = seed_;
    rec.message_id = last_.message_id;
    rec.compute_ms = last_.trace.compute_ms;
    rec.hop_delays = last_.trace.hop_delays;
    rec.hop_count = static_cast<std::uint32_t>(rec.hop_delays.size());
    rec.end_to_end_ms = last_.trace.total_ms();
    rec.background_delivered = load ? load->delivered : 0;
    return rec;
  }

 private:
  static BrokerOptions MakeOptions(const ScenarioSpec& spec,
                                   std::uint64_t seed) {
    BrokerOptions opts;
    opts.latency = spec.latency;
    opts.seed = seed;
    opts.service_ms = spec.broker_service_ms;
    opts.keep_audit_log = false;
    return opts;
  }

  double Draw() {
    const DataGenerator& g = spec_.generator;
    if (g.kind == DataGenerator::Kind::kConstant) return g.value;
    return g.lo + (g.hi - g.lo) * data_rng_.Uniform01();
  }

  double PetComputeMs() const {
    return spec_.compute_ms + spec_.fixed_overhead_ms;
  }

  bool IsAss() const { return spec_.pet.kind == PetKind::kAss; }

  std::uint64_t ExpectedDeliveries() const {
    if (IsAss()) return std::uint64_t{spec_.sensors} * spec_.pet.m;
    if (spec_.pet.kind == PetKind::kGdp) return 1;
    return spec_.sensors;
  }

  std::string ShareSender(const std::string& sensor) const {
    return spec_.topology == Topology::kVirtualized
               ? NodeId(spec_.virtual_nodes)
               : sensor;
  }

  void Register(const std::string& id, const std::string& pub,
                const std::string& sub) {
    broker_.RegisterClient(id);
    if (!pub.empty()) broker_.Allow(id, pub, Permission::kPublish);
    if (!sub.empty()) broker_.Allow(id, sub, Permission::kSubscribe);
  }

  // Final hop target: collects deliveries and remembers the last one.
  void WireConsumer() {
    std::string filter;
    if (IsAss()) {
      filter = "cabin/ass/#";
    } else if (spec_.topology == Topology::kRelayChain) {
      filter = RelayTopic(spec_.relay_depth);
    } else if (spec_.topology == Topology::kVirtualized) {
      filter = NodeTopic(spec_.virtual_nodes);
    } else if (spec_.pet.kind == PetKind::kGdp) {
      filter = SensorTopic(kAggregator);
    } else {
      filter = "cabin/vendor-a/+/value";
    }
    Register(kConsumer, "", filter);
    broker_.Subscribe(kConsumer, filter, [this](const Delivery& d) {
      const Envelope env = DecodePayload(d.payload);
      if (IsAss()) {
        auto [it, fresh] = bundles_.try_emplace(env.sensor_id);
        if (fresh) {
          it->second.sensor_id = env.sensor_id;
          it->second.modulus = field_->modulus();
          it->second.shares.assign(spec_.pet.m, std::nullopt);
        }
        it->second.shares.at(*env.share_index - 1) =
            static_cast<std::uint64_t>(env.value);
      }
      ++received_;
      if (received_ == 1 || d.delivered_ms >= last_.delivered_ms) last_ = d;
    });
  }

  // Envelope for a PET-protected (or raw) reading.
  Envelope Protect(const std::string& sensor, EncodedValue x,
                   const std::string& topic) {
    Envelope env;
    env.topic = topic;
    env.sensor_id = sensor;
    env.sequence = rep_;
    env.value = x;
    switch (spec_.pet.kind) {
      case PetKind::kNone:
      case PetKind::kAss:
        env.scheme = Scheme::kRaw;
        break;
      case PetKind::kLdp:
        env.scheme = Scheme::kLdp;
        env.value = LdpPerturb(x, budget_, pet_rng_);
        env.epsilon = budget_.epsilon;
        break;
      case PetKind::kKrr:
        env.scheme = Scheme::kKrr;
        env.value = KrrPerturb(x, spec_.pet.epsilon, spec_.encoding, pet_rng_);
        env.epsilon = spec_.pet.epsilon;
        break;
      case PetKind::kGdp:
        // Aggregates are released by PublishAggregate.
        env.scheme = Scheme::kRaw;
        break;
    }
    return env;
  }

  static std::uint64_t OriginUs(const Trace& t) {
    return static_cast<std::uint64_t>(std::llround(t.start_ms * 1000.0));
  }

  void PublishAggregate(const std::string& client, const std::string& topic,
                        Trace trace) {
    const NoisySum noisy =
        GdpAggregate(readings_, budget_, spec_.pet.aggregator, pet_rng_);
    Envelope env;
    env.topic = topic;
    env.sensor_id = client;
    env.sequence = rep_;
    env.scheme = Scheme::kGdp;
    env.value = std::llround(noisy.value);
    env.epsilon = budget_.epsilon;
    env.origin_us = OriginUs(trace);
    PublishOptions opts;
    opts.at_ms = trace.start_ms + trace.total_ms();
    opts.trace = std::move(trace);
    broker_.PublishEnvelope(client, env, std::move(opts));
  }

  // Splits `x` and publishes its shares from `client`, sequentially (each
  // share after the previous one's confirmation) or all at once.
  void PublishShares(const std::string& client, const std::string& sensor,
                     EncodedValue x, Trace trace) {
    auto bundle = std::make_shared<ShareBundle>(
        Split(sensor, x, spec_.pet.m, *field_, pet_rng_));
    const double at = trace.start_ms + trace.total_ms();
    if (spec_.pet.parallel_shares) {
      for (std::uint32_t j = 1; j <= spec_.pet.m; ++j) {
        PublishShare(client, bundle, j, at, trace, false);
      }
    } else {
      PublishShare(client, bundle, 1, at, std::move(trace), true);
    }
  }

  void PublishShare(const std::string& client,
                    std::shared_ptr<ShareBundle> bundle, std::uint32_t j,
                    double at, Trace trace, bool chain) {
    Envelope env;
    env.topic = ShareTopic(j, bundle->sensor_id);
    env.sensor_id = bundle->sensor_id;
    env.sequence = rep_;
    env.scheme = Scheme::kAssShare;
    env.value = static_cast<std::int64_t>(*bundle->shares[j - 1]);
    env.share_index = j;
    env.origin_us = OriginUs(trace);
    PublishOptions opts;
    opts.at_ms = at;
    opts.trace = std::move(trace);
    if (chain && j < spec_.pet.m) {
      opts.on_confirm = [this, client, bundle, j](double confirmed,
                                                  const Trace& t) {
        PublishShare(client, bundle, j + 1, confirmed, t, true);
      };
    }
    broker_.PublishEnvelope(client, env, std::move(opts));
  }

  // The sensor (or zonal aggregator) applies the PET and publishes.
  void WireOnDevice(double t0) {
    const double c = PetComputeMs();
    if (spec_.pet.kind == PetKind::kGdp) {
      Register(kAggregator, SensorTopic(kAggregator), "");
      broker_.ScheduleAt(t0, [this, t0, c] {
        PublishAggregate(kAggregator, SensorTopic(kAggregator),
                         Trace{t0, c, {}});
      });
      return;
    }
    for (std::uint32_t i = 0; i < spec_.sensors; ++i) {
      const std::string id = SensorId(i);
      Register(id, IsAss() ? "cabin/ass/+/" + id : SensorTopic(id), "");
      broker_.ScheduleAt(t0, [this, id, i, t0, c] {
        PublishSource(id, i, Trace{t0, c, {}});
      });
    }
  }

  // Per-record PET at the source, published on the sensor's topic.
  void PublishSource(const std::string& id, std::uint32_t i, Trace trace) {
    if (IsAss()) {
      PublishShares(id, id, readings_[i], std::move(trace));
      return;
    }
    Envelope env = Protect(id, readings_[i], SensorTopic(id));
    env.origin_us = OriginUs(trace);
    PublishOptions opts;
    opts.at_ms = trace.start_ms + trace.total_ms();
    opts.trace = std::move(trace);
    broker_.PublishEnvelope(id, env, std::move(opts));
  }

  // Sensors publish raw readings; virtual nodes 1..v-1 forward them and node
  // v applies the PET.
  void WireVirtualized(double t0) {
    const std::uint32_t v = spec_.virtual_nodes;
    for (std::uint32_t j = 1; j <= v; ++j) {
      const std::string in =
          j == 1 ? std::string("cabin/vendor-a/+/value") : NodeTopic(j - 1);
      const std::string out =
          j == v && IsAss() ? std::string("cabin/ass/#") : NodeTopic(j);
      Register(NodeId(j), out, in);
      if (j < v) {
        broker_.Subscribe(NodeId(j), in, [this, j](const Delivery& d) {
          Forward(NodeId(j), NodeTopic(j), d);
        });
      } else {
        broker_.Subscribe(NodeId(j), in, [this](const Delivery& d) {
          ComputeAtNode(d);
        });
      }
    }
    for (std::uint32_t i = 0; i < spec_.sensors; ++i) {
      const std::string id = SensorId(i);
      Register(id, SensorTopic(id), "");
      broker_.ScheduleAt(t0, [this, id, i, t0] {
        Envelope env;
        env.topic = SensorTopic(id);
        env.sensor_id = id;
        env.sequence = rep_;
        env.value = readings_[i];
        env.origin_us = static_cast<std::uint64_t>(std::llround(t0 * 1000.0));
        PublishOptions opts;
        opts.trace = Trace{t0, 0.0, {}};
        broker_.PublishEnvelope(id, env, std::move(opts));
      });
    }
  }

  void ComputeAtNode(const Delivery& d) {
    const std::string node = NodeId(spec_.virtual_nodes);
    const std::string out = NodeTopic(spec_.virtual_nodes);
    Trace trace = d.trace;
    trace.compute_ms += PetComputeMs();
    const Envelope raw = DecodePayload(d.payload);
    if (spec_.pet.kind == PetKind::kGdp) {
      // The aggregate needs every reading; release after the last one.
      if (++node_inputs_ < spec_.sensors) return;
      PublishAggregate(node, out, std::move(trace));
      return;
    }
    if (IsAss()) {
      PublishShares(node, raw.sensor_id, raw.value, std::move(trace));
      return;
    }
    Envelope env = Protect(raw.sensor_id, raw.value, out);
    env.origin_us = raw.origin_us;
    PublishOptions opts;
    opts.at_ms = trace.start_ms + trace.total_ms();
    opts.trace = std::move(trace);
    broker_.PublishEnvelope(node, env, std::move(opts));
  }

  // Zero-compute re-publish of the delivered payload.
  void Forward(const std::string& client, const std::string& topic,
               const Delivery& d) {
    PublishOptions opts;
    opts.trace = d.trace;
    broker_.Publish(client, topic, d.payload, std::move(opts));
  }

  void WireRelayChain(double t0) {
    for (std::uint32_t j = 1; j <= spec_.relay_depth; ++j) {
      const std::string in =
          j == 1 ? (spec_.pet.kind == PetKind::kGdp
                        ? SensorTopic(kAggregator)
                        : std::string("cabin/vendor-a/+/value"))
                 : RelayTopic(j - 1);
      Register(RelayId(j), RelayTopic(j), in);
      broker_.Subscribe(RelayId(j), in, [this, j](const Delivery& d) {
        Forward(RelayId(j), RelayTopic(j), d);
      });
    }
    WireOnDevice(t0);
  }

  void Finish() {
    if (IsAss()) {
      std::vector<ShareBundle> bundles;
      for (std::uint32_t i = 0; i < spec_.sensors; ++i) {
        const std::string id = SensorId(i);
        auto it = bundles_.find(id);
        if (it != bundles_.end()) {
          bundles.push_back(it->second);
        } else {
          bundles.push_back(ShareBundle{
              id, field_->modulus(),
              std::vector<std::optional<std::uint64_t>>(spec_.pet.m)});
        }
      }
      const std::int64_t sum = ReconstructSum(bundles, *field_);
      if (sum != truth_sum_) {
        throw Error(ErrorCode::kInternal,
                    "reconstructed sum " + std::to_string(sum) +
                        " differs from the true sum " +
                        std::to_string(truth_sum_));
      }
    }
    if (received_ != ExpectedDeliveries()) {
      throw Error(ErrorCode::kInternal,
                  "consumer received " + std::to_string(received_) + " of " +
                      std::to_string(ExpectedDeliveries()) + " messages");
    }
  }

  const ScenarioSpec& spec_;
  std::uint64_t rep_;
  std::uint64_t seed_;
  Rng data_rng_;
  Rng pet_rng_;
  Broker broker_;
  PrivacyBudget budget_;
  std::optional<FieldParams> field_;
  std::vector<EncodedValue> readings_;
  std::int64_t truth_sum_ = 0;
  std::map<std::string, ShareBundle> bundles_;
  std::uint32_t node_inputs_ = 0;
  std::uint64_t received_ = 0;
  Delivery last_;
};

}  // namespace

const char* TopologyName(Topology t) {
  switch (t) {
    case Topology::kOnDevice:
      return "on-device";
    case Topology::kVirtualized:
      return "virtualized";
    case Topology::kRelayChain:
      return "relay-chain";
  }
  return "unknown";
}

const char* PetKindName(PetKind p) {
  switch (p) {
    case PetKind::kNone:
      return "none";
    case PetKind::kLdp:
      return "ldp";
    case PetKind::kGdp:
      return "gdp";
    case PetKind::kAss:
      return "ass";
    case PetKind::kKrr:
      return "krr";
  }
  return "unknown";
}

void ScenarioSpec::Validate() const {
  if (name.empty()) throw ConfigError("name", "must not be empty");
  if (topology == Topology::kRelayChain) {
    if (relay_depth < 1) throw ConfigError("topology.depth", "must be >= 1");
    if (pet.kind == PetKind::kAss) {
      throw ConfigError("pet.type",
                        "ass is not supported on a relay chain");
    }
  }
  if (topology == Topology::kVirtualized && virtual_nodes < 1) {
    throw ConfigError("topology.virtual_nodes",
                      "virtualized topology needs at least one virtual node");
  }
  if (sensors < 1) throw ConfigError("sensors.count", "must be >= 1");

  const bool noisy = pet.kind == PetKind::kLdp || pet.kind == PetKind::kGdp ||
                     pet.kind == PetKind::kKrr;
  if (noisy && !(std::isfinite(pet.epsilon) && pet.epsilon > 0.0)) {
    throw ConfigError("pet.epsilon", "must be a positive finite number");
  }
  if (pet.sensitivity && *pet.sensitivity <= 0) {
    throw ConfigError("pet.sensitivity", "must be positive");
  }
  if (pet.kind == PetKind::kKrr && encoding.q < 1) {
    throw ConfigError("encoding", "krr needs at least two encoded values");
  }
  if (pet.kind == PetKind::kAss) {
    if (pet.m < 2) {
      throw ConfigError("pet.m", "ass needs m >= 2 channels, got " +
                                     std::to_string(pet.m));
    }
    try {
      if (pet.modulus) {
        FieldParams::Create(*pet.modulus, sensors, encoding.q);
      } else {
        ChooseModulus(sensors, encoding.q);
      }
    } catch (const Error& e) {
      throw ConfigError("pet.modulus", e.what());
    }
  }
  if (inject_share_loss && pet.kind != PetKind::kAss) {
    throw ConfigError("inject_share_loss", "only applies to pet type ass");
  }

  const DataGenerator& g = generator;
  if (g.kind == DataGenerator::Kind::kUniform) {
    if (!(std::isfinite(g.lo) && std::isfinite(g.hi) && g.lo <= g.hi)) {
      throw ConfigError("sensors.generator", "needs finite lo <= hi");
    }
    if (g.lo < encoding.x_lo || g.hi > encoding.x_hi) {
      throw ConfigError("sensors.generator",
                        "range must lie inside the encoding domain");
    }
  } else if (!(g.value >= encoding.x_lo && g.value <= encoding.x_hi)) {
    throw ConfigError("sensors.generator.value",
                      "must lie inside the encoding domain");
  }

  try {
    latency.Validate();
  } catch (const Error& e) {
    throw ConfigError("latency", e.what());
  }
  if (!FiniteNonNegative(compute_ms)) {
    throw ConfigError("compute_ms", "must be a non-negative number");
  }
  if (!FiniteNonNegative(fixed_overhead_ms)) {
    throw ConfigError("fixed_overhead_ms", "must be a non-negative number");
  }
  if (!FiniteNonNegative(broker_service_ms)) {
    throw ConfigError("broker_service_ms", "must be a non-negative number");
  }
  if (repetitions < 1) throw ConfigError("repetitions", "must be >= 1");
  if (!FiniteNonNegative(load_rate)) {
    throw ConfigError("load.rate", "must be a non-negative number");
  }
  if (!(std::isfinite(load_window_ms) && load_window_ms > 0.0)) {
    throw ConfigError("load.window_ms", "must be positive");
  }
}

double DefaultComputeMs(PetKind pet, Topology topology) {
  if (topology == Topology::kRelayChain) return 0.0;
  if (topology == Topology::kVirtualized) {
    return pet == PetKind::kAss ? 17.265 : 0.0;
  }
  switch (pet) {
    case PetKind::kNone:
      return 0.307;
    case PetKind::kLdp:
    case PetKind::kKrr:
      return 0.488;
    case PetKind::kGdp:
      return 1.147;
    case PetKind::kAss:
      return 0.591;
  }
  return 0.0;
}

std::uint32_t ExpectedHopCount(const ScenarioSpec& spec) {
  const std::uint32_t publish =
      spec.pet.kind == PetKind::kAss && !spec.pet.parallel_shares
          ? 2 * spec.pet.m
          : 2;
  switch (spec.topology) {
    case Topology::kOnDevice:
      return publish;
    case Topology::kVirtualized:
      return 2 * spec.virtual_nodes + publish;
    case Topology::kRelayChain:
      return 2 + 2 * spec.relay_depth;
  }
  return 0;
}

ShareLoss ChooseShareLoss(const ScenarioSpec& spec, std::uint64_t rep) {
  Rng rng(DeriveSeed(RepSeed(spec, rep), kLossStream));
  ShareLoss loss;
  loss.sensor_id = SensorId(static_cast<std::uint32_t>(
      rng.UniformBelow(std::max<std::uint32_t>(spec.sensors, 1))));
  loss.channel = 1 + static_cast<std::uint32_t>(
                         rng.UniformBelow(std::max<std::uint32_t>(spec.pet.m, 1)));
  return loss;
}

RunRecord RunRepetition(const ScenarioSpec& spec, std::uint64_t rep) {
  spec.Validate();
  Simulation sim(spec, rep);
  return sim.Run();
}

std::vector<RunRecord> RunScenario(const ScenarioSpec& spec, unsigned workers) {
  spec.Validate();
  const std::uint64_t n = spec.repetitions;
  std::vector<RunRecord> records(n);
  std::vector<std::exception_ptr> errors(n);
  auto shard = [&](std::uint64_t first, std::uint64_t step) {
    for (std::uint64_t r = first; r < n; r += step) {
      try {
        Simulation sim(spec, r);
        records[r] = sim.Run();
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  workers = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, n)));
  if (workers == 1) {
    shard(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(shard, w, workers);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

LoadComparison LoadTest(const ScenarioSpec& base, double rate,
                        unsigned workers) {
  ScenarioSpec quiet = base;
  quiet.load_rate = 0.0;
  ScenarioSpec busy = base;
  busy.load_rate = rate;

  const auto a = RunScenario(quiet, workers);
  auto b = RunScenario(busy, workers);
  std::vector<double> xa;
  std::vector<double> xb;
  LoadComparison out;
  out.rate = rate;
  for (const auto& r : a) xa.push_back(r.end_to_end_ms);
  for (const auto& r : b) {
    xb.push_back(r.end_to_end_ms);
    out.background_delivered += r.background_delivered;
  }
  out.baseline = Summarize(xa);
  out.loaded = Summarize(xb);
  out.ks = KolmogorovSmirnovTwoSample(xa, xb);
  out.loaded_records = std::move(b);
  return out;
}

}  // namespace petfabric
