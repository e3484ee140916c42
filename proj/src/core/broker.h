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

// In-process publish/subscribe broker over a discrete-event clock.
//
// Every message leg to or from the broker is one hop whose delay comes from
// the LatencyModel. A publish costs one hop to reach the broker, waits for the
// broker's single processing slot (service time, FIFO), and then fans out one
// delivery hop per matching subscriber. Hop delays are recorded on the
// message's Trace, so for any delivery
//
//   delivered_ms - trace.start_ms == trace.compute_ms + sum(trace.hop_delays)
//
// as long as whoever extends a trace schedules its next step immediately.
//
// Each client has its own uplink and downlink; a leg never overtakes an
// earlier leg on the same link, which gives per-publisher FIFO delivery. Link
// delays are drawn from per-client random streams, so background traffic on
// other clients never shifts the draws seen by a measured flow.

#ifndef PETFABRIC_CORE_BROKER_H_
#define PETFABRIC_CORE_BROKER_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <queue>
#include <string>
#include <vector>

#include "core/envelope.h"
#include "core/latency.h"
#include "core/random.h"
#include "core/topic.h"

namespace petfabric {

class EventLoop {
 public:
  double now() const { return now_; }

  // `at` earlier than now() is treated as now().
  void Schedule(double at, std::function<void()> fn);

  // Runs the earliest event; false when idle.
  bool Step();

  void Run();

  std::size_t pending() const { return queue_.size(); }

 private:
  struct Event {
    double at;
    std::uint64_t seq;
    std::function<void()> fn;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      return a.at != b.at ? a.at > b.at : a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  double now_ = 0.0;
  std::uint64_t next_seq_ = 0;
};

// Latency path of one logical message from its origin.
struct Trace {
  double start_ms = 0.0;
  double compute_ms = 0.0;
  std::vector<double> hop_delays;

  double total_ms() const;
};

struct Delivery {
  std::uint64_t message_id = 0;
  std::string topic;
  std::string publisher;
  std::vector<std::uint8_t> payload;
  Trace trace;
  double delivered_ms = 0.0;
};

struct AuditRecord {
  double time_ms = 0.0;
  std::string event;
  std::string client;
  std::string topic;

  // "<time_ms>\t<event>\t<client>\t<topic>"
  std::string ToLine() const;
};

enum class ClockMode { kVirtual, kWallClock };

struct BrokerOptions {
  LatencyModel latency;
  std::uint64_t seed = 0;
  // Processing time per incoming message at the broker's ordering point.
  double service_ms = 0.0;
  ClockMode clock = ClockMode::kVirtual;
  bool keep_audit_log = true;
};

struct PublishOptions {
  // Virtual send time; defaults to the current clock.
  std::optional<double> at_ms;
  // Path so far. Its start_ms is set to the send time when the trace has no
  // hops and no compute yet.
  std::optional<Trace> trace;
  // Invoked when the broker's confirmation reaches the publisher, one hop
  // after processing. The trace ends with that confirmation hop.
  std::function<void(double confirmed_ms, const Trace& trace)> on_confirm;
};

struct PublishReceipt {
  std::uint64_t message_id = 0;
  double sent_ms = 0.0;
};

struct BrokerCounters {
  std::uint64_t published = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;
  std::uint64_t denied = 0;
};

class Broker {
 public:
  using Handler = std::function<void(const Delivery&)>;
  using SubscriptionId = std::uint64_t;

  explicit Broker(BrokerOptions options);

  Broker(const Broker&) = delete;
  Broker& operator=(const Broker&) = delete;

  void RegisterClient(const std::string& client_id);
  bool HasClient(const std::string& client_id) const;

  // ACL changes take effect for messages processed afterwards.
  void Allow(const std::string& client_id, const std::string& pattern,
             Permission permission);
  void Revoke(const std::string& client_id, const std::string& pattern,
              Permission permission);
  AclTable acl() const;

  // Without a handler, deliveries queue in the client's inbox. Throws
  // kUnknownClient, kMalformedTopic or kAclDenied.
  SubscriptionId Subscribe(const std::string& client_id,
                           const std::string& filter, Handler handler = {});
  void Unsubscribe(SubscriptionId id);

  // Throws kUnknownClient, kMalformedTopic or kAclDenied; a refused publish
  // produces no delivery.
  PublishReceipt Publish(const std::string& client_id, const std::string& topic,
                         std::vector<std::uint8_t> payload,
                         PublishOptions options = {});

  PublishReceipt PublishEnvelope(const std::string& client_id,
                                 const Envelope& env,
                                 PublishOptions options = {});

  // Drops the deliveries of the next `count` messages from `client_id` on
  // `topic`. Confirmations to the publisher still arrive.
  void InjectLoss(const std::string& client_id, const std::string& topic,
                  int count = 1);

  // Runs `fn` at virtual time `at` under the broker lock.
  void ScheduleAt(double at, std::function<void()> fn);

  // Processes events until none remain.
  void Run();

  double now() const;

  std::vector<Delivery> TakeInbox(const std::string& client_id);

  std::vector<AuditRecord> audit_log() const;
  // Every audit record is also written as a line to `sink`, if set.
  void set_audit_sink(std::ostream* sink);

  BrokerCounters counters() const;

 private:
  struct Subscription {
    SubscriptionId id;
    std::string client_id;
    std::string filter;
    Handler handler;
  };
  struct Client {
    Rng uplink_rng;
    Rng downlink_rng;
    double uplink_free_ms = 0.0;
    double downlink_free_ms = 0.0;
    std::vector<Delivery> inbox;
  };
  struct InFlight {
    std::uint64_t message_id;
    std::string publisher;
    std::string topic;
    std::vector<std::uint8_t> payload;
    Trace trace;
    double sent_ms;
    double arrival_ms;
    std::function<void(double, const Trace&)> on_confirm;
  };

  Client& ClientOrThrow(const std::string& client_id);
  void Process(std::shared_ptr<InFlight> msg);
  double DownlinkArrival(Client& client, double depart_ms);
  void Audit(double time_ms, const char* event, const std::string& client,
             const std::string& topic);
  double Clock() const;
  void PumpIfWallClock();

  BrokerOptions options_;
  mutable std::recursive_mutex mu_;
  EventLoop loop_;
  std::map<std::string, Client> clients_;
  AclTable acl_;
  std::vector<Subscription> subscriptions_;
  std::map<std::pair<std::string, std::string>, int> pending_loss_;
  std::vector<AuditRecord> audit_;
  std::ostream* audit_sink_ = nullptr;
  BrokerCounters counters_;
  double broker_free_ms_ = 0.0;
  std::uint64_t next_message_id_ = 1;
  SubscriptionId next_subscription_id_ = 1;
  double wall_origin_s_ = 0.0;
};

// Background filler traffic: `rate_per_s` messages per second spread
// round-robin over `publishers` synthetic clients, published on
// bench/filler/<i> and consumed by a single "filler-sink" subscriber.
struct LoadStats {
  std::uint64_t scheduled = 0;
  std::uint64_t delivered = 0;
};

std::shared_ptr<LoadStats> InjectLoad(Broker& broker, double rate_per_s,
                                      double duration_s, double start_ms,
                                      int publishers = 4);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_BROKER_H_
