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

#include "core/broker.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "core/error.h"

namespace petfabric {

void EventLoop::Schedule(double at, std::function<void()> fn) {
  queue_.push({std::max(at, now_), next_seq_++, std::move(fn)});
}

bool EventLoop::Step() {
  if (queue_.empty()) return false;
  // priority_queue::top is const; the function is moved out via a copy of
  // the event handle.
  Event ev = queue_.top();
  queue_.pop();
  now_ = ev.at;
  ev.fn();
  return true;
}

void EventLoop::Run() {
  while (Step()) {
  }
}

double Trace::total_ms() const {
  double total = compute_ms;
  for (double h : hop_delays) total += h;
  return total;
}

std::string AuditRecord::ToLine() const {
  char time_buf[32];
  std::snprintf(time_buf, sizeof(time_buf), "%.6f", time_ms);
  return std::string(time_buf) + "\t" + event + "\t" + client + "\t" + topic;
}

namespace {

double SteadySeconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

Broker::Broker(BrokerOptions options) : options_(std::move(options)) {
  options_.latency.Validate();
  if (!(options_.service_ms >= 0.0) || !std::isfinite(options_.service_ms)) {
    throw Error(ErrorCode::kInvalidArgument,
                "broker service time must be non-negative");
  }
  wall_origin_s_ = SteadySeconds();
}

double Broker::Clock() const {
  if (options_.clock == ClockMode::kWallClock) {
    const double wall = (SteadySeconds() - wall_origin_s_) * 1000.0;
    return std::max(wall, loop_.now());
  }
  return loop_.now();
}

void Broker::PumpIfWallClock() {
  if (options_.clock == ClockMode::kWallClock) loop_.Run();
}

void Broker::Audit(double time_ms, const char* event, const std::string& client,
                   const std::string& topic) {
  if (!options_.keep_audit_log && audit_sink_ == nullptr) return;
  AuditRecord rec{time_ms, event, client, topic};
  if (audit_sink_ != nullptr) *audit_sink_ << rec.ToLine() << '\n';
  if (options_.keep_audit_log) audit_.push_back(std::move(rec));
}

void Broker::RegisterClient(const std::string& client_id) {
  std::lock_guard lock(mu_);
  if (client_id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "client id must not be empty");
  }
  if (clients_.contains(client_id)) return;
  const std::uint64_t h = HashLabel(client_id);
  clients_.emplace(client_id,
                   Client{Rng(DeriveSeed(options_.seed, 2 * h)),
                          Rng(DeriveSeed(options_.seed, 2 * h + 1)), 0.0, 0.0, {}});
  Audit(Clock(), "connect", client_id, "");
}

bool Broker::HasClient(const std::string& client_id) const {
  std::lock_guard lock(mu_);
  return clients_.contains(client_id);
}

Broker::Client& Broker::ClientOrThrow(const std::string& client_id) {
  auto it = clients_.find(client_id);
  if (it == clients_.end()) {
    throw Error(ErrorCode::kUnknownClient,
                "client '" + client_id + "' is not registered");
  }
  return it->second;
}

void Broker::Allow(const std::string& client_id, const std::string& pattern,
                   Permission permission) {
  std::lock_guard lock(mu_);
  acl_.Allow(client_id, pattern, permission);
}

void Broker::Revoke(const std::string& client_id, const std::string& pattern,
                    Permission permission) {
  std::lock_guard lock(mu_);
  acl_.Revoke(client_id, pattern, permission);
}

AclTable Broker::acl() const {
  std::lock_guard lock(mu_);
  return acl_;
}

Broker::SubscriptionId Broker::Subscribe(const std::string& client_id,
                                         const std::string& filter,
                                         Handler handler) {
  std::lock_guard lock(mu_);
  ClientOrThrow(client_id);
  ValidateTopicFilter(filter);
  if (!acl_.MaySubscribe(client_id, filter)) {
    Audit(Clock(), "subscribe-denied", client_id, filter);
    ++counters_.denied;
    throw Error(ErrorCode::kAclDenied,
                "client '" + client_id + "' may not subscribe to '" + filter +
                    "'");
  }
  const SubscriptionId id = next_subscription_id_++;
  subscriptions_.push_back({id, client_id, filter, std::move(handler)});
  Audit(Clock(), "subscribe", client_id, filter);
  return id;
}

void Broker::Unsubscribe(SubscriptionId id) {
  std::lock_guard lock(mu_);
  std::erase_if(subscriptions_,
                [id](const Subscription& s) { return s.id == id; });
}

PublishReceipt Broker::Publish(const std::string& client_id,
                               const std::string& topic,
                               std::vector<std::uint8_t> payload,
                               PublishOptions options) {
  std::lock_guard lock(mu_);
  Client& client = ClientOrThrow(client_id);
  ValidateTopicName(topic);
  const double now = Clock();
  if (!acl_.MayPublish(client_id, topic)) {
    Audit(now, "publish-denied", client_id, topic);
    ++counters_.denied;
    throw Error(ErrorCode::kAclDenied,
                "client '" + client_id + "' may not publish to '" + topic +
                    "'");
  }
  const double sent = std::max(options.at_ms.value_or(now), now);
  auto msg = std::make_shared<InFlight>();
  msg->message_id = next_message_id_++;
  msg->publisher = client_id;
  msg->topic = topic;
  msg->payload = std::move(payload);
  if (options.trace) {
    msg->trace = std::move(*options.trace);
  } else {
    msg->trace.start_ms = sent;
  }
  msg->sent_ms = sent;
  msg->on_confirm = std::move(options.on_confirm);

  const double leg = options_.latency.Sample(client.uplink_rng);
  msg->arrival_ms = std::max(sent + leg, client.uplink_free_ms);
  client.uplink_free_ms = msg->arrival_ms;
  ++counters_.published;
  Audit(sent, "publish", client_id, topic);

  const PublishReceipt receipt{msg->message_id, sent};
  loop_.Schedule(msg->arrival_ms, [this, msg] { Process(msg); });
  PumpIfWallClock();
  return receipt;
}

PublishReceipt Broker::PublishEnvelope(const std::string& client_id,
                                       const Envelope& env,
                                       PublishOptions options) {
  return Publish(client_id, env.topic, EncodePayload(env), std::move(options));
}

double Broker::DownlinkArrival(Client& client, double depart_ms) {
  const double leg = options_.latency.Sample(client.downlink_rng);
  const double at = std::max(depart_ms + leg, client.downlink_free_ms);
  client.downlink_free_ms = at;
  return at;
}

void Broker::Process(std::shared_ptr<InFlight> msg) {
  const double start = std::max(msg->arrival_ms, broker_free_ms_);
  const double done = start + options_.service_ms;
  broker_free_ms_ = done;
  loop_.Schedule(done, [this, msg, done] {
    const double publish_hop = done - msg->sent_ms;

    bool lost = false;
    auto loss = pending_loss_.find({msg->publisher, msg->topic});
    if (loss != pending_loss_.end() && loss->second > 0) {
      lost = true;
      if (--loss->second == 0) pending_loss_.erase(loss);
    }

    std::set<std::string> served;
    for (const Subscription& sub : subscriptions_) {
      if (!TopicMatches(sub.filter, msg->topic)) continue;
      if (!served.insert(sub.client_id).second) continue;
      if (!acl_.MayReceive(sub.client_id, msg->topic)) {
        Audit(done, "deliver-denied", sub.client_id, msg->topic);
        ++counters_.denied;
        continue;
      }
      if (lost) {
        Audit(done, "drop", sub.client_id, msg->topic);
        ++counters_.dropped;
        continue;
      }
      Client& target = clients_.at(sub.client_id);
      const double at = DownlinkArrival(target, done);
      Delivery d{msg->message_id, msg->topic, msg->publisher, msg->payload,
                 msg->trace, at};
      d.trace.hop_delays.push_back(publish_hop);
      d.trace.hop_delays.push_back(at - done);
      const SubscriptionId sub_id = sub.id;
      loop_.Schedule(at, [this, sub_id, d = std::move(d)] {
        auto it = std::find_if(
            subscriptions_.begin(), subscriptions_.end(),
            [sub_id](const Subscription& s) { return s.id == sub_id; });
        if (it == subscriptions_.end()) return;  // unsubscribed in flight
        const std::string client_id = it->client_id;
        Handler handler = it->handler;
        Audit(d.delivered_ms, "deliver", client_id, d.topic);
        ++counters_.delivered;
        if (handler) {
          handler(d);
        } else {
          clients_.at(client_id).inbox.push_back(d);
        }
      });
    }

    if (msg->on_confirm) {
      Client& publisher = clients_.at(msg->publisher);
      const double at = DownlinkArrival(publisher, done);
      Trace t = msg->trace;
      t.hop_delays.push_back(publish_hop);
      t.hop_delays.push_back(at - done);
      auto confirm = msg->on_confirm;
      loop_.Schedule(at, [confirm, at, t = std::move(t)] { confirm(at, t); });
    }
  });
}

void Broker::InjectLoss(const std::string& client_id, const std::string& topic,
                        int count) {
  std::lock_guard lock(mu_);
  if (count > 0) pending_loss_[{client_id, topic}] += count;
}

void Broker::ScheduleAt(double at, std::function<void()> fn) {
  std::lock_guard lock(mu_);
  loop_.Schedule(at, std::move(fn));
}

void Broker::Run() {
  std::lock_guard lock(mu_);
  loop_.Run();
}

double Broker::now() const {
  std::lock_guard lock(mu_);
  return Clock();
}

std::vector<Delivery> Broker::TakeInbox(const std::string& client_id) {
  std::lock_guard lock(mu_);
  return std::exchange(ClientOrThrow(client_id).inbox, {});
}

std::vector<AuditRecord> Broker::audit_log() const {
  std::lock_guard lock(mu_);
  return audit_;
}

void Broker::set_audit_sink(std::ostream* sink) {
  std::lock_guard lock(mu_);
  audit_sink_ = sink;
}

BrokerCounters Broker::counters() const {
  std::lock_guard lock(mu_);
  return counters_;
}

std::shared_ptr<LoadStats> InjectLoad(Broker& broker, double rate_per_s,
                                      double duration_s, double start_ms,
                                      int publishers) {
  auto stats = std::make_shared<LoadStats>();
  if (!(rate_per_s > 0.0) || !(duration_s > 0.0)) return stats;
  publishers = std::max(publishers, 1);

  const std::string sink = "filler-sink";
  if (!broker.HasClient(sink)) {
    broker.RegisterClient(sink);
    broker.Allow(sink, "bench/filler/#", Permission::kSubscribe);
    broker.Subscribe(sink, "bench/filler/#",
                     [stats](const Delivery&) { ++stats->delivered; });
  }
  std::vector<std::string> ids;
  std::vector<std::string> topics;
  for (int i = 0; i < publishers; ++i) {
    ids.push_back("filler-" + std::to_string(i));
    topics.push_back("bench/filler/" + std::to_string(i));
    broker.RegisterClient(ids.back());
    broker.Allow(ids.back(), topics.back(), Permission::kPublish);
  }

  const auto count =
      static_cast<std::uint64_t>(std::floor(rate_per_s * duration_s + 1e-9));
  const double interval_ms = 1000.0 / rate_per_s;
  stats->scheduled = count;
  for (std::uint64_t j = 0; j < count; ++j) {
    const std::size_t p = j % static_cast<std::uint64_t>(publishers);
    Envelope filler;
    filler.topic = topics[p];
    filler.sensor_id = ids[p];
    filler.sequence = j;
    filler.scheme = Scheme::kRaw;
    const double at = start_ms + static_cast<double>(j) * interval_ms;
    filler.origin_us = static_cast<std::uint64_t>(std::llround(at * 1000.0));
    broker.ScheduleAt(at, [&broker, id = ids[p], filler] {
      broker.PublishEnvelope(id, filler);
    });
  }
  return stats;
}

}  // namespace petfabric
