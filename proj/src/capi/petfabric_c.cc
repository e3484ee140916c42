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

#include "petfabric/petfabric.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "core/adversary.h"
#include "core/ass.h"
#include "core/broker.h"
#include "core/codec.h"
#include "core/config.h"
#include "core/dp.h"
#include "core/envelope.h"
#include "core/error.h"
#include "core/jobs.h"
#include "core/latency.h"
#include "core/random.h"

namespace pf = petfabric;

struct pf_rng {
  pf::Rng rng;
};

struct pf_field {
  pf::FieldParams fp;
};

struct pf_shares {
  std::vector<pf::ShareBundle> bundles;
};

struct pf_decoded {
  pf::Envelope env;
  pf_envelope view;
};

struct pf_broker {
  std::unique_ptr<pf::Broker> broker;
};

struct pf_deliveries {
  std::vector<pf::Delivery> items;
};

struct pf_config {
  pf::JobConfig cfg;
};

struct pf_report {
  pf::Report report;
  std::vector<std::string> csv;
};

namespace {

struct LastError {
  std::string message;
  std::string field;
};

thread_local LastError last_error;

pf_status Fail(pf_status status, std::string message, std::string field = {}) {
  last_error.message = std::move(message);
  last_error.field = std::move(field);
  return status;
}

// Runs `fn`, mapping exceptions to status codes. Nothing escapes the ABI.
template <typename Fn>
pf_status Guard(Fn&& fn) {
  try {
    fn();
    last_error = {};
    return PF_OK;
  } catch (const pf::ConfigError& e) {
    return Fail(PF_ERR_CONFIG, e.what(), e.field());
  } catch (const pf::Error& e) {
    return Fail(static_cast<pf_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(PF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(PF_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(PF_ERR_INTERNAL, "unknown failure");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) {
    throw pf::Error(pf::ErrorCode::kInvalidArgument,
                    std::string(what) + " must not be NULL");
  }
}

pf::EncodingParams FromC(const pf_encoding& p) {
  pf::EncodingParams out;
  out.k = p.k;
  out.x_lo = p.x_lo;
  out.x_hi = p.x_hi;
  out.q_min = p.q_min;
  out.q = p.q;
  return out;
}

pf_encoding ToC(const pf::EncodingParams& p) {
  return pf_encoding{p.k, p.x_lo, p.x_hi, p.q_min, p.q};
}

pf::LatencyModel FromC(const pf_latency& l) {
  pf::LatencyModel m;
  m.per_hop_mean_ms = l.per_hop_mean_ms;
  m.per_hop_jitter_std_ms = l.jitter_std_ms;
  m.distribution = l.gaussian ? pf::LatencyDistribution::kTruncatedGaussian
                              : pf::LatencyDistribution::kConstant;
  return m;
}

pf::Envelope FromC(const pf_envelope& e) {
  Require(e.sensor_id != nullptr, "sensor_id");
  pf::Envelope env;
  env.sensor_id = e.sensor_id;
  env.sequence = e.sequence;
  if (e.scheme > static_cast<std::uint8_t>(pf::Scheme::kKrr)) {
    throw pf::Error(pf::ErrorCode::kInvalidArgument,
                    "unknown scheme tag " + std::to_string(e.scheme));
  }
  env.scheme = static_cast<pf::Scheme>(e.scheme);
  env.value = e.value;
  if (e.has_share_index) env.share_index = e.share_index;
  if (e.has_epsilon) env.epsilon = e.epsilon;
  env.origin_us = e.origin_us;
  return env;
}

}  // namespace

extern "C" {

const char* pf_status_name(pf_status status) {
  return pf::ErrorCodeName(static_cast<pf::ErrorCode>(status));
}

const char* pf_last_error_message(void) {
  return last_error.message.c_str();
}

const char* pf_last_error_field(void) { return last_error.field.c_str(); }

const char* pf_version(void) { return PETFABRIC_VERSION; }

pf_status pf_rng_create(uint64_t seed, pf_rng** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new pf_rng{pf::Rng(seed)};
  });
}

void pf_rng_destroy(pf_rng* rng) { delete rng; }

pf_status pf_rng_next_u64(pf_rng* rng, uint64_t* out) {
  return Guard([&] {
    Require(rng && out, "rng and out");
    *out = rng->rng.NextU64();
  });
}

pf_status pf_encoding_derive(double x_lo, double x_hi, int64_t k,
                             pf_encoding* out) {
  return Guard([&] {
    Require(out, "out");
    *out = ToC(pf::DeriveParams(x_lo, x_hi, k));
  });
}

pf_status pf_encode(const pf_encoding* p, double x, int64_t* out) {
  return Guard([&] {
    Require(p && out, "params and out");
    *out = pf::Encode(x, FromC(*p));
  });
}

pf_status pf_decode(const pf_encoding* p, int64_t y, double* out) {
  return Guard([&] {
    Require(p && out, "params and out");
    *out = pf::Decode(y, FromC(*p));
  });
}

pf_status pf_laplace_sample(pf_rng* rng, double scale, double* out) {
  return Guard([&] {
    Require(rng && out, "rng and out");
    *out = pf::SampleLaplace(scale, rng->rng);
  });
}

pf_status pf_ldp_perturb(pf_rng* rng, int64_t x, double epsilon,
                         int64_t sensitivity, int64_t* out) {
  return Guard([&] {
    Require(rng && out, "rng and out");
    *out = pf::LdpPerturb(x, pf::PrivacyBudget{epsilon, sensitivity}, rng->rng);
  });
}

pf_status pf_gdp_aggregate(pf_rng* rng, const int64_t* xs, size_t n,
                           double epsilon, int64_t sensitivity, int mean,
                           double* out) {
  return Guard([&] {
    Require(rng && out && (xs || n == 0), "rng, xs and out");
    *out = pf::GdpAggregate(
               std::span<const int64_t>(xs, n),
               pf::PrivacyBudget{epsilon, sensitivity},
               mean ? pf::Aggregator::kMean : pf::Aggregator::kSum, rng->rng)
               .value;
  });
}

pf_status pf_krr_perturb(pf_rng* rng, int64_t x, double epsilon,
                         const pf_encoding* p, int64_t* out) {
  return Guard([&] {
    Require(rng && p && out, "rng, params and out");
    *out = pf::KrrPerturb(x, epsilon, FromC(*p), rng->rng);
  });
}

pf_status pf_field_choose(uint64_t n_max, int64_t q, pf_field** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new pf_field{pf::ChooseModulus(n_max, q)};
  });
}

pf_status pf_field_create(uint64_t modulus, uint64_t n_max, int64_t q,
                          pf_field** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new pf_field{pf::FieldParams::Create(modulus, n_max, q)};
  });
}

void pf_field_destroy(pf_field* field) { delete field; }

uint64_t pf_field_modulus(const pf_field* field) {
  return field ? field->fp.modulus() : 0;
}

pf_status pf_shares_create(pf_shares** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new pf_shares{};
  });
}

void pf_shares_destroy(pf_shares* shares) { delete shares; }

pf_status pf_shares_split(pf_shares* shares, const pf_field* field,
                          pf_rng* rng, const char* sensor_id, int64_t secret,
                          uint32_t m) {
  return Guard([&] {
    Require(shares && field && rng && sensor_id, "arguments");
    shares->bundles.push_back(
        pf::Split(sensor_id, secret, m, field->fp, rng->rng));
  });
}

size_t pf_shares_count(const pf_shares* shares) {
  return shares ? shares->bundles.size() : 0;
}

pf_status pf_shares_get(const pf_shares* shares, size_t bundle,
                        uint32_t channel, uint64_t* value, int* present) {
  return Guard([&] {
    Require(shares && value && present, "arguments");
    if (bundle >= shares->bundles.size() || channel < 1 ||
        channel > shares->bundles[bundle].m()) {
      throw pf::Error(pf::ErrorCode::kOutOfRange, "no such share");
    }
    const auto& s = shares->bundles[bundle].shares[channel - 1];
    *present = s.has_value() ? 1 : 0;
    *value = s.value_or(0);
  });
}

pf_status pf_shares_drop(pf_shares* shares, size_t bundle, uint32_t channel) {
  return Guard([&] {
    Require(shares, "shares");
    if (bundle >= shares->bundles.size() || channel < 1 ||
        channel > shares->bundles[bundle].m()) {
      throw pf::Error(pf::ErrorCode::kOutOfRange, "no such share");
    }
    shares->bundles[bundle].shares[channel - 1].reset();
  });
}

pf_status pf_shares_reconstruct_sum(const pf_shares* shares,
                                    const pf_field* field, int64_t* out) {
  return Guard([&] {
    Require(shares && field && out, "arguments");
    *out = pf::ReconstructSum(shares->bundles, field->fp);
  });
}

pf_status pf_envelope_encode(const pf_envelope* env, uint8_t* buf, size_t cap,
                             size_t* len) {
  std::vector<std::uint8_t> bytes;
  const pf_status st = Guard([&] {
    Require(env && len, "env and len");
    bytes = pf::EncodePayload(FromC(*env));
    *len = bytes.size();
  });
  if (st != PF_OK) return st;
  if (bytes.size() > cap || buf == nullptr) {
    return Fail(PF_ERR_BUFFER_TOO_SMALL,
                "payload needs " + std::to_string(bytes.size()) + " bytes");
  }
  std::memcpy(buf, bytes.data(), bytes.size());
  return PF_OK;
}

pf_status pf_envelope_decode(const uint8_t* bytes, size_t len,
                             pf_decoded** out) {
  return Guard([&] {
    Require(out && (bytes || len == 0), "bytes and out");
    auto d = std::make_unique<pf_decoded>();
    d->env = pf::DecodePayload(std::span<const std::uint8_t>(bytes, len));
    const pf::Envelope& e = d->env;
    d->view = pf_envelope{e.sensor_id.c_str(),
                          e.sequence,
                          static_cast<uint8_t>(e.scheme),
                          e.value,
                          e.share_index.has_value(),
                          e.share_index.value_or(0),
                          e.epsilon.has_value(),
                          e.epsilon.value_or(0.0),
                          e.origin_us};
    *out = d.release();
  });
}

const pf_envelope* pf_decoded_view(const pf_decoded* decoded) {
  return decoded ? &decoded->view : nullptr;
}

void pf_decoded_destroy(pf_decoded* decoded) { delete decoded; }

pf_status pf_latency_preset(const char* name, pf_latency* out) {
  return Guard([&] {
    Require(name && out, "name and out");
    auto m = pf::LatencyPreset(name);
    if (!m) {
      throw pf::Error(pf::ErrorCode::kInvalidArgument,
                      std::string("unknown latency preset '") + name + "'");
    }
    *out = pf_latency{m->per_hop_mean_ms, m->per_hop_jitter_std_ms,
                      m->distribution ==
                          pf::LatencyDistribution::kTruncatedGaussian};
  });
}

pf_status pf_broker_create(const pf_latency* latency, uint64_t seed,
                           double service_ms, pf_broker** out) {
  return Guard([&] {
    Require(out, "out");
    pf::BrokerOptions opts;
    if (latency) opts.latency = FromC(*latency);
    opts.seed = seed;
    opts.service_ms = service_ms;
    *out = new pf_broker{std::make_unique<pf::Broker>(opts)};
  });
}

void pf_broker_destroy(pf_broker* broker) { delete broker; }

pf_status pf_broker_register(pf_broker* broker, const char* client) {
  return Guard([&] {
    Require(broker && client, "broker and client");
    broker->broker->RegisterClient(client);
  });
}

pf_status pf_broker_allow(pf_broker* broker, const char* client,
                          const char* pattern, int permission) {
  return Guard([&] {
    Require(broker && client && pattern, "arguments");
    if (permission != PF_PERMISSION_PUBLISH &&
        permission != PF_PERMISSION_SUBSCRIBE) {
      throw pf::Error(pf::ErrorCode::kInvalidArgument, "unknown permission");
    }
    broker->broker->Allow(client, pattern,
                          permission == PF_PERMISSION_PUBLISH
                              ? pf::Permission::kPublish
                              : pf::Permission::kSubscribe);
  });
}

pf_status pf_broker_subscribe(pf_broker* broker, const char* client,
                              const char* filter, uint64_t* sub_id) {
  return Guard([&] {
    Require(broker && client && filter, "arguments");
    const auto id = broker->broker->Subscribe(client, filter);
    if (sub_id) *sub_id = id;
  });
}

pf_status pf_broker_publish(pf_broker* broker, const char* client,
                            const char* topic, const uint8_t* payload,
                            size_t len, double at_ms, uint64_t* message_id) {
  return Guard([&] {
    Require(broker && client && topic && (payload || len == 0), "arguments");
    pf::PublishOptions opts;
    if (at_ms >= 0.0) opts.at_ms = at_ms;
    const auto receipt = broker->broker->Publish(
        client, topic, std::vector<std::uint8_t>(payload, payload + len),
        std::move(opts));
    if (message_id) *message_id = receipt.message_id;
  });
}

pf_status pf_broker_inject_loss(pf_broker* broker, const char* client,
                                const char* topic, int count) {
  return Guard([&] {
    Require(broker && client && topic, "arguments");
    broker->broker->InjectLoss(client, topic, count);
  });
}

pf_status pf_broker_run(pf_broker* broker) {
  return Guard([&] {
    Require(broker, "broker");
    broker->broker->Run();
  });
}

double pf_broker_now(const pf_broker* broker) {
  return broker ? broker->broker->now() : 0.0;
}

pf_status pf_broker_take(pf_broker* broker, const char* client,
                         pf_deliveries** out) {
  return Guard([&] {
    Require(broker && client && out, "arguments");
    *out = new pf_deliveries{broker->broker->TakeInbox(client)};
  });
}

size_t pf_deliveries_count(const pf_deliveries* list) {
  return list ? list->items.size() : 0;
}

pf_status pf_deliveries_get(const pf_deliveries* list, size_t i,
                            pf_delivery_info* out) {
  return Guard([&] {
    Require(list && out, "list and out");
    if (i >= list->items.size()) {
      throw pf::Error(pf::ErrorCode::kOutOfRange, "no such delivery");
    }
    const pf::Delivery& d = list->items[i];
    *out = pf_delivery_info{d.message_id,
                            d.topic.c_str(),
                            d.publisher.c_str(),
                            d.payload.data(),
                            d.payload.size(),
                            d.trace.start_ms,
                            d.delivered_ms,
                            d.trace.compute_ms,
                            d.trace.hop_delays.size(),
                            d.trace.total_ms()};
  });
}

void pf_deliveries_destroy(pf_deliveries* list) { delete list; }

size_t pf_broker_audit_count(const pf_broker* broker) {
  return broker ? broker->broker->audit_log().size() : 0;
}

pf_status pf_broker_audit_line(const pf_broker* broker, size_t i, char* buf,
                               size_t cap, size_t* len) {
  std::string line;
  const pf_status st = Guard([&] {
    Require(broker && len, "broker and len");
    const auto log = broker->broker->audit_log();
    if (i >= log.size()) {
      throw pf::Error(pf::ErrorCode::kOutOfRange, "no such audit record");
    }
    line = log[i].ToLine();
    *len = line.size();
  });
  if (st != PF_OK) return st;
  if (buf == nullptr || cap < line.size() + 1) {
    return Fail(PF_ERR_BUFFER_TOO_SMALL,
                "audit line needs " + std::to_string(line.size() + 1) +
                    " bytes");
  }
  std::memcpy(buf, line.c_str(), line.size() + 1);
  return PF_OK;
}

double pf_analytic_guess_rate(double epsilon, double gap, double sensitivity) {
  return pf::AnalyticGuessRate(epsilon, gap, sensitivity);
}

pf_status pf_empirical_guess_rate(pf_rng* rng, int64_t known_prefix_sum,
                                  int64_t s, int64_t t, double epsilon,
                                  int64_t sensitivity, uint64_t trials,
                                  int local, unsigned workers, double* out) {
  return Guard([&] {
    Require(rng && out, "rng and out");
    pf::HypothesisTest test;
    test.known_prefix_sum = known_prefix_sum;
    test.s = s;
    test.t = t;
    test.budget = pf::PrivacyBudget{epsilon, sensitivity};
    *out = pf::EmpiricalGuessRate(
               test, trials, rng->rng,
               local ? pf::NoiseModel::kLocal : pf::NoiseModel::kGlobal,
               workers)
               .empirical;
  });
}

pf_status pf_config_parse(const char* json, size_t len, int has_seed,
                          uint64_t seed, pf_config** out) {
  return Guard([&] {
    Require(json && out, "json and out");
    std::optional<std::uint64_t> override_seed;
    if (has_seed) override_seed = seed;
    *out = new pf_config{
        pf::ParseConfig(std::string_view(json, len), override_seed)};
  });
}

void pf_config_destroy(pf_config* config) { delete config; }

const char* pf_config_kind(const pf_config* config) {
  return config ? pf::JobKindName(config->cfg.kind) : "";
}

uint64_t pf_config_seed(const pf_config* config) {
  return config ? config->cfg.seed : 0;
}

pf_status pf_run(const pf_config* config, unsigned workers, pf_report** out) {
  return Guard([&] {
    Require(config && out, "config and out");
    auto r = std::make_unique<pf_report>();
    r->report = pf::RunJob(config->cfg, workers);
    for (const auto& t : r->report.tables) r->csv.push_back(t.ToCsv());
    *out = r.release();
  });
}

void pf_report_destroy(pf_report* report) { delete report; }

size_t pf_report_table_count(const pf_report* report) {
  return report ? report->report.tables.size() : 0;
}

const char* pf_report_table_name(const pf_report* report, size_t i) {
  if (!report || i >= report->report.tables.size()) return nullptr;
  return report->report.tables[i].name.c_str();
}

const char* pf_report_table_csv(const pf_report* report, size_t i,
                                size_t* len) {
  if (!report || i >= report->csv.size()) return nullptr;
  if (len) *len = report->csv[i].size();
  return report->csv[i].c_str();
}

size_t pf_report_table_rows(const pf_report* report, size_t i) {
  if (!report || i >= report->report.tables.size()) return 0;
  return report->report.tables[i].rows.size();
}

size_t pf_report_table_column_count(const pf_report* report, size_t i) {
  if (!report || i >= report->report.tables.size()) return 0;
  return report->report.tables[i].columns.size();
}

const char* pf_report_table_column(const pf_report* report, size_t i,
                                   size_t column) {
  if (!report || i >= report->report.tables.size()) return nullptr;
  const auto& cols = report->report.tables[i].columns;
  return column < cols.size() ? cols[column].c_str() : nullptr;
}

size_t pf_report_summary_count(const pf_report* report) {
  return report ? report->report.summary.size() : 0;
}

const char* pf_report_summary_line(const pf_report* report, size_t i) {
  if (!report || i >= report->report.summary.size()) return nullptr;
  return report->report.summary[i].c_str();
}

}  // extern "C"
