/*
 * Copyright 2026 The PET Fabric Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the PET fabric library.
 *
 * Every fallible call returns a pf_status. On failure the calling thread's
 * pf_last_error_message() describes the problem (and pf_last_error_field()
 * names the offending config field for PF_ERR_CONFIG). Objects are opaque
 * handles created by pf_*_create and released by the matching pf_*_destroy;
 * destroy functions accept NULL. Strings returned by accessors stay valid
 * until the owning handle is destroyed.
 *
 * Handles are not synchronized: use one handle from one thread at a time.
 */

#ifndef PETFABRIC_PETFABRIC_H_
#define PETFABRIC_PETFABRIC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PETFABRIC_BUILDING)
#define PF_API __attribute__((visibility("default")))
#else
#define PF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_INVALID_ARGUMENT = 1,
  PF_ERR_DOMAIN_INVERTED = 2,
  PF_ERR_OUT_OF_DOMAIN = 3,
  PF_ERR_OUT_OF_RANGE = 4,
  PF_ERR_OVERFLOW = 5,
  PF_ERR_ACL_DENIED = 6,
  PF_ERR_UNKNOWN_CLIENT = 7,
  PF_ERR_MALFORMED_TOPIC = 8,
  PF_ERR_DECODE = 9,
  PF_ERR_MISSING_SHARE = 10,
  PF_ERR_MODULUS_MISMATCH = 11,
  PF_ERR_CONFIG = 12,
  PF_ERR_IO = 13,
  PF_ERR_BUFFER_TOO_SMALL = 14,
  PF_ERR_INTERNAL = 15
} pf_status;

PF_API const char* pf_status_name(pf_status status);
PF_API const char* pf_last_error_message(void);
PF_API const char* pf_last_error_field(void);
PF_API const char* pf_version(void);

/* Random source ---------------------------------------------------------- */

typedef struct pf_rng pf_rng;

PF_API pf_status pf_rng_create(uint64_t seed, pf_rng** out);
PF_API void pf_rng_destroy(pf_rng* rng);
PF_API pf_status pf_rng_next_u64(pf_rng* rng, uint64_t* out);

/* Fixed-point codec ------------------------------------------------------ */

typedef struct pf_encoding {
  int64_t k;
  double x_lo;
  double x_hi;
  int64_t q_min;
  int64_t q;
} pf_encoding;

PF_API pf_status pf_encoding_derive(double x_lo, double x_hi, int64_t k,
                                    pf_encoding* out);
PF_API pf_status pf_encode(const pf_encoding* p, double x, int64_t* out);
PF_API pf_status pf_decode(const pf_encoding* p, int64_t y, double* out);

/* Differential privacy --------------------------------------------------- */

PF_API pf_status pf_laplace_sample(pf_rng* rng, double scale, double* out);
PF_API pf_status pf_ldp_perturb(pf_rng* rng, int64_t x, double epsilon,
                                int64_t sensitivity, int64_t* out);
/* mean != 0 releases the noisy mean instead of the sum. */
PF_API pf_status pf_gdp_aggregate(pf_rng* rng, const int64_t* xs, size_t n,
                                  double epsilon, int64_t sensitivity,
                                  int mean, double* out);
PF_API pf_status pf_krr_perturb(pf_rng* rng, int64_t x, double epsilon,
                                const pf_encoding* p, int64_t* out);

/* Additive secret sharing ------------------------------------------------ */

typedef struct pf_field pf_field;
typedef struct pf_shares pf_shares;

/* Smallest prime above n_max * q. */
PF_API pf_status pf_field_choose(uint64_t n_max, int64_t q, pf_field** out);
/* A pinned prime modulus, checked against n_max * q. */
PF_API pf_status pf_field_create(uint64_t modulus, uint64_t n_max, int64_t q,
                                 pf_field** out);
PF_API void pf_field_destroy(pf_field* field);
PF_API uint64_t pf_field_modulus(const pf_field* field);

/* A set of share bundles, one per sensor. */
PF_API pf_status pf_shares_create(pf_shares** out);
PF_API void pf_shares_destroy(pf_shares* shares);
PF_API pf_status pf_shares_split(pf_shares* shares, const pf_field* field,
                                 pf_rng* rng, const char* sensor_id,
                                 int64_t secret, uint32_t m);
PF_API size_t pf_shares_count(const pf_shares* shares);
/* channel is 1-based. *present is 0 for a share that was dropped. */
PF_API pf_status pf_shares_get(const pf_shares* shares, size_t bundle,
                               uint32_t channel, uint64_t* value,
                               int* present);
PF_API pf_status pf_shares_drop(pf_shares* shares, size_t bundle,
                                uint32_t channel);
/* PF_ERR_MISSING_SHARE lists every absent (sensor, channel) in the message. */
PF_API pf_status pf_shares_reconstruct_sum(const pf_shares* shares,
                                           const pf_field* field,
                                           int64_t* out);

/* Envelopes -------------------------------------------------------------- */

enum {
  PF_SCHEME_RAW = 0,
  PF_SCHEME_LDP = 1,
  PF_SCHEME_GDP = 2,
  PF_SCHEME_ASS_SHARE = 3,
  PF_SCHEME_KRR = 4
};

typedef struct pf_envelope {
  const char* sensor_id;
  uint64_t sequence;
  uint8_t scheme;
  int64_t value;
  int has_share_index;
  uint64_t share_index;
  int has_epsilon;
  double epsilon;
  uint64_t origin_us;
} pf_envelope;

typedef struct pf_decoded pf_decoded;

/* Canonical CBOR. With a short buffer returns PF_ERR_BUFFER_TOO_SMALL and
 * still sets *len to the required size. */
PF_API pf_status pf_envelope_encode(const pf_envelope* env, uint8_t* buf,
                                    size_t cap, size_t* len);
PF_API pf_status pf_envelope_decode(const uint8_t* bytes, size_t len,
                                    pf_decoded** out);
PF_API const pf_envelope* pf_decoded_view(const pf_decoded* decoded);
PF_API void pf_decoded_destroy(pf_decoded* decoded);

/* Broker ----------------------------------------------------------------- */

typedef struct pf_latency {
  double per_hop_mean_ms;
  double jitter_std_ms;
  int gaussian;
} pf_latency;

enum { PF_PERMISSION_PUBLISH = 0, PF_PERMISSION_SUBSCRIBE = 1 };

typedef struct pf_broker pf_broker;
typedef struct pf_deliveries pf_deliveries;

typedef struct pf_delivery_info {
  uint64_t message_id;
  const char* topic;
  const char* publisher;
  const uint8_t* payload;
  size_t payload_len;
  double start_ms;
  double delivered_ms;
  double compute_ms;
  size_t hop_count;
  double end_to_end_ms;
} pf_delivery_info;

PF_API pf_status pf_latency_preset(const char* name, pf_latency* out);
/* Virtual-time broker. latency may be NULL for the default model. */
PF_API pf_status pf_broker_create(const pf_latency* latency, uint64_t seed,
                                  double service_ms, pf_broker** out);
PF_API void pf_broker_destroy(pf_broker* broker);
PF_API pf_status pf_broker_register(pf_broker* broker, const char* client);
PF_API pf_status pf_broker_allow(pf_broker* broker, const char* client,
                                 const char* pattern, int permission);
/* Deliveries queue in the client's inbox; see pf_broker_take. */
PF_API pf_status pf_broker_subscribe(pf_broker* broker, const char* client,
                                     const char* filter, uint64_t* sub_id);
/* at_ms < 0 publishes at the current virtual time. */
PF_API pf_status pf_broker_publish(pf_broker* broker, const char* client,
                                   const char* topic, const uint8_t* payload,
                                   size_t len, double at_ms,
                                   uint64_t* message_id);
PF_API pf_status pf_broker_inject_loss(pf_broker* broker, const char* client,
                                       const char* topic, int count);
PF_API pf_status pf_broker_run(pf_broker* broker);
PF_API double pf_broker_now(const pf_broker* broker);
PF_API pf_status pf_broker_take(pf_broker* broker, const char* client,
                                pf_deliveries** out);
PF_API size_t pf_deliveries_count(const pf_deliveries* list);
PF_API pf_status pf_deliveries_get(const pf_deliveries* list, size_t i,
                                   pf_delivery_info* out);
PF_API void pf_deliveries_destroy(pf_deliveries* list);
PF_API size_t pf_broker_audit_count(const pf_broker* broker);
/* "<time_ms>\t<event>\t<client>\t<topic>", NUL-terminated. */
PF_API pf_status pf_broker_audit_line(const pf_broker* broker, size_t i,
                                      char* buf, size_t cap, size_t* len);

/* Adversary -------------------------------------------------------------- */

PF_API double pf_analytic_guess_rate(double epsilon, double gap,
                                     double sensitivity);
/* local != 0 perturbs the target record instead of the released sum. */
PF_API pf_status pf_empirical_guess_rate(pf_rng* rng, int64_t known_prefix_sum,
                                         int64_t s, int64_t t, double epsilon,
                                         int64_t sensitivity, uint64_t trials,
                                         int local, unsigned workers,
                                         double* out);

/* Jobs ------------------------------------------------------------------- */

typedef struct pf_config pf_config;
typedef struct pf_report pf_report;

/* Parses and validates a JSON job config. With has_seed != 0, seed replaces
 * the config's own "seed". */
PF_API pf_status pf_config_parse(const char* json, size_t len, int has_seed,
                                 uint64_t seed, pf_config** out);
PF_API void pf_config_destroy(pf_config* config);
/* scenario, weight-sum, profile-obfuscation, adversary, ass-demo or
 * bench-suite. */
PF_API const char* pf_config_kind(const pf_config* config);
PF_API uint64_t pf_config_seed(const pf_config* config);

PF_API pf_status pf_run(const pf_config* config, unsigned workers,
                        pf_report** out);
PF_API void pf_report_destroy(pf_report* report);
PF_API size_t pf_report_table_count(const pf_report* report);
PF_API const char* pf_report_table_name(const pf_report* report, size_t i);
PF_API const char* pf_report_table_csv(const pf_report* report, size_t i,
                                       size_t* len);
PF_API size_t pf_report_table_rows(const pf_report* report, size_t i);
PF_API size_t pf_report_table_column_count(const pf_report* report, size_t i);
PF_API const char* pf_report_table_column(const pf_report* report, size_t i,
                                          size_t column);
PF_API size_t pf_report_summary_count(const pf_report* report);
PF_API const char* pf_report_summary_line(const pf_report* report, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* PETFABRIC_PETFABRIC_H_ */
