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

/* Compiles the public header as C and drives a few calls through it. */

#include <stdio.h>
#include <string.h>

#include "petfabric/petfabric.h"

#define CHECK(cond)                                        \
  do {                                                     \
    if (!(cond)) {                                         \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                            \
    }                                                      \
  } while (0)

int main(void) {
  pf_encoding p;
  int64_t y = 0;
  double x = 0.0;
  pf_rng* rng = NULL;
  pf_field* field = NULL;
  pf_shares* shares = NULL;
  int64_t sum = 0;
  const char* json =
      "{\"kind\": \"ass-demo\", \"n\": 20, \"k_values\": [1], "
      "\"instances\": 3, \"seed\": 1}";
  pf_config* cfg = NULL;
  pf_report* rep = NULL;

  CHECK(pf_encoding_derive(-10, 20, 1, &p) == PF_OK);
  CHECK(p.q == 30);
  CHECK(pf_encode(&p, -10.0, &y) == PF_OK && y == 0);
  CHECK(pf_decode(&p, 0, &x) == PF_OK && x == -10.0);

  CHECK(pf_rng_create(1, &rng) == PF_OK);
  CHECK(pf_field_choose(10, 10, &field) == PF_OK);
  CHECK(pf_field_modulus(field) == 101);
  CHECK(pf_shares_create(&shares) == PF_OK);
  CHECK(pf_shares_split(shares, field, rng, "a", 7, 3) == PF_OK);
  CHECK(pf_shares_split(shares, field, rng, "b", 9, 3) == PF_OK);
  CHECK(pf_shares_reconstruct_sum(shares, field, &sum) == PF_OK && sum == 16);
  pf_shares_destroy(shares);
  pf_field_destroy(field);
  pf_rng_destroy(rng);

  CHECK(pf_config_parse(json, strlen(json), 0, 0, &cfg) == PF_OK);
  CHECK(strcmp(pf_config_kind(cfg), "ass-demo") == 0);
  CHECK(pf_run(cfg, 1, &rep) == PF_OK);
  CHECK(pf_report_table_count(rep) == 1);
  CHECK(pf_report_table_rows(rep, 0) == 3);
  pf_report_destroy(rep);
  pf_config_destroy(cfg);

  puts("capi smoke ok");
  return 0;
}
