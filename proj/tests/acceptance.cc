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

// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails. Expected values come from oracles written
// here, independent of the library code under test: closed forms, standard
// library samplers, long-double arithmetic and tabulated critical values.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
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
#include "core/experiments.h"
#include "core/random.h"
#include "core/scenario.h"
#include "core/stats.h"

namespace pf = petfabric;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

pf::JobConfig LoadConfig(const std::string& name) {
  return pf::ParseConfig(ReadFile(fs::path(PETFABRIC_CONFIGS) / name));
}

// Upper 1% points of the chi-square distribution (standard tables).
constexpr double kChi2Crit100 = 135.8067;
// Kolmogorov c(0.01) for the two-sample asymptotic critical value.
constexpr double kKsC01 = 1.62762;

double OracleLaplace(double b, std::mt19937_64& gen) {
  std::exponential_distribution<double> exp(1.0 / b);
  return exp(gen) - exp(gen);
}

// 1. Encode/decode round trip, including a negative-spanning domain.
Outcome CodecRoundTrip() {
  struct Domain {
    double lo, hi;
    std::int64_t k;
  };
  const Domain domains[] = {{50, 120, 1}, {-10, 20, 10}, {-1, 1, 100}};
  std::mt19937_64 gen(101);
  std::uint64_t bad = 0;
  std::uint64_t total = 0;
  for (const Domain& d : domains) {
    const pf::EncodingParams p = pf::DeriveParams(d.lo, d.hi, d.k);
    std::uniform_real_distribution<double> u(d.lo, d.hi);
    const long double k = static_cast<long double>(d.k);
    const long double off = std::fabs(std::floor(static_cast<long double>(d.lo) * k));
    for (int i = 0; i < 100000; ++i) {
      const double x = u(gen);
      ++total;
      const pf::EncodedValue y = pf::Encode(x, p);
      // The 64-bit mantissa holds x * k exactly for these k.
      const long double want = off + std::floor(static_cast<long double>(x) * k);
      const double err = x - pf::Decode(y, p);
      if (static_cast<long double>(y) != want || !(err >= 0.0) ||
          !(err < 1.0 / static_cast<double>(d.k))) {
        ++bad;
      }
    }
  }
  return {bad == 0, Fmt("%llu/%llu values in 3 domains round-trip into "
                        "(x - 1/k, x]",
                        static_cast<unsigned long long>(total - bad),
                        static_cast<unsigned long long>(total))};
}

// 2. Shared average within 1/k of the truth.
Outcome SharedAverageBound() {
  std::uint64_t bad = 0;
  double worst[2] = {0, 0};
  int ki = 0;
  for (std::int64_t k : {1, 100}) {
    const pf::EncodingParams p = pf::DeriveParams(50, 120, k);
    const pf::FieldParams fp = pf::ChooseModulus(500, p.q);
    for (int inst = 0; inst < 1000; ++inst) {
      std::mt19937_64 gen(static_cast<std::uint64_t>(k) * 100000 + inst);
      std::uniform_real_distribution<double> u(50, 120);
      pf::Rng rng(gen());
      std::vector<pf::ShareBundle> bundles;
      long double truth = 0;
      for (int i = 0; i < 500; ++i) {
        const double x = u(gen);
        truth += x;
        bundles.push_back(pf::Split("s" + std::to_string(i), pf::Encode(x, p),
                                    3, fp, rng));
      }
      const double avg = pf::ReconstructAverage(bundles, fp, p);
      const double err = std::fabs(avg - static_cast<double>(truth / 500));
      worst[ki] = std::max(worst[ki], err);
      if (!(err < 1.0 / static_cast<double>(k))) ++bad;
    }
    ++ki;
  }
  return {bad == 0,
          Fmt("2000 instances, n=500 m=3; worst error %.4f (k=1), %.6f "
              "(k=100)",
              worst[0], worst[1])};
}

double Chi2Uniform(const std::vector<std::uint64_t>& h) {
  double total = 0;
  for (auto c : h) total += static_cast<double>(c);
  const double e = total / static_cast<double>(h.size());
  double s = 0;
  for (auto c : h) s += (static_cast<double>(c) - e) * (static_cast<double>(c) - e) / e;
  return s;
}

double Chi2TwoSample(const std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>& b) {
  double na = 0, nb = 0;
  for (auto c : a) na += static_cast<double>(c);
  for (auto c : b) nb += static_cast<double>(c);
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double col = static_cast<double>(a[i] + b[i]);
    if (col == 0) continue;
    const double ea = col * na / (na + nb);
    const double eb = col * nb / (na + nb);
    s += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
  }
  return s;
}

// 3. Proper subsets of channels leak nothing.
Outcome PartialCoverageUniform() {
  const pf::FieldParams fp = pf::FieldParams::Create(101, 1, 100);
  const std::vector<std::vector<std::uint32_t>> pairs = {{1, 2}, {1, 3}, {2, 3}};
  bool ok = true;
  std::string detail;
  std::uint64_t stream = 0;
  for (const auto& pair : pairs) {
    const pf::CoverageSet c(pair);
    std::vector<std::vector<std::uint64_t>> hists;
    for (pf::EncodedValue secret : {17, 42}) {
      pf::Rng rng(pf::DeriveSeed(303, stream++));
      const std::vector<pf::EncodedValue> secrets = {secret};
      hists.push_back(
          pf::PartialSumHistogram(c, secrets, 3, fp, 100000, rng));
      const double chi = Chi2Uniform(hists.back());
      const pf::TestResult lib = pf::ChiSquareUniform(hists.back());
      ok &= chi < kChi2Crit100 && lib.p_value > 0.01 &&
            std::fabs(chi - lib.statistic) < 1e-6;
    }
    bool nonempty = true;
    for (std::size_t i = 0; i < 101; ++i) nonempty &= hists[0][i] + hists[1][i] > 0;
    const double two = Chi2TwoSample(hists[0], hists[1]);
    const pf::TestResult lib2 = pf::ChiSquareTwoSample(hists[0], hists[1]);
    ok &= nonempty && two < kChi2Crit100 && lib2.p_value > 0.01;
    detail += Fmt("%s{%u,%u} two-sample p=%.3f", detail.empty() ? "" : "; ",
                  pair[0], pair[1], lib2.p_value);
  }
  return {ok, "Q=101, 1e5 sharings of 17 and 42: " + detail};
}

// 4. Guess rate of the threshold adversary versus the closed form.
Outcome GuessRateGrid() {
  const double eps_grid[] = {0.01, 0.1, 0.3, 0.5, 1, 2, 5};
  const double ratios[] = {0.1, 0.5, 1.0};
  const std::int64_t sens = 170;
  double worst = 0;
  std::uint64_t point = 0;
  for (double eps : eps_grid) {
    for (double ratio : ratios) {
      pf::HypothesisTest h;
      h.s = 0;
      h.t = std::llround(ratio * sens);
      h.budget = {eps, sens};
      pf::Rng rng(pf::DeriveSeed(404, point++));
      const pf::GuessRateResult r = pf::EmpiricalGuessRate(h, 100000, rng);
      const double analytic =
          1.0 - 0.5 * std::exp(-eps * static_cast<double>(h.t - h.s) /
                               (2.0 * static_cast<double>(sens)));
      worst = std::max(worst, std::fabs(r.empirical - analytic));
    }
  }
  return {worst <= 0.01,
          Fmt("21 points at 1e5 trials; max |empirical - analytic| = %.4f",
              worst)};
}

// 5. Laplace moments and global-noise error magnitude.
Outcome DpMoments() {
  pf::Rng rng(505);
  const int n = 1000000;
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = pf::SampleLaplace(2.0, rng);
    s += x;
    s2 += x * x;
  }
  const double mean = s / n;
  const double var = s2 / n - mean * mean;
  const bool var_ok = std::fabs(var - 8.0) <= 0.02 * 8.0;

  // Global noise on a 500-record sum, sensitivity 170, eps 1: mean |error|
  // is the Laplace scale.
  const pf::EncodingParams p = pf::DeriveParams(50, 120, 1);
  std::mt19937_64 gen(506);
  std::uniform_real_distribution<double> u(50, 120);
  std::vector<pf::EncodedValue> xs;
  std::int64_t exact = 0;
  for (int i = 0; i < 500; ++i) {
    xs.push_back(pf::Encode(u(gen), p));
    exact += xs.back();
  }
  const double b = 170.0;
  double mae = 0;
  for (int r = 0; r < 10000; ++r) {
    mae += std::fabs(
        pf::GdpAggregate(xs, {1.0, 170}, pf::Aggregator::kSum, rng).value -
        static_cast<double>(exact));
  }
  mae /= 10000;
  const bool mae_ok = std::fabs(mae - b) <= 0.05 * b;
  return {var_ok && mae_ok,
          Fmt("Laplace(2) variance %.4f vs 8; global-noise mean |err| %.2f "
              "vs b=%.0f",
              var, mae, b)};
}

// 6. Local-noise weight-sum sweep.
Outcome WeightSumSweep() {
  const pf::JobConfig cfg = LoadConfig("weight_sum.json");
  const pf::WeightSumSpec& spec = cfg.weight_sum;
  const pf::UtilityReport r = pf::WeightSumExperiment(spec, 1);
  // Oracle: quantization bias of this dataset plus a sum of rounded Laplace
  // draws, 20000 repetitions per point.
  long double truth = 0;
  std::int64_t encoded = 0;
  for (double x : r.dataset) {
    truth += x;
    encoded += static_cast<std::int64_t>(std::floor(x)) + 50;  // k = 1
  }
  const double bias =
      static_cast<double>(encoded - 500 * 50) - static_cast<double>(truth);
  bool ok = spec.model == pf::DpModel::kLdp && spec.k == 1 && spec.x_lo == 50;
  std::string detail;
  double worst = 0;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (i > 0) ok &= r.rows[i].median_abs_err < r.rows[i - 1].median_abs_err;
    std::mt19937_64 gen(pf::DeriveSeed(606, i));
    const double b = 170.0 / spec.eps_grid[i];
    std::vector<double> errs(20000);
    for (double& e : errs) {
      double total = 0;
      for (int j = 0; j < 500; ++j) total += std::round(OracleLaplace(b, gen));
      e = std::fabs(total + bias);
    }
    std::nth_element(errs.begin(), errs.begin() + errs.size() / 2, errs.end());
    const double oracle = errs[errs.size() / 2];
    const double rel = std::fabs(r.rows[i].median_abs_err - oracle) / oracle;
    worst = std::max(worst, rel);
    ok &= rel <= 0.10;
  }
  detail = Fmt("%zu eps points, medians strictly decreasing, worst deviation "
               "from oracle %.1f%%",
               r.rows.size(), 100 * worst);
  return {ok, detail};
}

// 7. Five-relay chain.
Outcome RelayChain() {
  const pf::JobConfig cfg = LoadConfig("relay_chain.json");
  const auto records = pf::RunScenario(cfg.scenario);
  bool ok = cfg.scenario.latency.per_hop_mean_ms == 3.88 && !records.empty();
  double worst = 0;
  for (const auto& r : records) {
    ok &= r.hop_count == 12;
    worst = std::max(worst, std::fabs(r.end_to_end_ms - 46.56));
  }
  ok &= worst <= 0.02;
  return {ok, Fmt("%zu runs, 12 hops each, max |e2e - 46.56 ms| = %.4f",
                  records.size(), worst)};
}

// 8. Latency ordering across PET placements.
Outcome LatencyOrdering() {
  const pf::JobConfig cfg = LoadConfig("bench_suite.json");
  std::map<std::string, double> mean;
  for (const pf::ScenarioSpec& s : cfg.bench.scenarios) {
    double total = 0;
    const auto records = pf::RunScenario(s);
    for (const auto& r : records) total += r.end_to_end_ms;
    mean[s.name] = total / static_cast<double>(records.size());
  }
  const double base = mean.at("baseline"), ldp = mean.at("ldp-on-device"),
               god = mean.at("gdp-on-device"), gv = mean.at("gdp-virtualized"),
               aod = mean.at("ass-on-device"), av = mean.at("ass-virtualized");
  const bool ok = base < ldp && ldp <= god && god < gv && gv < aod && aod < av;
  return {ok, Fmt("baseline %.3f < ldp %.3f <= gdp-od %.3f < gdp-virt %.3f "
                  "< ass-od %.3f < ass-virt %.3f ms",
                  base, ldp, god, gv, aod, av)};
}

double KsStatistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / a.size() -
                              static_cast<double>(j) / b.size()));
  }
  return d;
}

// 9. Background load of 400 msg/s leaves latency unchanged.
Outcome LoadNeutrality() {
  const pf::JobConfig cfg = LoadConfig("bench_suite.json");
  const pf::ScenarioSpec* base = nullptr;
  for (const auto& s : cfg.bench.scenarios) {
    if (s.name == cfg.bench.load_test->scenario) base = &s;
  }
  if (base == nullptr) return {false, "load scenario missing"};
  const pf::LoadComparison c = pf::LoadTest(*base, 400.0);
  pf::ScenarioSpec quiet = *base;
  std::vector<double> a, b;
  for (const auto& r : pf::RunScenario(quiet)) a.push_back(r.end_to_end_ms);
  for (const auto& r : c.loaded_records) b.push_back(r.end_to_end_ms);
  const double d = KsStatistic(a, b);
  const double n = static_cast<double>(a.size()), m = static_cast<double>(b.size());
  const double crit = kKsC01 * std::sqrt((n + m) / (n * m));
  // 400 msg/s over a window per repetition.
  const double expected_filler =
      400.0 * base->load_window_ms / 1000.0 * static_cast<double>(base->repetitions);
  const bool filler_ok =
      std::fabs(static_cast<double>(c.background_delivered) - expected_filler) <=
      0.01 * expected_filler;
  const bool ok = d < crit && c.ks.p_value > 0.01 && filler_ok &&
                  std::fabs(d - c.ks.statistic) < 1e-12;
  return {ok, Fmt("%zu reps, KS D=%.4f (1%% critical %.4f), p=%.3f, %llu "
                  "filler messages",
                  a.size(), d, crit, c.ks.p_value,
                  static_cast<unsigned long long>(c.background_delivered))};
}

// 10. A dropped share is reported by sensor and channel; no loss means exact
// reconstruction. Driven on the broker directly, plus the scenario path.
Outcome ShareLoss() {
  const std::uint32_t m = 3;
  const int sensors = 5;
  const pf::FieldParams fp = pf::ChooseModulus(sensors, 170);
  std::mt19937_64 pick(1010);
  int named = 0, exact = 0;
  for (int run = 0; run < 200; ++run) {
    const bool lose = run < 100;
    pf::BrokerOptions opts;
    opts.seed = static_cast<std::uint64_t>(run);
    pf::Broker broker(opts);
    broker.RegisterClient("server");
    broker.Allow("server", "cabin/ass/#", pf::Permission::kSubscribe);
    broker.Subscribe("server", "cabin/ass/#");
    pf::Rng rng(pf::DeriveSeed(1011, run));
    std::int64_t truth = 0;
    const std::string lost_sensor = "sensor-" + std::to_string(pick() % sensors);
    const std::uint32_t lost_channel = static_cast<std::uint32_t>(pick() % m) + 1;
    for (int s = 0; s < sensors; ++s) {
      const std::string id = "sensor-" + std::to_string(s);
      broker.RegisterClient(id);
      broker.Allow(id, "cabin/ass/+/" + id, pf::Permission::kPublish);
      const pf::EncodedValue secret =
          static_cast<pf::EncodedValue>(rng.UniformBelow(171));
      truth += secret;
      const pf::ShareBundle b = pf::Split(id, secret, m, fp, rng);
      for (std::uint32_t j = 1; j <= m; ++j) {
        pf::Envelope env;
        env.topic = "cabin/ass/b" + std::to_string(j) + "/" + id;
        env.sensor_id = id;
        env.scheme = pf::Scheme::kAssShare;
        env.value = static_cast<std::int64_t>(*b.shares[j - 1]);
        env.share_index = j;
        if (lose && id == lost_sensor && j == lost_channel) {
          broker.InjectLoss(id, env.topic);
        }
        broker.PublishEnvelope(id, env);
      }
    }
    broker.Run();
    // Server side: rebuild bundles from what arrived.
    std::map<std::string, pf::ShareBundle> got;
    for (int s = 0; s < sensors; ++s) {
      const std::string id = "sensor-" + std::to_string(s);
      got[id] = pf::ShareBundle{id, fp.modulus(), std::vector<std::optional<std::uint64_t>>(m)};
    }
    for (const pf::Delivery& d : broker.TakeInbox("server")) {
      const pf::Envelope e = pf::DecodePayload(d.payload);
      got[e.sensor_id].shares[*e.share_index - 1] =
          static_cast<std::uint64_t>(e.value);
    }
    std::vector<pf::ShareBundle> bundles;
    for (auto& [id, b] : got) bundles.push_back(b);
    try {
      const std::int64_t sum = pf::ReconstructSum(bundles, fp);
      if (!lose && sum == truth) ++exact;
    } catch (const pf::MissingShareError& e) {
      if (lose && e.missing().size() == 1 &&
          e.missing()[0].sensor_id == lost_sensor &&
          e.missing()[0].channel == lost_channel) {
        ++named;
      }
    }
  }
  // Scenario path: every repetition with injected loss fails with a named
  // share from the configured sensors.
  pf::ScenarioSpec s = LoadConfig("ass_on_device.json").scenario;
  s.inject_share_loss = true;
  int scenario_named = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    try {
      pf::RunRepetition(s, rep);
    } catch (const pf::MissingShareError& e) {
      const auto& miss = e.missing();
      if (miss.size() == 1 && miss[0].channel >= 1 && miss[0].channel <= s.pet.m &&
          miss[0].sensor_id.rfind("sensor-", 0) == 0 &&
          std::stoul(miss[0].sensor_id.substr(7)) < s.sensors) {
        ++scenario_named;
      }
    }
  }
  return {named == 100 && exact == 100 && scenario_named == 100,
          Fmt("broker: %d/100 losses named, %d/100 exact sums; scenario: "
              "%d/100 losses named",
              named, exact, scenario_named)};
}

// 11. Frozen CBOR fixtures from an independent encoder.
Outcome CborFixtures() {
  std::ifstream in(fs::path(PETFABRIC_TESTDATA) / "cbor_fixtures.txt");
  std::string line;
  int good = 0, good_ok = 0, bad = 0, bad_ok = 0;
  std::set<pf::Scheme> schemes;
  bool saw_missing = false, saw_scheme = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string status, name, hex;
    fields >> status >> name >> hex;
    if (status == "ok") {
      ++good;
      try {
        const pf::Envelope e = pf::DecodePayload(pf::FromHex(hex));
        schemes.insert(e.scheme);
        if (pf::ToHex(pf::EncodePayload(e)) == hex) ++good_ok;
      } catch (const pf::Error&) {
      }
    } else {
      ++bad;
      saw_missing |= name.find("missing") != std::string::npos;
      saw_scheme |= name == "bad_scheme";
      try {
        pf::DecodePayload(pf::FromHex(hex));
      } catch (const pf::Error& e) {
        if (e.code() == pf::ErrorCode::kDecode) ++bad_ok;
      }
    }
  }
  const bool ok = good > 0 && good == good_ok && bad == bad_ok &&
                  schemes.size() == 5 && saw_missing && saw_scheme;
  return {ok, Fmt("%d/%d golden fixtures over %zu schemes round-trip; "
                  "%d/%d malformed rejected",
                  good_ok, good, schemes.size(), bad_ok, bad)};
}

// 12. Every subcommand is byte-for-byte reproducible under a fixed seed.
Outcome CliDeterminism() {
  const fs::path work = fs::temp_directory_path() /
                        ("petfabric-acceptance-" + std::to_string(getpid()));
  fs::remove_all(work);
  fs::create_directories(work);
  const std::string cli = PETFABRIC_CLI;
  const std::string configs = PETFABRIC_CONFIGS;
  struct Job {
    const char* sub;
    const char* config;
  };
  const Job jobs[] = {{"run-scenario", "baseline.json"},
                      {"run-scenario", "ass_on_device.json"},
                      {"sweep-epsilon", "weight_sum.json"},
                      {"sweep-epsilon", "profile.json"},
                      {"adversary-sim", "adversary.json"},
                      {"ass-demo", "ass_demo.json"},
                      {"bench-suite", "bench_suite.json"},
                      {"validate-config", "bench_suite.json"}};
  int same = 0;
  int files = 0;
  int n = 0;
  for (const Job& job : jobs) {
    std::vector<std::map<std::string, std::string>> runs;
    for (int attempt = 0; attempt < 2; ++attempt) {
      const fs::path out = work / (std::to_string(n) + "_" + std::to_string(attempt));
      fs::create_directories(out);
      std::string cmd = "'" + cli + "' " + job.sub + " --config '" + configs +
                        "/" + job.config + "' --seed 12345";
      if (std::string(job.sub) != "validate-config") {
        cmd += " --out '" + out.string() + "'";
      }
      cmd += " > '" + (out / "stdout.txt").string() + "' 2>&1";
      if (std::system(cmd.c_str()) != 0) return {false, std::string("failed: ") + cmd};
      std::map<std::string, std::string> contents;
      for (const auto& entry : fs::directory_iterator(out)) {
        const std::string ext = entry.path().extension().string();
        if (ext == ".csv" || entry.path().filename() == "stdout.txt") {
          contents[entry.path().filename().string()] = ReadFile(entry.path());
        }
      }
      runs.push_back(std::move(contents));
    }
    ++n;
    files += static_cast<int>(runs[0].size());
    if (runs[0] == runs[1] && !runs[0].empty()) ++same;
  }
  fs::remove_all(work);
  const int total = static_cast<int>(std::size(jobs));
  return {same == total,
          Fmt("%d/%d invocations over 6 subcommands identical across two "
              "runs (%d files compared)",
              same, total, files)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"codec-round-trip", CodecRoundTrip},
      {"shared-average-bound", SharedAverageBound},
      {"partial-coverage-uniform", PartialCoverageUniform},
      {"guess-rate-grid", GuessRateGrid},
      {"dp-moments", DpMoments},
      {"weight-sum-sweep", WeightSumSweep},
      {"relay-chain-latency", RelayChain},
      {"pet-latency-ordering", LatencyOrdering},
      {"load-neutrality", LoadNeutrality},
      {"missing-share-naming", ShareLoss},
      {"cbor-fixtures", CborFixtures},
      {"cli-determinism", CliDeterminism},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2d %-26s %s\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
