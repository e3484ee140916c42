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

#include "core/config.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "core/ass.h"
#include "core/error.h"
#include "json.hpp"

namespace petfabric {

namespace {

using Json = nlohmann::json;

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// Typed access to one JSON object. Every key read is marked; Finish() rejects
// whatever was never read.
class Obj {
 public:
  Obj(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) {
      throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }
  }

  const Json* Get(const std::string& key) {
    used_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  std::string Path(const std::string& key) const { return Join(path_, key); }

  double Number(const std::string& key, double def) {
    const Json* v = Get(key);
    return v ? AsNumber(*v, Path(key)) : def;
  }

  std::optional<double> OptNumber(const std::string& key) {
    const Json* v = Get(key);
    if (!v) return std::nullopt;
    return AsNumber(*v, Path(key));
  }

  std::uint64_t Unsigned(const std::string& key, std::uint64_t def) {
    const Json* v = Get(key);
    return v ? AsUnsigned(*v, Path(key)) : def;
  }

  std::optional<std::uint64_t> OptUnsigned(const std::string& key) {
    const Json* v = Get(key);
    if (!v) return std::nullopt;
    return AsUnsigned(*v, Path(key));
  }

  std::uint32_t Unsigned32(const std::string& key, std::uint32_t def) {
    const std::uint64_t v = Unsigned(key, def);
    if (v > std::numeric_limits<std::uint32_t>::max()) {
      throw ConfigError(Path(key), "too large");
    }
    return static_cast<std::uint32_t>(v);
  }

  std::int64_t Integer(const std::string& key, std::int64_t def) {
    const Json* v = Get(key);
    return v ? AsInteger(*v, Path(key)) : def;
  }

  std::optional<std::int64_t> OptInteger(const std::string& key) {
    const Json* v = Get(key);
    if (!v) return std::nullopt;
    return AsInteger(*v, Path(key));
  }

  bool Bool(const std::string& key, bool def) {
    const Json* v = Get(key);
    if (!v) return def;
    if (!v->is_boolean()) throw ConfigError(Path(key), "expected true or false");
    return v->get<bool>();
  }

  std::string String(const std::string& key, const std::string& def) {
    const Json* v = Get(key);
    if (!v) return def;
    if (!v->is_string()) throw ConfigError(Path(key), "expected a string");
    return v->get<std::string>();
  }

  std::vector<double> Numbers(const std::string& key,
                              std::vector<double> def) {
    const Json* v = Get(key);
    if (!v) return def;
    if (!v->is_array()) throw ConfigError(Path(key), "expected an array");
    std::vector<double> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      out.push_back(AsNumber((*v)[i], Index(Path(key), i)));
    }
    return out;
  }

  std::vector<std::int64_t> Integers(const std::string& key,
                                     std::vector<std::int64_t> def) {
    const Json* v = Get(key);
    if (!v) return def;
    if (!v->is_array()) throw ConfigError(Path(key), "expected an array");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      out.push_back(AsInteger((*v)[i], Index(Path(key), i)));
    }
    return out;
  }

  // Child object, or an empty one when absent.
  Obj Child(const std::string& key) {
    const Json* v = Get(key);
    return v ? Obj(*v, Path(key)) : Obj(Empty(), Path(key));
  }

  bool Has(const std::string& key) const { return j_.contains(key); }

  const std::string& path() const { return path_; }

  void Finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!used_.contains(it.key())) {
        throw ConfigError(Path(it.key()), "unknown key");
      }
    }
  }

  static double AsNumber(const Json& v, const std::string& path) {
    if (!v.is_number()) throw ConfigError(path, "expected a number");
    return v.get<double>();
  }

  static std::uint64_t AsUnsigned(const Json& v, const std::string& path) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
      throw ConfigError(path, "must not be negative");
    }
    throw ConfigError(path, "expected a non-negative integer");
  }

  static std::int64_t AsInteger(const Json& v, const std::string& path) {
    if (v.is_number_unsigned()) {
      const auto u = v.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(
                  std::numeric_limits<std::int64_t>::max())) {
        throw ConfigError(path, "too large");
      }
      return static_cast<std::int64_t>(u);
    }
    if (v.is_number_integer()) return v.get<std::int64_t>();
    throw ConfigError(path, "expected an integer");
  }

 private:
  static const Json& Empty() {
    static const Json empty = Json::object();
    return empty;
  }

  const Json& j_;
  std::string path_;
  std::set<std::string> used_;
};

EncodingParams ParseEncoding(Obj o, double x_lo, double x_hi, std::int64_t k) {
  k = o.Integer("k", k);
  x_lo = o.Number("x_lo", x_lo);
  x_hi = o.Number("x_hi", x_hi);
  o.Finish();
  try {
    return DeriveParams(x_lo, x_hi, k);
  } catch (const Error& e) {
    throw ConfigError(o.path(), e.what());
  }
}

std::vector<double> ParseEpsGrid(Obj& o, std::vector<double> def) {
  return o.Numbers("eps_grid", std::move(def));
}

void CheckName(const std::string& name, const std::string& path) {
  if (name.empty()) throw ConfigError(path, "must not be empty");
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    if (!ok) {
      throw ConfigError(path, "may only use letters, digits, '-', '_' and '.'");
    }
  }
}

LatencyModel ParseLatency(Obj o) {
  LatencyModel model;
  const std::string preset = o.String("preset", "default");
  auto named = LatencyPreset(preset);
  if (!named) {
    std::string names;
    for (const auto& n : LatencyPresetNames()) names += " " + n;
    throw ConfigError(o.Path("preset"),
                      "unknown preset '" + preset + "'; known:" + names);
  }
  model = *named;
  model.per_hop_mean_ms = o.Number("per_hop_mean_ms", model.per_hop_mean_ms);
  model.per_hop_jitter_std_ms =
      o.Number("jitter_std_ms", model.per_hop_jitter_std_ms);
  if (o.Has("distribution")) {
    const std::string d = o.String("distribution", "");
    if (d == "constant") {
      model.distribution = LatencyDistribution::kConstant;
    } else if (d == "gaussian") {
      model.distribution = LatencyDistribution::kTruncatedGaussian;
    } else {
      throw ConfigError(o.Path("distribution"),
                        "expected 'constant' or 'gaussian'");
    }
  }
  o.Finish();
  return model;
}

ScenarioSpec ParseScenario(Obj& o, std::uint64_t seed) {
  ScenarioSpec spec;
  spec.seed = seed;
  spec.name = o.String("name", spec.name);
  CheckName(spec.name, o.Path("name"));

  {
    Obj t = o.Child("topology");
    const std::string type = t.String("type", "on-device");
    if (type == "on-device") {
      spec.topology = Topology::kOnDevice;
    } else if (type == "virtualized") {
      spec.topology = Topology::kVirtualized;
      spec.virtual_nodes = t.Unsigned32("virtual_nodes", 1);
    } else if (type == "relay-chain") {
      spec.topology = Topology::kRelayChain;
      if (!t.Has("depth")) {
        throw ConfigError(t.Path("depth"), "relay-chain needs a depth");
      }
      spec.relay_depth = t.Unsigned32("depth", 0);
    } else {
      throw ConfigError(t.Path("type"),
                        "expected on-device, virtualized or relay-chain");
    }
    t.Finish();
  }

  {
    Obj p = o.Child("pet");
    const std::string type = p.String("type", "none");
    if (type == "none") {
      spec.pet.kind = PetKind::kNone;
    } else if (type == "ldp") {
      spec.pet.kind = PetKind::kLdp;
    } else if (type == "gdp") {
      spec.pet.kind = PetKind::kGdp;
    } else if (type == "ass") {
      spec.pet.kind = PetKind::kAss;
    } else if (type == "krr") {
      spec.pet.kind = PetKind::kKrr;
    } else {
      throw ConfigError(p.Path("type"), "expected none, ldp, gdp, ass or krr");
    }
    const bool noisy = spec.pet.kind == PetKind::kLdp ||
                       spec.pet.kind == PetKind::kGdp ||
                       spec.pet.kind == PetKind::kKrr;
    if (noisy) {
      if (!p.Has("epsilon")) {
        throw ConfigError(p.Path("epsilon"), "required for pet type " + type);
      }
      spec.pet.epsilon = p.Number("epsilon", 0.0);
      spec.pet.sensitivity = p.OptInteger("sensitivity");
    }
    if (spec.pet.kind == PetKind::kGdp) {
      const std::string agg = p.String("aggregator", "sum");
      if (agg == "sum") {
        spec.pet.aggregator = Aggregator::kSum;
      } else if (agg == "mean") {
        spec.pet.aggregator = Aggregator::kMean;
      } else {
        throw ConfigError(p.Path("aggregator"), "expected 'sum' or 'mean'");
      }
    }
    if (spec.pet.kind == PetKind::kAss) {
      spec.pet.m = p.Unsigned32("m", spec.pet.m);
      spec.pet.modulus = p.OptUnsigned("modulus");
      spec.pet.parallel_shares = p.Bool("parallel_shares", false);
    }
    p.Finish();
  }

  spec.encoding = ParseEncoding(o.Child("encoding"), 50.0, 120.0, 1);

  {
    Obj s = o.Child("sensors");
    spec.sensors = s.Unsigned32("count", 1);
    Obj g = s.Child("generator");
    const std::string type = g.String("type", "uniform");
    if (type == "uniform") {
      spec.generator.kind = DataGenerator::Kind::kUniform;
      spec.generator.lo = g.Number("lo", spec.encoding.x_lo);
      spec.generator.hi = g.Number("hi", spec.encoding.x_hi);
    } else if (type == "constant") {
      spec.generator.kind = DataGenerator::Kind::kConstant;
      if (!g.Has("value")) {
        throw ConfigError(g.Path("value"), "required for a constant generator");
      }
      spec.generator.value = g.Number("value", 0.0);
    } else {
      throw ConfigError(g.Path("type"), "expected 'uniform' or 'constant'");
    }
    g.Finish();
    s.Finish();
  }

  spec.latency = ParseLatency(o.Child("latency"));
  spec.compute_ms =
      o.Number("compute_ms", DefaultComputeMs(spec.pet.kind, spec.topology));
  spec.fixed_overhead_ms = o.Number("fixed_overhead_ms", 0.0);
  spec.broker_service_ms = o.Number("broker_service_ms", 0.0);
  spec.repetitions = o.Unsigned("repetitions", spec.repetitions);
  {
    Obj l = o.Child("load");
    spec.load_rate = l.Number("rate", 0.0);
    spec.load_window_ms = l.Number("window_ms", spec.load_window_ms);
    l.Finish();
  }
  spec.inject_share_loss = o.Bool("inject_share_loss", false);
  return spec;
}

Json Merge(const Json& defaults, const Json& entry) {
  Json out = defaults;
  for (auto it = entry.begin(); it != entry.end(); ++it) {
    if (it->is_object() && out.contains(it.key()) &&
        out[it.key()].is_object()) {
      out[it.key()] = Merge(out[it.key()], *it);
    } else {
      out[it.key()] = *it;
    }
  }
  return out;
}

WeightSumSpec ParseWeightSum(Obj& o, std::uint64_t seed) {
  WeightSumSpec spec;
  spec.seed = seed;
  spec.n = o.Unsigned32("n", spec.n);
  const EncodingParams p =
      ParseEncoding(o.Child("encoding"), spec.x_lo, spec.x_hi, spec.k);
  spec.x_lo = p.x_lo;
  spec.x_hi = p.x_hi;
  spec.k = p.k;
  const std::string model = o.String("model", "ldp");
  if (model == "ldp") {
    spec.model = DpModel::kLdp;
  } else if (model == "gdp") {
    spec.model = DpModel::kGdp;
  } else {
    throw ConfigError(o.Path("model"), "expected 'ldp' or 'gdp'");
  }
  spec.eps_grid = ParseEpsGrid(o, spec.eps_grid);
  spec.reps = o.Unsigned("reps", spec.reps);
  spec.sensitivity = o.OptInteger("sensitivity");
  return spec;
}

ProfileSpec ParseProfile(Obj& o, std::uint64_t seed) {
  ProfileSpec spec;
  spec.seed = seed;
  {
    Obj pr = o.Child("profile");
    const std::string type = pr.String("type", "brew");
    if (type == "brew") {
      spec.profile = BrewProfile(pr.Unsigned("samples", 300));
    } else if (type == "values") {
      if (!pr.Has("values")) {
        throw ConfigError(pr.Path("values"), "required for type 'values'");
      }
      spec.profile = pr.Numbers("values", {});
    } else {
      throw ConfigError(pr.Path("type"), "expected 'brew' or 'values'");
    }
    pr.Finish();
  }
  const EncodingParams p =
      ParseEncoding(o.Child("encoding"), spec.x_lo, spec.x_hi, spec.k);
  spec.x_lo = p.x_lo;
  spec.x_hi = p.x_hi;
  spec.k = p.k;
  spec.eps_grid = ParseEpsGrid(o, spec.eps_grid);
  spec.reps = o.Unsigned("reps", spec.reps);
  spec.sensitivity = o.OptInteger("sensitivity");
  return spec;
}

AdversarySpec ParseAdversary(Obj& o, std::uint64_t seed) {
  AdversarySpec spec;
  spec.seed = seed;
  spec.eps_grid = ParseEpsGrid(o, spec.eps_grid);
  spec.gap_ratios = o.Numbers("gap_ratios", spec.gap_ratios);
  spec.trials = o.Unsigned("trials", spec.trials);
  spec.known_prefix_sum = o.Integer("known_prefix_sum", 0);
  spec.encoding = ParseEncoding(o.Child("encoding"), 50.0, 120.0, 1);
  spec.sensitivity = o.OptInteger("sensitivity");
  const std::string model = o.String("noise_model", "global");
  if (model == "global") {
    spec.noise_model = NoiseModel::kGlobal;
  } else if (model == "local") {
    spec.noise_model = NoiseModel::kLocal;
  } else {
    throw ConfigError(o.Path("noise_model"), "expected 'global' or 'local'");
  }

  if (const Json* ev = o.Get("eavesdropper")) {
    Obj e(*ev, o.Path("eavesdropper"));
    spec.eavesdrop_m = e.Unsigned32("m", spec.eavesdrop_m);
    spec.eavesdrop_modulus = e.Unsigned("modulus", spec.eavesdrop_modulus);
    spec.eavesdrop_secrets = e.Integers("secrets", spec.eavesdrop_secrets);
    spec.eavesdrop_trials = e.Unsigned("trials", spec.eavesdrop_trials);
    if (const Json* cov = e.Get("coverages")) {
      const std::string path = e.Path("coverages");
      if (cov->is_string()) {
        if (cov->get<std::string>() != "proper-subsets") {
          throw ConfigError(path, "expected 'proper-subsets' or a list");
        }
      } else if (cov->is_array()) {
        for (std::size_t i = 0; i < cov->size(); ++i) {
          const Json& c = (*cov)[i];
          if (!c.is_array()) {
            throw ConfigError(Index(path, i), "expected a list of channels");
          }
          std::vector<std::uint32_t> set;
          for (std::size_t j = 0; j < c.size(); ++j) {
            const auto ch = Obj::AsUnsigned(c[j], Index(Index(path, i), j));
            if (ch < 1 || ch > std::numeric_limits<std::uint32_t>::max()) {
              throw ConfigError(Index(Index(path, i), j),
                                "channels are numbered from 1");
            }
            set.push_back(static_cast<std::uint32_t>(ch));
          }
          spec.coverages.push_back(std::move(set));
        }
      } else {
        throw ConfigError(path, "expected 'proper-subsets' or a list");
      }
    }
    e.Finish();
  }
  return spec;
}

AssDemoSpec ParseAssDemo(Obj& o, std::uint64_t seed) {
  AssDemoSpec spec;
  spec.seed = seed;
  spec.n = o.Unsigned32("n", spec.n);
  const std::vector<double> domain = o.Numbers("domain", {spec.x_lo, spec.x_hi});
  if (domain.size() != 2) {
    throw ConfigError(o.Path("domain"), "expected [x_lo, x_hi]");
  }
  spec.x_lo = domain[0];
  spec.x_hi = domain[1];
  spec.k_values = o.Integers("k_values", spec.k_values);
  spec.m = o.Unsigned32("m", spec.m);
  spec.instances = o.Unsigned("instances", spec.instances);
  spec.modulus = o.OptUnsigned("modulus");
  return spec;
}

}  // namespace

const char* JobKindName(JobKind kind) {
  switch (kind) {
    case JobKind::kScenario:
      return "scenario";
    case JobKind::kWeightSum:
      return "weight-sum";
    case JobKind::kProfile:
      return "profile-obfuscation";
    case JobKind::kAdversary:
      return "adversary";
    case JobKind::kAssDemo:
      return "ass-demo";
    case JobKind::kBenchSuite:
      return "bench-suite";
  }
  return "unknown";
}

void AdversarySpec::Validate() const {
  if (eps_grid.empty()) throw ConfigError("eps_grid", "must not be empty");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(std::isfinite(eps_grid[i]) && eps_grid[i] > 0.0)) {
      throw ConfigError(Index("eps_grid", i), "must be a positive number");
    }
  }
  if (gap_ratios.empty()) throw ConfigError("gap_ratios", "must not be empty");
  const std::int64_t sens = sensitivity.value_or(encoding.q);
  if (sens <= 0) throw ConfigError("sensitivity", "must be positive");
  for (std::size_t i = 0; i < gap_ratios.size(); ++i) {
    const double r = gap_ratios[i];
    if (!(std::isfinite(r) && r > 0.0) ||
        std::llround(r * static_cast<double>(sens)) < 1) {
      throw ConfigError(Index("gap_ratios", i),
                        "must give a gap of at least one encoded unit");
    }
  }
  if (trials < 1) throw ConfigError("trials", "must be >= 1");

  if (eavesdrop_m == 0) return;
  if (eavesdrop_m < 2) throw ConfigError("eavesdropper.m", "must be >= 2");
  if (eavesdrop_secrets.empty()) {
    throw ConfigError("eavesdropper.secrets", "must not be empty");
  }
  std::int64_t q = 0;
  for (std::size_t i = 0; i < eavesdrop_secrets.size(); ++i) {
    if (eavesdrop_secrets[i] < 0) {
      throw ConfigError(Index("eavesdropper.secrets", i),
                        "must not be negative");
    }
    q = std::max(q, eavesdrop_secrets[i]);
  }
  if (eavesdrop_modulus > 65536) {
    throw ConfigError("eavesdropper.modulus",
                      "uniformity histograms need a modulus <= 65536");
  }
  try {
    FieldParams::Create(eavesdrop_modulus, eavesdrop_secrets.size(),
                        std::max<std::int64_t>(q, 1));
  } catch (const Error& e) {
    throw ConfigError("eavesdropper.modulus", e.what());
  }
  if (eavesdrop_trials < 1) {
    throw ConfigError("eavesdropper.trials", "must be >= 1");
  }
  for (std::size_t i = 0; i < coverages.size(); ++i) {
    for (std::uint32_t ch : coverages[i]) {
      if (ch < 1 || ch > eavesdrop_m) {
        throw ConfigError(Index("eavesdropper.coverages", i),
                          "channel " + std::to_string(ch) + " outside 1.." +
                              std::to_string(eavesdrop_m));
      }
    }
  }
}

void AssDemoSpec::Validate() const {
  if (n < 1) throw ConfigError("n", "must be >= 1");
  if (k_values.empty()) throw ConfigError("k_values", "must not be empty");
  if (m < 2) {
    throw ConfigError("m", "ass needs m >= 2 channels, got " + std::to_string(m));
  }
  if (instances < 1) throw ConfigError("instances", "must be >= 1");
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    try {
      const EncodingParams p = DeriveParams(x_lo, x_hi, k_values[i]);
      if (modulus) {
        FieldParams::Create(*modulus, n, p.q);
      } else {
        ChooseModulus(n, p.q);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(Index("k_values", i), e.what());
    }
  }
}

void BenchSuiteSpec::Validate() const {
  if (scenarios.empty()) throw ConfigError("scenarios", "must not be empty");
  std::set<std::string> names;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    try {
      scenarios[i].Validate();
    } catch (const ConfigError& e) {
      throw ConfigError(Join(Index("scenarios", i), e.field()),
                        std::string(e.what()).substr(e.field().size() + 2));
    }
    if (!names.insert(scenarios[i].name).second) {
      throw ConfigError(Index("scenarios", i) + ".name",
                        "duplicate scenario name '" + scenarios[i].name + "'");
    }
  }
  if (load_test) {
    if (!names.contains(load_test->scenario)) {
      throw ConfigError("load_test.scenario",
                        "no scenario named '" + load_test->scenario + "'");
    }
    if (load_test->rates.empty()) {
      throw ConfigError("load_test.rates", "must not be empty");
    }
    for (std::size_t i = 0; i < load_test->rates.size(); ++i) {
      const double r = load_test->rates[i];
      if (!(std::isfinite(r) && r >= 0.0)) {
        throw ConfigError(Index("load_test.rates", i),
                          "must be a non-negative number");
      }
    }
  }
}

JobConfig ParseConfig(std::string_view json_text,
                      std::optional<std::uint64_t> seed_override) {
  Json root;
  try {
    root = Json::parse(json_text.begin(), json_text.end());
  } catch (const Json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  Obj o(root, "");
  JobConfig cfg;
  if (!o.Has("kind")) throw ConfigError("kind", "required");
  const std::string kind = o.String("kind", "");
  cfg.seed = seed_override.value_or(o.Unsigned("seed", 0));
  if (seed_override) o.Get("seed");  // still accepted, just superseded

  if (kind == "scenario") {
    cfg.kind = JobKind::kScenario;
    cfg.scenario = ParseScenario(o, cfg.seed);
    o.Finish();
    cfg.scenario.Validate();
  } else if (kind == "weight-sum") {
    cfg.kind = JobKind::kWeightSum;
    cfg.weight_sum = ParseWeightSum(o, cfg.seed);
    o.Finish();
    cfg.weight_sum.Validate();
  } else if (kind == "profile-obfuscation") {
    cfg.kind = JobKind::kProfile;
    cfg.profile = ParseProfile(o, cfg.seed);
    o.Finish();
    cfg.profile.Validate();
  } else if (kind == "adversary") {
    cfg.kind = JobKind::kAdversary;
    cfg.adversary = ParseAdversary(o, cfg.seed);
    o.Finish();
    cfg.adversary.Validate();
  } else if (kind == "ass-demo") {
    cfg.kind = JobKind::kAssDemo;
    cfg.ass_demo = ParseAssDemo(o, cfg.seed);
    o.Finish();
    cfg.ass_demo.Validate();
  } else if (kind == "bench-suite") {
    cfg.kind = JobKind::kBenchSuite;
    cfg.bench.seed = cfg.seed;
    const Json* defaults = o.Get("defaults");
    if (defaults && !defaults->is_object()) {
      throw ConfigError("defaults", "expected an object");
    }
    const Json* list = o.Get("scenarios");
    if (!list || !list->is_array()) {
      throw ConfigError("scenarios", "expected a list of scenarios");
    }
    for (std::size_t i = 0; i < list->size(); ++i) {
      if (!(*list)[i].is_object()) {
        throw ConfigError(Index("scenarios", i), "expected an object");
      }
      const Json merged =
          defaults ? Merge(*defaults, (*list)[i]) : (*list)[i];
      Obj s(merged, Index("scenarios", i));
      cfg.bench.scenarios.push_back(ParseScenario(s, cfg.seed));
      s.Finish();
    }
    if (const Json* lt = o.Get("load_test")) {
      Obj l(*lt, "load_test");
      LoadTestSpec spec;
      if (!l.Has("scenario")) throw ConfigError("load_test.scenario", "required");
      spec.scenario = l.String("scenario", "");
      spec.rates = l.Numbers("rates", spec.rates);
      l.Finish();
      cfg.bench.load_test = spec;
    }
    o.Finish();
    cfg.bench.Validate();
  } else {
    throw ConfigError("kind",
                      "expected scenario, weight-sum, profile-obfuscation, "
                      "adversary, ass-demo or bench-suite; got '" + kind + "'");
  }
  return cfg;
}

}  // namespace petfabric
