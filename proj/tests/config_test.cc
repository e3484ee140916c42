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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "core/error.h"

namespace petfabric {
namespace {

std::string Field(const std::string& json) {
  try {
    ParseConfig(json);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<accepted>";
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(ConfigTest, ScenarioDefaults) {
  const JobConfig c = ParseConfig(R"({"kind": "scenario", "name": "b"})");
  EXPECT_EQ(c.kind, JobKind::kScenario);
  EXPECT_EQ(c.scenario.name, "b");
  EXPECT_EQ(c.scenario.topology, Topology::kOnDevice);
  EXPECT_EQ(c.scenario.pet.kind, PetKind::kNone);
  EXPECT_DOUBLE_EQ(c.scenario.latency.per_hop_mean_ms, 3.88);
  EXPECT_DOUBLE_EQ(c.scenario.compute_ms, 0.307);
  EXPECT_EQ(c.seed, 0u);
}

TEST(ConfigTest, ScenarioFields) {
  const JobConfig c = ParseConfig(R"({
    "kind": "scenario", "name": "v", "seed": 9,
    "topology": {"type": "virtualized", "virtual_nodes": 2},
    "pet": {"type": "gdp", "epsilon": 0.5, "aggregator": "mean"},
    "encoding": {"k": 10, "x_lo": -10, "x_hi": 20},
    "sensors": {"count": 4, "generator": {"type": "constant", "value": 3}},
    "latency": {"per_hop_mean_ms": 2.0, "jitter_std_ms": 0.5,
                "distribution": "gaussian"},
    "compute_ms": 0.0, "broker_service_ms": 0.1, "repetitions": 7,
    "load": {"rate": 400, "window_ms": 50}
  })");
  const ScenarioSpec& s = c.scenario;
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(s.seed, 9u);
  EXPECT_EQ(s.topology, Topology::kVirtualized);
  EXPECT_EQ(s.virtual_nodes, 2u);
  EXPECT_EQ(s.pet.kind, PetKind::kGdp);
  EXPECT_EQ(s.pet.aggregator, Aggregator::kMean);
  EXPECT_EQ(s.encoding.q, 300);
  EXPECT_EQ(s.sensors, 4u);
  EXPECT_EQ(s.generator.kind, DataGenerator::Kind::kConstant);
  EXPECT_EQ(s.latency.distribution, LatencyDistribution::kTruncatedGaussian);
  EXPECT_EQ(s.repetitions, 7u);
  EXPECT_DOUBLE_EQ(s.load_rate, 400.0);
}

TEST(ConfigTest, SeedOverride) {
  const std::string json = R"({"kind": "scenario", "name": "b", "seed": 3})";
  EXPECT_EQ(ParseConfig(json).seed, 3u);
  EXPECT_EQ(ParseConfig(json, 77).seed, 77u);
  EXPECT_EQ(ParseConfig(json, 77).scenario.seed, 77u);
}

TEST(ConfigTest, FieldPathsOnErrors) {
  EXPECT_EQ(Field("not json"), "<root>");
  EXPECT_EQ(Field("{}"), "kind");
  EXPECT_EQ(Field(R"({"kind": "wat"})"), "kind");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "x", "bogus": 1})"),
            "bogus");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "x",
                      "pet": {"type": "ldp", "epsilon": 1, "epsilonn": 2}})"),
            "pet.epsilonn");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "x",
                      "pet": {"type": "ldp"}})"),
            "pet.epsilon");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "x",
                      "pet": {"type": "ass", "m": 1}})"),
            "pet.m");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "x",
                      "topology": {"type": "relay-chain"}})"),
            "topology.depth");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "x",
                      "latency": {"preset": "moon"}})"),
            "latency.preset");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "x", "repetitions": -1})"),
            "repetitions");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "x",
                      "encoding": {"k": 1, "x_lo": 5, "x_hi": 1}})"),
            "encoding");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "a/b"})"), "name");
  EXPECT_EQ(Field(R"({"kind": "weight-sum", "eps_grid": [0.1, "x"]})"),
            "eps_grid[1]");
}

TEST(ConfigTest, AssLossNeedsValidM) {
  EXPECT_EQ(Field(ReadFile(std::filesystem::path(PETFABRIC_TESTDATA) /
                           "ass_m1_loss.json")),
            "pet.m");
  EXPECT_EQ(Field(R"({"kind": "scenario", "name": "x",
                      "pet": {"type": "ldp", "epsilon": 1},
                      "inject_share_loss": true})"),
            "inject_share_loss");
}

TEST(ConfigTest, BenchSuiteMergesDefaults) {
  const JobConfig c = ParseConfig(R"({
    "kind": "bench-suite", "seed": 5,
    "defaults": {"latency": {"preset": "calibrated"}, "repetitions": 3},
    "scenarios": [
      {"name": "a"},
      {"name": "b", "repetitions": 9, "latency": {"preset": "default"}}
    ],
    "load_test": {"scenario": "a", "rates": [0, 400]}
  })");
  ASSERT_EQ(c.bench.scenarios.size(), 2u);
  EXPECT_DOUBLE_EQ(c.bench.scenarios[0].latency.per_hop_mean_ms, 2.494);
  EXPECT_EQ(c.bench.scenarios[0].repetitions, 3u);
  EXPECT_EQ(c.bench.scenarios[1].repetitions, 9u);
  EXPECT_DOUBLE_EQ(c.bench.scenarios[1].latency.per_hop_mean_ms, 3.88);
  ASSERT_TRUE(c.bench.load_test.has_value());
  EXPECT_EQ(c.bench.load_test->rates.size(), 2u);

  EXPECT_EQ(Field(R"({"kind": "bench-suite",
                      "scenarios": [{"name": "a"}, {"name": "a"}]})"),
            "scenarios[1].name");
  EXPECT_EQ(Field(R"({"kind": "bench-suite",
                      "scenarios": [{"name": "a", "pet": {"type": "x"}}]})"),
            "scenarios[0].pet.type");
  EXPECT_EQ(Field(R"({"kind": "bench-suite", "scenarios": [{"name": "a"}],
                      "load_test": {"scenario": "zz"}})"),
            "load_test.scenario");
}

TEST(ConfigTest, OtherKinds) {
  const JobConfig a = ParseConfig(R"({"kind": "adversary",
      "eavesdropper": {"m": 3, "coverages": [[1, 2], [1, 2, 3]]}})");
  EXPECT_EQ(a.adversary.coverages.size(), 2u);
  EXPECT_EQ(a.adversary.eps_grid.size(), 7u);
  const JobConfig d = ParseConfig(
      R"({"kind": "ass-demo", "domain": [0, 1], "k_values": [100]})");
  EXPECT_DOUBLE_EQ(d.ass_demo.x_hi, 1.0);
  const JobConfig p = ParseConfig(
      R"({"kind": "profile-obfuscation",
          "profile": {"type": "values", "values": [20, 30, 40]}})");
  EXPECT_EQ(p.profile.profile.size(), 3u);
  EXPECT_EQ(Field(R"({"kind": "ass-demo", "domain": [0]})"), "domain");
}

TEST(ConfigTest, ShippedConfigsParse) {
  const std::filesystem::path dir =
      std::filesystem::path(PETFABRIC_TESTDATA) / ".." / ".." / "configs";
  int n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    ++n;
    EXPECT_NO_THROW(ParseConfig(ReadFile(entry.path()))) << entry.path();
  }
  EXPECT_GE(n, 10);
}

}  // namespace
}  // namespace petfabric
