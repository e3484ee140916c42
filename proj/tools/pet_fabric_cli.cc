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

// pet-fabric: runs scenario, sweep and adversary configs and writes CSV
// reports plus a manifest.json into the output directory.
//
// Exit status: 0 success, 2 invalid config or usage, 1 runtime failure.

#include <openssl/evp.h>

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "petfabric/petfabric.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string subcommand;
  std::string config;
  std::string out = "out";
  std::optional<std::uint64_t> seed;
  unsigned parallel = 1;
  std::string format = "csv";
  int verbosity = 0;
};

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

int ConfigFailure(const std::string& field, const std::string& message) {
  std::cerr << "config error: " << field << ": " << message << "\n";
  return kExitConfig;
}

// Kinds accepted by each subcommand; empty means any.
std::vector<std::string> AcceptedKinds(const std::string& subcommand) {
  if (subcommand == "run-scenario") return {"scenario"};
  if (subcommand == "sweep-epsilon") {
    return {"weight-sum", "profile-obfuscation"};
  }
  if (subcommand == "adversary-sim") return {"adversary"};
  if (subcommand == "ass-demo") return {"ass-demo"};
  if (subcommand == "bench-suite") return {"bench-suite"};
  return {};
}

bool WriteFile(const std::filesystem::path& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
  return static_cast<bool>(f);
}

int Execute(const Options& opt) {
  std::ifstream in(opt.config, std::ios::binary);
  if (!in) return ConfigFailure("--config", "cannot read '" + opt.config + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  // Seed precedence: --seed, then PET_FABRIC_SEED, then the config's "seed".
  std::optional<std::uint64_t> seed = opt.seed;
  std::string seed_source = seed ? "flag" : "";
  if (!seed) {
    if (const char* env = std::getenv("PET_FABRIC_SEED")) {
      errno = 0;
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (*env == '\0' || *end != '\0' || errno != 0 || *env == '-') {
        return ConfigFailure("PET_FABRIC_SEED",
                             std::string("not an unsigned integer: '") + env +
                                 "'");
      }
      seed = v;
      seed_source = "env";
    }
  }

  pf_config* cfg = nullptr;
  if (pf_config_parse(text.data(), text.size(), seed.has_value(),
                      seed.value_or(0), &cfg) != PF_OK) {
    // The message already leads with the offending field.
    std::cerr << "config error: " << pf_last_error_message() << "\n";
    return kExitConfig;
  }
  std::unique_ptr<pf_config, decltype(&pf_config_destroy)> config(
      cfg, pf_config_destroy);
  if (seed_source.empty()) seed_source = "config";
  const std::string kind = pf_config_kind(config.get());

  const auto accepted = AcceptedKinds(opt.subcommand);
  if (!accepted.empty() &&
      std::find(accepted.begin(), accepted.end(), kind) == accepted.end()) {
    std::string want;
    for (const auto& k : accepted) want += (want.empty() ? "" : " or ") + k;
    return ConfigFailure("kind", opt.subcommand + " expects a " + want +
                                     " config, got '" + kind + "'");
  }
  if (opt.subcommand == "validate-config") {
    std::cout << "ok: " << kind << " config, seed "
              << pf_config_seed(config.get()) << "\n";
    return kExitOk;
  }

  pf_report* rep = nullptr;
  const pf_status st = pf_run(config.get(), opt.parallel, &rep);
  if (st != PF_OK) {
    std::cerr << "error (" << pf_status_name(st)
              << "): " << pf_last_error_message() << "\n";
    return kExitRuntime;
  }
  std::unique_ptr<pf_report, decltype(&pf_report_destroy)> report(
      rep, pf_report_destroy);

  std::error_code ec;
  const std::filesystem::path out_dir(opt.out);
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create '" << opt.out << "': " << ec.message()
              << "\n";
    return kExitRuntime;
  }

  nlohmann::ordered_json manifest;
  manifest["tool"] = "pet-fabric";
  manifest["version"] = pf_version();
  manifest["subcommand"] = opt.subcommand;
  manifest["kind"] = kind;
  manifest["config_sha256"] = Sha256Hex(text);
  manifest["seed"] = pf_config_seed(config.get());
  manifest["seed_source"] = seed_source;
  manifest["format"] = opt.format;
  manifest["outputs"] = nlohmann::ordered_json::array();

  for (size_t i = 0; i < pf_report_table_count(report.get()); ++i) {
    size_t len = 0;
    const char* csv = pf_report_table_csv(report.get(), i, &len);
    const std::string name = pf_report_table_name(report.get(), i);
    const std::string data(csv, len);
    if (!WriteFile(out_dir / name, data)) {
      std::cerr << "error: cannot write '" << (out_dir / name).string()
                << "'\n";
      return kExitRuntime;
    }
    nlohmann::ordered_json entry;
    entry["file"] = name;
    entry["columns"] = nlohmann::ordered_json::array();
    for (size_t c = 0; c < pf_report_table_column_count(report.get(), i); ++c) {
      entry["columns"].push_back(pf_report_table_column(report.get(), i, c));
    }
    entry["rows"] = pf_report_table_rows(report.get(), i);
    entry["sha256"] = Sha256Hex(data);
    manifest["outputs"].push_back(std::move(entry));
    if (opt.verbosity > 0) {
      std::cerr << "wrote " << (out_dir / name).string() << "\n";
    }
  }
  if (!WriteFile(out_dir / "manifest.json", manifest.dump(2) + "\n")) {
    std::cerr << "error: cannot write manifest\n";
    return kExitRuntime;
  }
  for (size_t i = 0; i < pf_report_summary_count(report.get()); ++i) {
    std::cout << pf_report_summary_line(report.get(), i) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PET fabric: privacy-enhancing pub/sub benchmarks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pf_version()));

  Options opt;
  std::uint64_t seed_value = 0;
  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"run-scenario", "Run one latency scenario"},
      {"sweep-epsilon", "Sweep epsilon for a utility experiment"},
      {"adversary-sim", "Simulate the distinguishing and eavesdropping attacks"},
      {"ass-demo", "Reconstruct shared averages on seeded instances"},
      {"bench-suite", "Run a suite of scenarios and load tests"},
      {"validate-config", "Parse and validate a config without running it"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config, "JSON config file")->required();
    sub->add_option("--seed", seed_value,
                    "Master seed (overrides PET_FABRIC_SEED and the config)");
    if (name != "validate-config") {
      sub->add_option("--out", opt.out, "Output directory")
          ->capture_default_str();
      sub->add_option("--parallel", opt.parallel, "Worker threads")
          ->check(CLI::Range(1u, 1024u))
          ->capture_default_str();
      sub->add_option("--format", opt.format, "Report format")
          ->check(CLI::IsMember({"csv"}))
          ->capture_default_str();
    }
    sub->add_flag("-v,--verbose", opt.verbosity, "More output");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  for (CLI::App* sub : subs) {
    if (sub->parsed()) {
      opt.subcommand = sub->get_name();
      if (sub->count("--seed") > 0) opt.seed = seed_value;
    }
  }
  return Execute(opt);
}
