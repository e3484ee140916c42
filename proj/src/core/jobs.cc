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

#include "core/jobs.h"

#include <cmath>
#include <string>

#include "core/adversary.h"
#include "core/ass.h"
#include "core/error.h"
#include "core/random.h"
#include "core/stats.h"

namespace petfabric {

namespace {

std::string U(std::uint64_t v) { return std::to_string(v); }
std::string I(std::int64_t v) { return std::to_string(v); }

std::string CoverageLabel(const CoverageSet& c) {
  std::string out;
  for (std::uint32_t ch : c.channels()) {
    if (!out.empty()) out += '|';
    out += std::to_string(ch);
  }
  return out.empty() ? "none" : out;
}

std::vector<double> EndToEnd(const std::vector<RunRecord>& records) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.end_to_end_ms);
  return out;
}

std::string SummaryLine(const std::string& label, const Summary& s) {
  return label + ": mean " + FormatFixed(s.mean, 3) + " ms, median " +
         FormatFixed(s.median, 3) + " ms, std " + FormatFixed(s.stddev, 3) +
         " ms";
}

Report RunScenarioJob(const ScenarioSpec& spec, unsigned workers) {
  Report report;
  const auto records = RunScenario(spec, workers);
  report.tables.push_back(ScenarioTable(spec.name, records));
  const auto e2e = EndToEnd(records);
  report.summary.push_back(SummaryLine(
      spec.name + " (" + std::to_string(ExpectedHopCount(spec)) + " hops, " +
          U(records.size()) + " reps)",
      Summarize(e2e)));
  return report;
}

Report RunBench(const BenchSuiteSpec& bench, unsigned workers) {
  Report report;
  Table summary{"bench_summary.csv",
                {"scenario", "topology", "pet", "hops", "expected_hops",
                 "compute_ms", "mean_ms", "median_ms", "std_ms", "min_ms",
                 "max_ms", "reps"},
                {}};
  for (const ScenarioSpec& spec : bench.scenarios) {
    const auto records = RunScenario(spec, workers);
    report.tables.push_back(ScenarioTable(spec.name, records));
    const Summary s = Summarize(EndToEnd(records));
    summary.AddRow({spec.name, TopologyName(spec.topology),
                    PetKindName(spec.pet.kind), U(records.front().hop_count),
                    U(ExpectedHopCount(spec)),
                    FormatFixed(records.front().compute_ms), FormatFixed(s.mean),
                    FormatFixed(s.median), FormatFixed(s.stddev),
                    FormatFixed(s.min), FormatFixed(s.max), U(records.size())});
    report.summary.push_back(SummaryLine(spec.name, s));
  }
  report.tables.push_back(std::move(summary));

  if (bench.load_test) {
    const ScenarioSpec* base = nullptr;
    for (const auto& s : bench.scenarios) {
      if (s.name == bench.load_test->scenario) base = &s;
    }
    Table load{"load_test.csv",
               {"scenario", "rate", "reps", "baseline_mean_ms",
                "loaded_mean_ms", "ks_statistic", "p_value",
                "filler_delivered"},
               {}};
    for (double rate : bench.load_test->rates) {
      const LoadComparison c = LoadTest(*base, rate, workers);
      load.AddRow({base->name, FormatExact(rate), U(base->repetitions),
                   FormatFixed(c.baseline.mean), FormatFixed(c.loaded.mean),
                   FormatFixed(c.ks.statistic), FormatFixed(c.ks.p_value),
                   U(c.background_delivered)});
      report.summary.push_back("load " + FormatExact(rate) +
                               " msg/s: KS p = " + FormatFixed(c.ks.p_value, 4));
    }
    report.tables.push_back(std::move(load));
  }
  return report;
}

Report RunWeightSum(const WeightSumSpec& spec, unsigned workers) {
  const UtilityReport u = WeightSumExperiment(spec, workers);
  Report report;
  Table util{"utility.csv",
             {"epsilon", "mean_abs_err", "median_abs_err", "std_err", "reps"},
             {}};
  for (const UtilityRow& r : u.rows) {
    util.AddRow({FormatExact(r.epsilon), FormatFixed(r.mean_abs_err),
                 FormatFixed(r.median_abs_err), FormatFixed(r.std_err),
                 U(r.reps)});
  }
  Table truth{"ground_truth.csv", {"index", "weight"}, {}};
  for (std::size_t i = 0; i < u.dataset.size(); ++i) {
    truth.AddRow({U(i), FormatExact(u.dataset[i])});
  }
  report.tables.push_back(std::move(util));
  report.tables.push_back(std::move(truth));
  report.summary.push_back(std::string(DpModelName(u.model)) + " weight sum over " +
                           U(u.dataset.size()) + " records, true sum " +
                           FormatFixed(u.true_sum, 3));
  for (const UtilityRow& r : u.rows) {
    report.summary.push_back("eps " + FormatExact(r.epsilon) +
                             ": median |err| " +
                             FormatFixed(r.median_abs_err, 3));
  }
  return report;
}

Report RunProfile(const ProfileSpec& spec, unsigned workers) {
  const ProfileReport p = ProfileObfuscationExperiment(spec, workers);
  Report report;
  Table util{"profile_utility.csv", {"epsilon", "rmse", "reps"}, {}};
  for (const ProfileRow& r : p.rows) {
    util.AddRow({FormatExact(r.epsilon), FormatFixed(r.rmse), U(r.reps)});
  }
  Table truth{"profile_ground_truth.csv", {"index", "temperature"}, {}};
  for (std::size_t i = 0; i < p.profile.size(); ++i) {
    truth.AddRow({U(i), FormatExact(p.profile[i])});
  }
  report.tables.push_back(std::move(util));
  report.tables.push_back(std::move(truth));
  for (const ProfileRow& r : p.rows) {
    report.summary.push_back("eps " + FormatExact(r.epsilon) + ": RMSE " +
                             FormatFixed(r.rmse, 4));
  }
  return report;
}

std::vector<CoverageSet> Coverages(const AdversarySpec& spec) {
  std::vector<CoverageSet> out;
  if (!spec.coverages.empty()) {
    for (const auto& c : spec.coverages) out.emplace_back(c);
    return out;
  }
  const std::uint32_t m = spec.eavesdrop_m;
  for (std::uint32_t skip = m; skip >= 1; --skip) {
    std::vector<std::uint32_t> c;
    for (std::uint32_t j = 1; j <= m; ++j) {
      if (j != skip) c.push_back(j);
    }
    out.emplace_back(std::move(c));
  }
  out.push_back(CoverageSet::All(m));
  return out;
}

Report RunAdversary(const AdversarySpec& spec, unsigned workers) {
  Report report;
  const std::int64_t sens = spec.sensitivity.value_or(spec.encoding.q);
  Table guess{"adversary.csv",
              {"epsilon", "gap_ratio", "analytic_pg", "empirical_pg", "trials",
               "ci_halfwidth"},
              {}};
  std::uint64_t point = 0;
  for (double eps : spec.eps_grid) {
    for (double ratio : spec.gap_ratios) {
      HypothesisTest test;
      test.known_prefix_sum = spec.known_prefix_sum;
      test.s = 0;
      test.t = std::llround(ratio * static_cast<double>(sens));
      test.budget = PrivacyBudget{eps, sens};
      Rng rng(DeriveSeed(spec.seed, point++));
      const GuessRateResult r = EmpiricalGuessRate(test, spec.trials, rng,
                                                   spec.noise_model, workers);
      guess.AddRow({FormatExact(eps), FormatExact(ratio), FormatFixed(r.analytic),
                    FormatFixed(r.empirical), U(r.trials),
                    FormatFixed(r.ci_halfwidth)});
    }
  }
  report.tables.push_back(std::move(guess));
  report.summary.push_back("guess-rate grid: " + U(point) + " points at " +
                           U(spec.trials) + " trials");
  if (spec.eavesdrop_m == 0) return report;

  std::int64_t q = 1;
  std::int64_t true_sum = 0;
  for (EncodedValue s : spec.eavesdrop_secrets) {
    q = std::max(q, s);
    true_sum += s;
  }
  const FieldParams fp = FieldParams::Create(
      spec.eavesdrop_modulus, spec.eavesdrop_secrets.size(), q);
  Table eaves{"eavesdropper.csv",
              {"coverage", "exact_sum", "true_sum", "chi_square", "dof",
               "p_value", "uniform", "trials"},
              {}};
  Table indist{"indistinguishability.csv",
               {"coverage", "secret_a", "secret_b", "chi_square", "dof",
                "p_value", "trials"},
               {}};
  std::uint64_t stream = 1u << 20;
  for (const CoverageSet& c : Coverages(spec)) {
    Rng rng(DeriveSeed(spec.seed, stream++));
    const EavesdropOutcome out =
        SimulateEavesdropper(c, spec.eavesdrop_secrets, spec.eavesdrop_m, fp,
                             spec.eavesdrop_trials, rng);
    if (out.exact_sum) {
      eaves.AddRow({CoverageLabel(c), I(*out.exact_sum), I(true_sum), "", "",
                    "", "", "1"});
      report.summary.push_back("coverage " + CoverageLabel(c) +
                               ": reconstructed " + I(*out.exact_sum));
      continue;
    }
    const UniformityReport& u = *out.report;
    eaves.AddRow({CoverageLabel(c), "", I(true_sum),
                  FormatFixed(u.chi_square.statistic),
                  FormatExact(u.chi_square.dof),
                  FormatFixed(u.chi_square.p_value), u.uniform ? "1" : "0",
                  U(u.trials)});
    report.summary.push_back("coverage " + CoverageLabel(c) +
                             ": uniformity p = " +
                             FormatFixed(u.chi_square.p_value, 4));
    if (c.channels().empty()) continue;
    // Single-secret sharings: what leaks must not depend on the secret.
    const auto& secrets = spec.eavesdrop_secrets;
    for (std::size_t a = 0; a < secrets.size(); ++a) {
      for (std::size_t b = a + 1; b < secrets.size(); ++b) {
        const EncodedValue sa[] = {secrets[a]};
        const EncodedValue sb[] = {secrets[b]};
        const auto ha = PartialSumHistogram(c, sa, spec.eavesdrop_m, fp,
                                            spec.eavesdrop_trials, rng);
        const auto hb = PartialSumHistogram(c, sb, spec.eavesdrop_m, fp,
                                            spec.eavesdrop_trials, rng);
        const TestResult t = ChiSquareTwoSample(ha, hb);
        indist.AddRow({CoverageLabel(c), I(secrets[a]), I(secrets[b]),
                       FormatFixed(t.statistic), FormatExact(t.dof),
                       FormatFixed(t.p_value), U(spec.eavesdrop_trials)});
      }
    }
  }
  report.tables.push_back(std::move(eaves));
  report.tables.push_back(std::move(indist));
  return report;
}

Report RunAssDemo(const AssDemoSpec& spec) {
  Report report;
  Table t{"ass_demo.csv",
          {"k", "instance", "n", "modulus", "true_avg", "reconstructed_avg",
           "abs_err", "within_bound"},
          {}};
  for (std::size_t ki = 0; ki < spec.k_values.size(); ++ki) {
    const std::int64_t k = spec.k_values[ki];
    const EncodingParams p = DeriveParams(spec.x_lo, spec.x_hi, k);
    const FieldParams fp = spec.modulus
                               ? FieldParams::Create(*spec.modulus, spec.n, p.q)
                               : ChooseModulus(spec.n, p.q);
    std::uint64_t failures = 0;
    for (std::uint64_t inst = 0; inst < spec.instances; ++inst) {
      Rng rng(DeriveSeed(spec.seed, (ki << 40) + inst));
      std::vector<ShareBundle> bundles;
      bundles.reserve(spec.n);
      double raw_sum = 0.0;
      for (std::uint32_t i = 0; i < spec.n; ++i) {
        const double x = spec.x_lo + (spec.x_hi - spec.x_lo) * rng.Uniform01();
        raw_sum += x;
        bundles.push_back(Split("sensor-" + std::to_string(i), Encode(x, p),
                                spec.m, fp, rng));
      }
      const double truth = raw_sum / spec.n;
      const double avg = ReconstructAverage(bundles, fp, p);
      const double err = std::fabs(avg - truth);
      const bool ok = err <= 1.0 / static_cast<double>(k);
      if (!ok) ++failures;
      t.AddRow({I(k), U(inst), U(spec.n), U(fp.modulus()), FormatExact(truth),
                FormatExact(avg), FormatExact(err), ok ? "1" : "0"});
    }
    report.summary.push_back("k=" + I(k) + ", Q=" + U(fp.modulus()) + ": " +
                             U(spec.instances - failures) + "/" +
                             U(spec.instances) +
                             " averages within 1/k of the truth");
  }
  report.tables.push_back(std::move(t));
  return report;
}

}  // namespace

Table ScenarioTable(const std::string& name,
                    const std::vector<RunRecord>& records) {
  Table t{"scenario_" + name + ".csv",
          {"scenario", "rep", "compute_ms", "hops", "end_to_end_ms", "seed"},
          {}};
  for (const RunRecord& r : records) {
    t.AddRow({r.scenario, U(r.rep), FormatFixed(r.compute_ms), U(r.hop_count),
              FormatFixed(r.end_to_end_ms), U(r.seed)});
  }
  return t;
}

Report RunJob(const JobConfig& config, unsigned workers) {
  switch (config.kind) {
    case JobKind::kScenario:
      return RunScenarioJob(config.scenario, workers);
    case JobKind::kBenchSuite:
      return RunBench(config.bench, workers);
    case JobKind::kWeightSum:
      return RunWeightSum(config.weight_sum, workers);
    case JobKind::kProfile:
      return RunProfile(config.profile, workers);
    case JobKind::kAdversary:
      return RunAdversary(config.adversary, workers);
    case JobKind::kAssDemo:
      return RunAssDemo(config.ass_demo);
  }
  throw Error(ErrorCode::kInternal, "unhandled job kind");
}

}  // namespace petfabric
