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

// Runs a parsed job config and renders its results as CSV tables.
//
// Table schemas (file name: columns):
//   scenario_<name>.csv        scenario,rep,compute_ms,hops,end_to_end_ms,seed
//   bench_summary.csv          scenario,topology,pet,hops,expected_hops,
//                              compute_ms,mean_ms,median_ms,std_ms,min_ms,
//                              max_ms,reps
//   load_test.csv              scenario,rate,reps,baseline_mean_ms,
//                              loaded_mean_ms,ks_statistic,p_value,
//                              filler_delivered
//   utility.csv                epsilon,mean_abs_err,median_abs_err,std_err,reps
//   ground_truth.csv           index,weight
//   profile_utility.csv        epsilon,rmse,reps
//   profile_ground_truth.csv   index,temperature
//   adversary.csv              epsilon,gap_ratio,analytic_pg,empirical_pg,
//                              trials,ci_halfwidth
//   eavesdropper.csv           coverage,exact_sum,true_sum,chi_square,dof,
//                              p_value,uniform,trials
//   indistinguishability.csv   coverage,secret_a,secret_b,chi_square,dof,
//                              p_value,trials
//   ass_demo.csv               k,instance,n,modulus,true_avg,reconstructed_avg,
//                              abs_err,within_bound

#ifndef PETFABRIC_CORE_JOBS_H_
#define PETFABRIC_CORE_JOBS_H_

#include "core/config.h"
#include "core/report.h"

namespace petfabric {

// Deterministic in the config's seed; `workers` only changes wall time.
Report RunJob(const JobConfig& config, unsigned workers = 1);

Table ScenarioTable(const std::string& name,
                    const std::vector<RunRecord>& records);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_JOBS_H_
