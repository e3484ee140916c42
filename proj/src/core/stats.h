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

#ifndef PETFABRIC_CORE_STATS_H_
#define PETFABRIC_CORE_STATS_H_

#include <cstdint>
#include <span>

namespace petfabric {

struct TestResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};

// Pearson goodness-of-fit against the uniform distribution over the bins.
// Empty input yields statistic 0 and p = 1.
TestResult ChiSquareUniform(std::span<const std::uint64_t> counts);

// Homogeneity of two binned samples with possibly different totals. Bins
// empty in both samples do not contribute a degree of freedom.
TestResult ChiSquareTwoSample(std::span<const std::uint64_t> a,
                              std::span<const std::uint64_t> b);

// Two-sample Kolmogorov-Smirnov with the asymptotic p-value.
TestResult KolmogorovSmirnovTwoSample(std::span<const double> a,
                                      std::span<const double> b);

// Upper tail of the Kolmogorov distribution, Q(lambda).
double KolmogorovQ(double lambda);

double ChiSquareSurvival(double statistic, double dof);

struct Summary {
  double mean = 0.0;
  double median = 0.0;
  // Sample standard deviation (n - 1 denominator); 0 for n < 2.
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

Summary Summarize(std::span<const double> values);

double Mean(std::span<const double> values);
double Median(std::span<const double> values);

}  // namespace petfabric

#endif  // PETFABRIC_CORE_STATS_H_
