// Copyright 2026 The smoothprep Authors
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

// l2 sampling from plain entry-wise RAM: pick an index uniformly, read x_j,
// accept with probability x_j^2 / c^2, repeat. The output index j then has
// probability x_j^2 / ||x||^2 and the expected number of reads is
// D c^2 / ||x||^2.

#ifndef SMOOTHPREP_CLASSICAL_SAMPLER_H_
#define SMOOTHPREP_CLASSICAL_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smoothprep/vectors.h"

namespace smoothprep {

inline constexpr std::uint64_t kDefaultMaxQueries = 1'000'000'000;

struct SamplerConfig {
  double entry_bound = 1.0;  // c >= max |x_i|
  std::uint64_t seed = 0;
  std::uint64_t max_queries = kDefaultMaxQueries;
};

struct SampleResult {
  std::size_t index = 0;      // 1-based
  std::uint64_t queries = 0;  // every RAM read, rejected ones included
};

inline constexpr std::string_view kSampleCsvHeader = "index,queries,seed";
std::string to_csv_row(const SampleResult& r, std::uint64_t seed);

/// One l2 sample. The acceptance test draws u ~ Uniform(0, c^2) and accepts
/// when u < x_j^2.
///
/// Throws ZeroVectorError for x = 0, std::invalid_argument when c is not
/// positive or below max|x_i|, and QueryBudgetExceeded after max_queries
/// reads without acceptance.
SampleResult l2_sample(const DataVector& x, const SamplerConfig& config);

/// p_j = x_j^2 / ||x||^2.
std::vector<double> l2_distribution(const DataVector& x);

/// D c^2 / ||x||^2.
double expected_queries(const DataVector& x, double entry_bound = 1.0);

/// Half the L1 distance between two distributions of equal length.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

/// Empirical index frequencies of `samples` draws, sample s seeded with
/// derive_seed({config.seed, s}).
std::vector<double> empirical_distribution(const DataVector& x, const SamplerConfig& config,
                                           std::size_t samples, unsigned threads = 0);

}  // namespace smoothprep

#endif  // SMOOTHPREP_CLASSICAL_SAMPLER_H_
