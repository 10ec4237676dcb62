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


#include "smoothprep/classical_sampler.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "smoothprep/errors.h"
#include "smoothprep/random.h"
#include "smoothprep/vectors.h"

namespace smoothprep {
namespace {

SamplerConfig config_with_seed(std::uint64_t seed, double c = 1.0) {
  SamplerConfig cfg;
  cfg.entry_bound = c;
  cfg.seed = seed;
  return cfg;
}

struct QueryStats {
  double mean = 0;
  double stderr_mean = 0;
};

QueryStats query_stats(const DataVector& x, int runs, double c = 1.0) {
  double s = 0, s2 = 0;
  for (int i = 0; i < runs; ++i) {
    const double q = static_cast<double>(l2_sample(x, config_with_seed(i, c)).queries);
    s += q;
    s2 += q * q;
  }
  const double mean = s / runs;
  return {mean, std::sqrt((s2 / runs - mean * mean) / (runs - 1))};
}

TEST(L2SampleTest, OnesAcceptImmediately) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const SampleResult r = l2_sample(generate_vector("ones:4"), config_with_seed(seed));
    ASSERT_EQ(r.queries, 1u);
    ASSERT_GE(r.index, 1u);
    ASSERT_LE(r.index, 4u);
  }
}

TEST(L2SampleTest, BasisAlwaysReturnsItsIndexWithMeanD) {
  const DataVector x = generate_vector("basis:8:1");
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    ASSERT_EQ(l2_sample(x, config_with_seed(seed)).index, 1u);
  }
  const QueryStats st = query_stats(x, 20000);
  EXPECT_NEAR(st.mean, 8.0, 3 * st.stderr_mean);
}

TEST(L2SampleTest, TwoEntryDistribution) {
  const DataVector x({0.6, 0.8});
  const std::size_t n = 1000000;
  const auto freq = empirical_distribution(x, config_with_seed(3), n, 0);
  EXPECT_LT(total_variation(freq, {0.36, 0.64}), 0.005);
}

TEST(L2SampleTest, TvBoundOnRandomVectors) {
  for (int s = 0; s < 4; ++s) {
    const DataVector x = generate_vector("uniform:32:" + std::to_string(s));
    const std::size_t n = 40000;
    const auto freq = empirical_distribution(x, config_with_seed(s), n, 0);
    EXPECT_LT(total_variation(freq, l2_distribution(x)), 4 * std::sqrt(32.0 / n));
  }
}

TEST(L2SampleTest, MeanQueriesMatchExpectedOnRandomInputs) {
  for (int s = 0; s < 5; ++s) {
    const DataVector x = generate_vector("sparse:64:" + std::to_string(8 + 4 * s) + ":" +
                                         std::to_string(s));
    const QueryStats st = query_stats(x, 5000);
    EXPECT_NEAR(st.mean, expected_queries(x), 3 * st.stderr_mean) << s;
  }
}

TEST(L2SampleTest, LooserBoundScalesQueries) {
  const DataVector x = generate_vector("ones:4");
  const QueryStats st = query_stats(DataVector({0.5, 0.5, 0.5, 0.5}), 20000, 1.0);
  EXPECT_NEAR(st.mean, 4.0, 3 * st.stderr_mean);
  const QueryStats loose = query_stats(x, 20000, 2.0);
  EXPECT_NEAR(loose.mean, expected_queries(x, 2.0), 3 * loose.stderr_mean);
}

TEST(L2SampleTest, PermutationEquivariance) {
  const DataVector x = generate_vector("uniform:12:5");
  std::vector<std::size_t> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  std::rotate(perm.begin(), perm.begin() + 5, perm.end());
  std::vector<double> permuted(12);
  for (std::size_t i = 0; i < 12; ++i) permuted[i] = x[perm[i]];
  const DataVector y(permuted);

  const auto px = l2_distribution(x);
  const auto py = l2_distribution(y);
  for (std::size_t i = 0; i < 12; ++i) EXPECT_DOUBLE_EQ(py[i], px[perm[i]]);

  const std::size_t n = 200000;
  const auto fx = empirical_distribution(x, config_with_seed(1), n, 0);
  const auto fy = empirical_distribution(y, config_with_seed(2), n, 0);
  std::vector<double> fy_back(12);
  for (std::size_t i = 0; i < 12; ++i) fy_back[perm[i]] = fy[i];
  EXPECT_LT(total_variation(fx, fy_back), 2 * 4 * std::sqrt(12.0 / n));
}

TEST(L2SampleTest, Errors) {
  EXPECT_THROW(l2_sample(generate_vector("zero:4"), {}), ZeroVectorError);
  EXPECT_THROW(l2_sample(DataVector({0.9}), config_with_seed(0, 0.5)), std::invalid_argument);
  EXPECT_THROW(l2_sample(DataVector({0.9}), config_with_seed(0, 0.0)), std::invalid_argument);
  SamplerConfig tight = config_with_seed(0);
  tight.max_queries = 3;
  EXPECT_THROW(l2_sample(DataVector(std::vector<double>(1000, 1e-6)), tight),
               QueryBudgetExceeded);
}

TEST(L2SampleTest, DeterministicPerSeed) {
  const DataVector x = generate_vector("uniform:100:1");
  const SampleResult a = l2_sample(x, config_with_seed(123));
  const SampleResult b = l2_sample(x, config_with_seed(123));
  EXPECT_EQ(a.index, b.index);
  EXPECT_EQ(a.queries, b.queries);
  EXPECT_EQ(to_csv_row(a, 123), std::to_string(a.index) + "," + std::to_string(a.queries) + ",123");
}

TEST(L2DistributionTest, Examples) {
  EXPECT_EQ(l2_distribution(generate_vector("ones:4")), (std::vector<double>(4, 0.25)));
  EXPECT_EQ(l2_distribution(generate_vector("basis:4:2")), (std::vector<double>{0, 1, 0, 0}));
  const auto p = l2_distribution(DataVector({0.6, 0.8}));
  EXPECT_NEAR(p[0], 0.36, 1e-15);
  EXPECT_NEAR(p[1], 0.64, 1e-15);
  EXPECT_THROW(l2_distribution(generate_vector("zero:2")), ZeroVectorError);
}

TEST(ExpectedQueriesTest, Examples) {
  EXPECT_DOUBLE_EQ(expected_queries(generate_vector("ones:9")), 1.0);
  EXPECT_DOUBLE_EQ(expected_queries(generate_vector("basis:37:4")), 37.0);
  EXPECT_DOUBLE_EQ(expected_queries(DataVector({0.5, 0.5, 0.5, 0.5})), 4.0);
}

TEST(TotalVariationTest, Basics) {
  EXPECT_DOUBLE_EQ(total_variation({1, 0}, {0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(total_variation({0.5, 0.5}, {0.5, 0.5}), 0.0);
  EXPECT_THROW(total_variation({1}, {0.5, 0.5}), std::invalid_argument);
}

}  // namespace
}  // namespace smoothprep
