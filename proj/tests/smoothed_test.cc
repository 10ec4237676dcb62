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


#include "smoothprep/smoothed.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "smoothprep/errors.h"
#include "smoothprep/random.h"
#include "smoothprep/vectors.h"

namespace smoothprep {
namespace {

using std::numbers::pi;

TEST(ChiMeanTest, HandValues) {
  EXPECT_NEAR(chi_mean(1, 1.0), std::sqrt(2 / pi), 1e-14);
  EXPECT_NEAR(chi_mean(1, 1.0), 0.79788, 1e-5);
  EXPECT_NEAR(chi_mean(2, 1.0), std::sqrt(pi / 2), 1e-14);
  EXPECT_NEAR(chi_mean(2, 0.5), 0.5 * 1.25331, 1e-5);
  EXPECT_NEAR(chi_mean(1000000, 0.3) / (0.3 * 1000.0), 1.0, 1e-4);
  EXPECT_EQ(chi_mean(5, 0.0), 0.0);
  EXPECT_THROW(chi_mean(0, 1.0), std::invalid_argument);
}

TEST(ChiMeanTest, MatchesMonteCarloNorm) {
  const double sigma = 0.7;
  for (std::size_t d : {1u, 2u, 10u, 1000u}) {
    const std::size_t samples = d == 1000 ? 10000 : 100000;
    const CounterRng rng(derive_seed({99, d}));
    double sum = 0;
    for (std::size_t s = 0; s < samples; ++s) {
      double n2 = 0;
      for (std::size_t i = 0; i < d; ++i) {
        const double g = sigma * rng.gaussian(s * d + i);
        n2 += g * g;
      }
      sum += std::sqrt(n2);
    }
    EXPECT_NEAR(sum / samples / chi_mean(d, sigma), 1.0, 0.01) << d;
  }
}

void expect_within_three_se(const SmoothedEstimate& e, double expected) {
  EXPECT_NEAR(e.mean_queries, expected, 3 * e.stderr_queries)
      << to_string(e.strategy) << " D=" << e.dimension << " sigma=" << e.sigma;
}

TEST(EstimateSmoothedTest, NaiveMatchesInverseChiSquareMean) {
  for (std::size_t d : {8u, 64u}) {
    const double sigma = 0.1;
    const auto e = estimate_smoothed(Strategy::kNaive, zero_vector(d), sigma, 4000, 11);
    const double dd = static_cast<double>(d);
    expect_within_three_se(e, 2 * dd / (sigma * sigma * (dd - 2)));
  }
}

TEST(EstimateSmoothedTest, ClassicalMatchesInverseChiSquareMean) {
  for (std::size_t d : {8u, 1024u}) {
    const double sigma = 0.1;
    const auto e =
        estimate_smoothed(Strategy::kClassicalRejection, zero_vector(d), sigma, 4000, 12);
    const double dd = static_cast<double>(d);
    expect_within_three_se(e, dd / (sigma * sigma * (dd - 2)));
    if (d >= 1024) {
      EXPECT_GE(e.mean_queries * sigma * sigma, 0.7);
      EXPECT_LE(e.mean_queries * sigma * sigma, 1.3);
    }
  }
}

TEST(EstimateSmoothedTest, AmplifiedIsNearPiOverSigmaAndDimensionFree) {
  const double sigma = 0.1;
  double lo = INFINITY, hi = 0;
  for (std::size_t d : {256u, 1024u, 4096u}) {
    const auto e = estimate_smoothed(Strategy::kKnownAmplitudeAA, zero_vector(d), sigma, 500, 13);
    EXPECT_GT(e.mean_queries, pi / sigma / 2);
    EXPECT_LT(e.mean_queries, pi / sigma * 2);
    lo = std::min(lo, e.mean_queries);
    hi = std::max(hi, e.mean_queries);
  }
  EXPECT_LT(hi / lo, 1.5);
}

TEST(EstimateSmoothedTest, FixedPointRuns) {
  HarnessOptions opt;
  opt.lambda_min = 0.005;
  opt.delta = 0.1;
  const auto e = estimate_smoothed(Strategy::kFixedPointAA, zero_vector(64), 0.1, 50, 1, opt);
  const FixedPointSchedule s = fixed_point_schedule(0.005, 0.1);
  EXPECT_GE(e.mean_queries, 2.0 + 4.0 * s.iterations);
  EXPECT_THROW(estimate_smoothed(Strategy::kFixedPointAA, zero_vector(64), 0.1, 50, 1),
               std::invalid_argument);
}

TEST(EstimateSmoothedTest, JensenGapOnEveryEstimate) {
  for (Strategy s : {Strategy::kNaive, Strategy::kKnownAmplitudeAA,
                     Strategy::kClassicalRejection}) {
    for (double sigma : {0.4, 0.05}) {
      const auto e = estimate_smoothed(s, zero_vector(32), sigma, 200, 5);
      EXPECT_GE(e.mean_inverse_p, e.inverse_mean_p);
    }
  }
}

TEST(EstimateSmoothedTest, WorstCaseIsTheZeroVector) {
  const double sigma = 0.1;
  const std::size_t trials = 400;
  const auto at_zero =
      estimate_smoothed(Strategy::kKnownAmplitudeAA, zero_vector(256), sigma, trials, 21);
  for (int s = 0; s < 10; ++s) {
    const DataVector x = s % 2 == 0 ? generate_vector("uniform:256:" + std::to_string(s))
                                    : generate_vector("sparse:256:3:" + std::to_string(s));
    const auto e = estimate_smoothed(Strategy::kKnownAmplitudeAA, x, sigma, trials, 21);
    const double combined = std::hypot(e.stderr_queries, at_zero.stderr_queries);
    EXPECT_LE(e.mean_queries, at_zero.mean_queries + 3 * combined) << s;
  }
}

TEST(EstimateSmoothedTest, DeterministicAcrossRunsAndThreadCounts) {
  HarnessOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = estimate_smoothed(Strategy::kNaive, zero_vector(50), 0.2, 300, 8, one);
  const auto b = estimate_smoothed(Strategy::kNaive, zero_vector(50), 0.2, 300, 8, four);
  EXPECT_EQ(to_csv_row(a), to_csv_row(b));
  EXPECT_EQ(a.mean_queries, b.mean_queries);
  EXPECT_EQ(a.stderr_queries, b.stderr_queries);
  const auto c = estimate_smoothed(Strategy::kNaive, zero_vector(50), 0.2, 300, 9, one);
  EXPECT_NE(a.mean_queries, c.mean_queries);
}

TEST(EstimateSmoothedTest, AnalyticModeMatchesStatevector) {
  HarnessOptions sv, an;
  sv.mode = SimulationMode::kStatevector;
  an.mode = SimulationMode::kAnalytic;
  const auto a = estimate_smoothed(Strategy::kKnownAmplitudeAA, zero_vector(128), 0.1, 200, 3, sv);
  const auto b = estimate_smoothed(Strategy::kKnownAmplitudeAA, zero_vector(128), 0.1, 200, 3, an);
  EXPECT_NEAR(a.mean_queries, b.mean_queries, 1e-9 * a.mean_queries);
}

TEST(EstimateSmoothedTest, ZeroSigmaIsTheUnperturbedCost) {
  const auto e =
      estimate_smoothed(Strategy::kKnownAmplitudeAA, generate_vector("basis:4:1"), 0.0, 30, 1);
  EXPECT_EQ(e.mean_queries, 6.0);
  EXPECT_EQ(e.stderr_queries, 0.0);
  EXPECT_EQ(e.clip_fraction, 0.0);
}

TEST(EstimateSmoothedTest, ClipFractionIsReported) {
  const auto e = estimate_smoothed(Strategy::kKnownAmplitudeAA, zero_vector(1024), 0.4, 100, 7);
  // Two-sided Gaussian tail beyond 2.5 sigma.
  EXPECT_NEAR(e.clip_fraction, std::erfc(2.5 / std::sqrt(2.0)), 0.002);
}

TEST(EstimateSmoothedTest, Errors) {
  EXPECT_THROW(estimate_smoothed(Strategy::kNaive, zero_vector(8), 0.1, 29, 1),
               std::invalid_argument);
  EXPECT_THROW(estimate_smoothed(Strategy::kNaive, zero_vector(8), -0.1, 30, 1),
               std::invalid_argument);
  EXPECT_THROW(estimate_smoothed(Strategy::kClassicalRejection, zero_vector(2), 0.1, 30, 1),
               DivergentMeanError);
  EXPECT_THROW(estimate_smoothed(Strategy::kNaive, zero_vector(2), 0.1, 30, 1),
               DivergentMeanError);
  EXPECT_THROW(estimate_smoothed(Strategy::kKnownAmplitudeAA, zero_vector(1), 0.1, 30, 1),
               DivergentMeanError);
  EXPECT_NO_THROW(estimate_smoothed(Strategy::kKnownAmplitudeAA, zero_vector(2), 0.1, 30, 1));
  EXPECT_NO_THROW(estimate_smoothed(Strategy::kClassicalRejection, zero_vector(3), 0.1, 30, 1));
  const DataVector perturbed = perturb(zero_vector(8), {0.1, 1});
  EXPECT_THROW(estimate_smoothed(Strategy::kNaive, perturbed, 0.1, 30, 1), std::invalid_argument);
  EXPECT_THROW(estimate_smoothed(Strategy::kNaive, zero_vector(8), 0.0, 30, 1), ZeroVectorError);
}

TEST(SweepTest, GridValidationAndSeeds) {
  const std::vector<double> good = {0.4, 0.2, 0.1, 0.04};
  const auto sweep = sweep_sigma(Strategy::kClassicalRejection, zero_vector(16), good, 30, 4);
  ASSERT_EQ(sweep.size(), 4u);
  for (std::size_t p = 0; p < sweep.size(); ++p) {
    EXPECT_EQ(sweep[p].seed, derive_seed({4, p}));
    EXPECT_EQ(sweep[p].sigma, good[p]);
  }
  const std::vector<double> three = {0.4, 0.1, 0.01};
  const std::vector<double> narrow = {0.4, 0.3, 0.2, 0.1};
  const std::vector<double> negative = {0.4, 0.2, 0.0, 0.01};
  for (const auto* grid : {&three, &narrow, &negative}) {
    EXPECT_THROW(sweep_sigma(Strategy::kNaive, zero_vector(16), *grid, 30, 1),
                 std::invalid_argument);
  }
  const std::vector<std::size_t> dims3 = {8, 16, 32};
  EXPECT_THROW(sweep_dimension(Strategy::kNaive, 0.1, dims3, 30, 1), std::invalid_argument);
  const std::vector<std::size_t> dims = {8, 16, 32, 64};
  const auto bad_factory = [](std::size_t) { return zero_vector(3); };
  EXPECT_THROW(sweep_dimension(Strategy::kNaive, 0.1, dims, 30, 1, {}, bad_factory),
               std::invalid_argument);
}

TEST(SweepTest, UnperturbedBasisScalesAsSquareRootOfD) {
  std::vector<std::size_t> dims;
  for (std::size_t d = 16; d <= 16384; d *= 2) dims.push_back(d);
  const auto sweep = sweep_dimension(
      Strategy::kKnownAmplitudeAA, 0.0, dims, 30, 1, {}, [](std::size_t d) {
        return generate_vector("basis:" + std::to_string(d) + ":1");
      });
  const PowerLawFit fit = fit_dimension_sweep(sweep);
  EXPECT_NEAR(fit.exponent, 0.5, 0.1);
}

TEST(FitPowerLawTest, Examples) {
  std::vector<PowerLawPoint> sq, inv, flat;
  for (double s : {1.0, 2.0, 5.0, 10.0, 30.0}) {
    sq.push_back({s, s * s});
    inv.push_back({s, 7 / s});
    flat.push_back({s, 3.0});
  }
  const PowerLawFit a = fit_power_law(sq);
  EXPECT_NEAR(a.exponent, 2.0, 1e-9);
  EXPECT_NEAR(a.r_squared, 1.0, 1e-9);
  EXPECT_NEAR(a.log_prefactor, 0.0, 1e-9);
  const PowerLawFit b = fit_power_law(inv);
  EXPECT_NEAR(b.exponent, -1.0, 1e-9);
  EXPECT_NEAR(std::exp(b.log_prefactor), 7.0, 1e-9);
  const PowerLawFit c = fit_power_law(flat);
  EXPECT_NEAR(c.exponent, 0.0, 1e-9);
  EXPECT_EQ(c.r_squared, 1.0);
  EXPECT_EQ(c.n_points, 5u);
}

TEST(FitPowerLawTest, Errors) {
  const std::vector<PowerLawPoint> three = {{1, 1}, {2, 2}, {3, 3}};
  EXPECT_THROW(fit_power_law(three), std::invalid_argument);
  const std::vector<PowerLawPoint> nonpositive = {{1, 1}, {2, 0}, {3, 3}, {4, 4}};
  EXPECT_THROW(fit_power_law(nonpositive), std::invalid_argument);
  const std::vector<PowerLawPoint> same_scale = {{2, 1}, {2, 2}, {2, 3}, {2, 4}};
  EXPECT_THROW(fit_power_law(same_scale), std::invalid_argument);
}

TEST(CsvRowTest, EstimateAndFit) {
  PowerLawFit f;
  f.exponent = -1;
  f.log_prefactor = 0.5;
  f.r_squared = 1;
  f.n_points = 5;
  EXPECT_EQ(to_csv_row(f), "-1,0.5,1,5");
  SmoothedEstimate e;
  e.strategy = Strategy::kNaive;
  e.dimension = 8;
  e.sigma = 0.1;
  e.trials = 30;
  e.mean_queries = 2;
  e.seed = 3;
  EXPECT_EQ(to_csv_row(e), "naive,8,0.1,30,2,0,0,0,0,3");
}

}  // namespace
}  // namespace smoothprep
