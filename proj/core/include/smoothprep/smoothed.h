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

// Monte Carlo estimates of smoothed complexity: for a fixed input x, the
// expectation over g ~ N(0, sigma^2 I) of the number of queries a strategy
// spends before it succeeds on x + g. The default input is x = 0, the
// worst case, where x + g is pure noise and ||g||_2 follows a chi
// distribution.
//
// Each estimate reports two readings of the success probability P = ||x+g||^2/D:
// the mean of 1/P (what repeat-until-success actually costs) and the
// reciprocal of the mean of P. They differ by a Jensen gap, and
// mean_inverse_p >= inverse_mean_p holds on every sample.

#ifndef SMOOTHPREP_SMOOTHED_H_
#define SMOOTHPREP_SMOOTHED_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smoothprep/classical_sampler.h"
#include "smoothprep/quantum_prep.h"
#include "smoothprep/strategy.h"
#include "smoothprep/vectors.h"

namespace smoothprep {

inline constexpr std::size_t kMinTrials = 30;
inline constexpr std::size_t kDefaultTrials = 2000;

/// Grid points whose clip fraction exceeds this are flagged by the CLI.
inline constexpr double kMaxClipFraction = 0.01;

struct SmoothedEstimate {
  Strategy strategy = Strategy::kNaive;
  std::size_t dimension = 0;
  double sigma = 0.0;
  std::size_t trials = 0;
  double mean_queries = 0.0;
  double stderr_queries = 0.0;
  double mean_inverse_p = 0.0;
  double inverse_mean_p = 0.0;
  double clip_fraction = 0.0;  // clamped entries / (trials * D)
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kSmoothedCsvHeader =
    "strategy,D,sigma,trials,mean_queries,stderr,mean_inv_p,inv_mean_p,clip_fraction,seed";
std::string to_csv_row(const SmoothedEstimate& e);

struct PowerLawPoint {
  double scale = 0.0;
  double value = 0.0;
};

/// log(value) = exponent * log(scale) + log_prefactor.
struct PowerLawFit {
  double exponent = 0.0;
  double log_prefactor = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
};

inline constexpr std::string_view kFitCsvHeader = "exponent,log_prefactor,r2,n_points";
std::string to_csv_row(const PowerLawFit& f);

struct HarnessOptions {
  double lambda_min = 0.0;  // fixed-point-aa only; must be set for it
  double delta = 0.1;       // fixed-point-aa only
  double entry_bound = 1.0;
  std::uint64_t max_queries = kDefaultMaxQueries;
  SimulationMode mode = SimulationMode::kAutomatic;
  unsigned threads = 0;  // 0: one per hardware thread
};

/// E||g||_2 for g ~ N(0, sigma^2 I_D): sqrt(2) sigma Gamma((D+1)/2) / Gamma(D/2),
/// evaluated through lgamma.
double chi_mean(std::size_t dimension, double sigma);

/// Queries spent by `strategy` on `input` until it succeeds: naive and the
/// classical sampler succeed by construction; the amplified strategies repeat
/// their single-shot run until a measurement succeeds.
std::uint64_t queries_until_success(Strategy strategy, const DataVector& input,
                                    std::uint64_t seed, const HarnessOptions& options = {});

/// Throws DivergentMeanError when E[T] is infinite for this (strategy, D):
/// D < 3 for naive and classical-rejection (runtime ~ 1/||g||^2) and D < 2
/// for the amplified strategies (runtime ~ 1/||g||). sigma = 0 never
/// diverges.
void check_finite_mean(Strategy strategy, std::size_t dimension, double sigma);

/// Trial t perturbs x with seed derive_seed({seed, t, 1}) and runs the
/// strategy with seed derive_seed({seed, t, 2}). Bit-identical for identical
/// arguments regardless of options.threads. sigma = 0 runs every trial on x
/// itself.
///
/// Throws std::invalid_argument for trials < kMinTrials, a negative sigma or
/// a non-raw x; DivergentMeanError per check_finite_mean; ZeroVectorError
/// when a trial input is exactly zero.
SmoothedEstimate estimate_smoothed(Strategy strategy, const DataVector& x, double sigma,
                                   std::size_t trials, std::uint64_t seed,
                                   const HarnessOptions& options = {});

/// One estimate per sigma. Point p uses seed derive_seed({seed, p}).
/// Requires at least 4 strictly positive sigmas spanning a factor >= 10.
std::vector<SmoothedEstimate> sweep_sigma(Strategy strategy, const DataVector& x,
                                          std::span<const double> sigmas, std::size_t trials,
                                          std::uint64_t seed, const HarnessOptions& options = {});

/// Builds the input for one dimension of a dimension sweep.
using VectorFactory = std::function<DataVector(std::size_t)>;

/// zero(D).
DataVector zero_vector(std::size_t dimension);

/// One estimate per dimension, input make_input(D). Point p uses seed
/// derive_seed({seed, p}). Requires at least 4 dimensions.
std::vector<SmoothedEstimate> sweep_dimension(Strategy strategy, double sigma,
                                              std::span<const std::size_t> dims,
                                              std::size_t trials, std::uint64_t seed,
                                              const HarnessOptions& options = {},
                                              const VectorFactory& make_input = zero_vector);

/// Ordinary least squares of log(value) on log(scale). Needs >= 4 points,
/// all positive, with at least two distinct scales.
PowerLawFit fit_power_law(std::span<const PowerLawPoint> points);

/// Fits mean_queries against sigma.
PowerLawFit fit_sigma_sweep(std::span<const SmoothedEstimate> sweep);

/// Fits mean_queries against D.
PowerLawFit fit_dimension_sweep(std::span<const SmoothedEstimate> sweep);

}  // namespace smoothprep

#endif  // SMOOTHPREP_SMOOTHED_H_
