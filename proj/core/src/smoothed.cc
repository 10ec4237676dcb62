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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "smoothprep/csv.h"
#include "smoothprep/errors.h"
#include "smoothprep/parallel.h"
#include "smoothprep/random.h"

namespace smoothprep {
namespace {

constexpr std::uint64_t kPerturbTag = 1;
constexpr std::uint64_t kStrategyTag = 2;
constexpr std::uint64_t kRetryStream = 0x72657472;  // "retr"

double mean_of(std::span<const double> values) {
  return pairwise_sum(values) / static_cast<double>(values.size());
}

PowerLawFit fit_sweep(std::span<const SmoothedEstimate> sweep, bool by_sigma) {
  std::vector<PowerLawPoint> points;
  points.reserve(sweep.size());
  for (const auto& e : sweep) {
    points.push_back({by_sigma ? e.sigma : static_cast<double>(e.dimension), e.mean_queries});
  }
  return fit_power_law(points);
}

}  // namespace

std::string to_csv_row(const SmoothedEstimate& e) {
  return join_csv({std::string(to_string(e.strategy)), std::to_string(e.dimension),
                   format_real(e.sigma), std::to_string(e.trials), format_real(e.mean_queries),
                   format_real(e.stderr_queries), format_real(e.mean_inverse_p),
                   format_real(e.inverse_mean_p), format_real(e.clip_fraction),
                   std::to_string(e.seed)});
}

std::string to_csv_row(const PowerLawFit& f) {
  return join_csv({format_real(f.exponent), format_real(f.log_prefactor),
                   format_real(f.r_squared), std::to_string(f.n_points)});
}

double chi_mean(std::size_t dimension, double sigma) {
  if (dimension == 0) throw std::invalid_argument("chi_mean: dimension must be >= 1");
  if (!(sigma >= 0.0)) throw std::invalid_argument("chi_mean: sigma must be >= 0");
  const double d = static_cast<double>(dimension);
  return std::sqrt(2.0) * sigma * std::exp(std::lgamma((d + 1.0) / 2.0) - std::lgamma(d / 2.0));
}

void check_finite_mean(Strategy strategy, std::size_t dimension, double sigma) {
  if (sigma == 0.0) return;
  const bool inverse_square =
      strategy == Strategy::kNaive || strategy == Strategy::kClassicalRejection;
  const std::size_t min_dim = inverse_square ? 3 : 2;
  if (dimension < min_dim) {
    throw DivergentMeanError(
        std::string("divergent mean: ") + std::string(to_string(strategy)) +
        " runtime scales as 1/||x+g||" + (inverse_square ? "^2" : "") +
        ", whose expectation is infinite for D < " + std::to_string(min_dim) +
        " (got D = " + std::to_string(dimension) + ")");
  }
}

std::uint64_t queries_until_success(Strategy strategy, const DataVector& input,
                                    std::uint64_t seed, const HarnessOptions& options) {
  const PrepOptions prep{options.mode};
  auto repeat = [&](const TrialResult& first) {
    if (first.success) return first.oracle_queries;
    RngStream rng(derive_seed({seed, kRetryStream}));
    return first.oracle_queries *
           (1 + geometric_attempts(first.success_probability_per_attempt, rng));
  };
  switch (strategy) {
    case Strategy::kNaive:
      return run_naive(input, seed, prep).oracle_queries;
    case Strategy::kKnownAmplitudeAA:
      return repeat(run_known_amplitude_aa(input, seed, prep));
    case Strategy::kFixedPointAA:
      return repeat(
          run_fixed_point_aa(input, options.lambda_min, options.delta, seed, prep));
    case Strategy::kClassicalRejection:
      return l2_sample(input, {options.entry_bound, seed, options.max_queries}).queries;
  }
  throw std::invalid_argument("unknown strategy");
}

SmoothedEstimate estimate_smoothed(Strategy strategy, const DataVector& x, double sigma,
                                   std::size_t trials, std::uint64_t seed,
                                   const HarnessOptions& options) {
  if (trials < kMinTrials) {
    throw std::invalid_argument("estimate_smoothed needs at least " +
                                std::to_string(kMinTrials) + " trials, got " +
                                std::to_string(trials));
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("sigma must be a finite nonnegative real");
  }
  if (x.provenance() != Provenance::kRaw) {
    throw std::invalid_argument("estimate_smoothed perturbs its input, which must be raw");
  }
  if (strategy == Strategy::kFixedPointAA && !(options.lambda_min > 0.0)) {
    throw std::invalid_argument("fixed-point-aa needs lambda_min > 0");
  }
  check_finite_mean(strategy, x.dimension(), sigma);

  std::vector<double> queries(trials);
  std::vector<double> probability(trials);
  std::vector<double> clamped(trials);
  parallel_for(trials, options.threads, [&](std::size_t t) {
    const DataVector input =
        perturb(x, {sigma, derive_seed({seed, static_cast<std::uint64_t>(t), kPerturbTag})});
    if (input.is_zero()) throw ZeroVectorError();
    queries[t] = static_cast<double>(queries_until_success(
        strategy, input, derive_seed({seed, static_cast<std::uint64_t>(t), kStrategyTag}),
        options));
    probability[t] = success_probability(input);
    clamped[t] = static_cast<double>(input.clamped_entries());
  });

  SmoothedEstimate e;
  e.strategy = strategy;
  e.dimension = x.dimension();
  e.sigma = sigma;
  e.trials = trials;
  e.seed = seed;
  e.mean_queries = mean_of(queries);

  std::vector<double> scratch(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const double dev = queries[t] - e.mean_queries;
    scratch[t] = dev * dev;
  }
  const double n = static_cast<double>(trials);
  e.stderr_queries = std::sqrt(pairwise_sum(scratch) / (n - 1.0) / n);

  for (std::size_t t = 0; t < trials; ++t) scratch[t] = 1.0 / probability[t];
  e.mean_inverse_p = mean_of(scratch);
  e.inverse_mean_p = 1.0 / mean_of(probability);
  e.clip_fraction = pairwise_sum(clamped) / (n * static_cast<double>(x.dimension()));
  return e;
}

std::vector<SmoothedEstimate> sweep_sigma(Strategy strategy, const DataVector& x,
                                          std::span<const double> sigmas, std::size_t trials,
                                          std::uint64_t seed, const HarnessOptions& options) {
  if (sigmas.size() < 4) throw std::invalid_argument("sigma sweep needs at least 4 values");
  for (double s : sigmas) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw std::invalid_argument("sigma sweep values must be strictly positive");
    }
  }
  const auto [lo, hi] = std::minmax_element(sigmas.begin(), sigmas.end());
  if (*hi < 10.0 * *lo) {
    throw std::invalid_argument("sigma sweep must span at least one decade");
  }
  std::vector<SmoothedEstimate> out;
  out.reserve(sigmas.size());
  for (std::size_t p = 0; p < sigmas.size(); ++p) {
    out.push_back(estimate_smoothed(strategy, x, sigmas[p], trials,
                                    derive_seed({seed, static_cast<std::uint64_t>(p)}), options));
  }
  return out;
}

DataVector zero_vector(std::size_t dimension) {
  return DataVector(std::vector<double>(dimension, 0.0));
}

std::vector<SmoothedEstimate> sweep_dimension(Strategy strategy, double sigma,
                                              std::span<const std::size_t> dims,
                                              std::size_t trials, std::uint64_t seed,
                                              const HarnessOptions& options,
                                              const VectorFactory& make_input) {
  if (dims.size() < 4) throw std::invalid_argument("dimension sweep needs at least 4 values");
  std::vector<SmoothedEstimate> out;
  out.reserve(dims.size());
  for (std::size_t p = 0; p < dims.size(); ++p) {
    const DataVector x = make_input(dims[p]);
    if (x.dimension() != dims[p]) {
      throw std::invalid_argument("input factory returned the wrong dimension");
    }
    out.push_back(estimate_smoothed(strategy, x, sigma, trials,
                                    derive_seed({seed, static_cast<std::uint64_t>(p)}), options));
  }
  return out;
}

PowerLawFit fit_power_law(std::span<const PowerLawPoint> points) {
  if (points.size() < 4) throw std::invalid_argument("power-law fit needs at least 4 points");
  std::vector<double> lx, ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (const auto& p : points) {
    if (!(p.scale > 0.0) || !(p.value > 0.0)) {
      throw std::invalid_argument("power-law fit needs strictly positive scales and values");
    }
    lx.push_back(std::log(p.scale));
    ly.push_back(std::log(p.value));
  }
  const double mx = mean_of(lx);
  const double my = mean_of(ly);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("power-law fit needs two distinct scales");

  PowerLawFit fit;
  fit.n_points = points.size();
  fit.exponent = sxy / sxx;
  fit.log_prefactor = my - fit.exponent * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (fit.log_prefactor + fit.exponent * lx[i]);
    ss_res += r * r;
  }
  // A constant series has syy = 0 and fits exactly.
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return fit;
}

PowerLawFit fit_sigma_sweep(std::span<const SmoothedEstimate> sweep) {
  return fit_sweep(sweep, true);
}

PowerLawFit fit_dimension_sweep(std::span<const SmoothedEstimate> sweep) {
  return fit_sweep(sweep, false);
}

}  // namespace smoothprep
