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

#include <cmath>
#include <stdexcept>

#include "smoothprep/csv.h"
#include "smoothprep/errors.h"
#include "smoothprep/parallel.h"
#include "smoothprep/random.h"

namespace smoothprep {
namespace {

constexpr std::uint64_t kSampleStream = 0x6c32736d;  // "l2sm"

void require_nonzero(const DataVector& x) {
  if (x.is_zero()) throw ZeroVectorError();
}

}  // namespace

std::string to_csv_row(const SampleResult& r, std::uint64_t seed) {
  return join_csv({std::to_string(r.index), std::to_string(r.queries), std::to_string(seed)});
}

SampleResult l2_sample(const DataVector& x, const SamplerConfig& config) {
  require_nonzero(x);
  const double c = config.entry_bound;
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("entry bound c must be a positive real");
  }
  if (c < x.max_abs()) {
    throw std::invalid_argument("entry bound c = " + format_real(c) +
                                " is below max |x_i| = " + format_real(x.max_abs()));
  }
  if (config.max_queries == 0) throw std::invalid_argument("max_queries must be >= 1");

  const double c2 = c * c;
  const auto d = static_cast<std::uint64_t>(x.dimension());
  RngStream rng(derive_seed({config.seed, kSampleStream}));
  for (std::uint64_t reads = 1; reads <= config.max_queries; ++reads) {
    const std::uint64_t j = rng.below(d);
    const double v = x[j];
    if (c2 * rng.uniform() < v * v) return {static_cast<std::size_t>(j + 1), reads};
  }
  throw QueryBudgetExceeded("no sample accepted within " + std::to_string(config.max_queries) +
                            " reads (expected " + format_real(expected_queries(x, c)) + ")");
}

std::vector<double> l2_distribution(const DataVector& x) {
  require_nonzero(x);
  const double total = x.squared_norm();
  std::vector<double> p(x.dimension());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = x[j] * x[j] / total;
  return p;
}

double expected_queries(const DataVector& x, double entry_bound) {
  require_nonzero(x);
  return static_cast<double>(x.dimension()) * entry_bound * entry_bound / x.squared_norm();
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("total_variation: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

std::vector<double> empirical_distribution(const DataVector& x, const SamplerConfig& config,
                                           std::size_t samples, unsigned threads) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  std::vector<std::size_t> picks(samples);
  parallel_for(samples, threads, [&](std::size_t s) {
    SamplerConfig cfg = config;
    cfg.seed = derive_seed({config.seed, s});
    picks[s] = l2_sample(x, cfg).index;
  });
  std::vector<double> freq(x.dimension(), 0.0);
  for (std::size_t j : picks) freq[j - 1] += 1.0;
  for (double& f : freq) f /= static_cast<double>(samples);
  return freq;
}

}  // namespace smoothprep
