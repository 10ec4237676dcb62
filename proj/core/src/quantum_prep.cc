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

#include "smoothprep/quantum_prep.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "smoothprep/csv.h"
#include "smoothprep/errors.h"

namespace smoothprep {
namespace {

constexpr double kNormTolerance = 1e-12;
constexpr std::uint64_t kMeasureStream = 0x6d656173;  // "meas"

bool use_statevector(const DataVector& x, const PrepOptions& options) {
  switch (options.mode) {
    case SimulationMode::kStatevector: return true;
    case SimulationMode::kAnalytic: return false;
    case SimulationMode::kAutomatic: return x.dimension() <= kStatevectorMaxDimension;
  }
  return true;
}

void require_nonzero(const DataVector& x) {
  if (x.is_zero()) throw ZeroVectorError();
}

bool measure(double p, std::uint64_t seed) {
  RngStream rng(derive_seed({seed, kMeasureStream}));
  return rng.uniform() < p;
}

double postselected_fidelity(const PrepState& s, const DataVector& x) {
  return fidelity(postselect(s), x);
}

// psi <- (I - (1 - e^{-i alpha}) |ref><ref|) S_good(beta) psi
void apply_iteration(std::span<AmplitudePair> psi, std::span<const AmplitudePair> ref,
                     double alpha, double beta) {
  const Amplitude good_phase = std::polar(1.0, beta);
  const Amplitude reflect = 1.0 - std::polar(1.0, -alpha);
  Amplitude overlap = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    psi[i].marked *= good_phase;
    overlap += std::conj(ref[i].unmarked) * psi[i].unmarked +
               std::conj(ref[i].marked) * psi[i].marked;
  }
  const Amplitude c = reflect * overlap;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    psi[i].unmarked -= c * ref[i].unmarked;
    psi[i].marked -= c * ref[i].marked;
  }
}

}  // namespace

PrepState::PrepState(std::vector<AmplitudePair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("state dimension must be >= 1");
  const double n = norm();
  if (std::abs(n * n - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalised: squared norm " +
                                format_real(n * n));
  }
}

double PrepState::norm() const {
  double sum = 0.0;
  for (const auto& p : pairs_) sum += std::norm(p.unmarked) + std::norm(p.marked);
  return std::sqrt(sum);
}

EncodedState::EncodedState(std::vector<Amplitude> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw std::invalid_argument("state dimension must be >= 1");
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw std::invalid_argument("encoded state is not normalised");
  }
}

std::string to_csv_row(const TrialResult& r) {
  return join_csv({std::string(to_string(r.strategy)), std::to_string(r.dimension),
                   std::to_string(r.oracle_queries), r.success ? "true" : "false",
                   format_real(r.success_probability_per_attempt), format_real(r.fidelity),
                   std::to_string(r.seed)});
}

// ---------------------------------------------------------------------------

PrepState prepare_raw_state(const DataVector& x) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(x.dimension()));
  std::vector<AmplitudePair> pairs(x.dimension());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double v = x[i];
    if (std::abs(v) > 1.0) throw std::invalid_argument("entry outside [-1, 1]");
    pairs[i] = {std::sqrt(1.0 - v * v) * scale, v * scale};
  }
  return PrepState(std::move(pairs));
}

double success_probability(const PrepState& s) {
  double p = 0.0;
  for (const auto& pair : s.pairs()) p += std::norm(pair.marked);
  return std::min(p, 1.0);
}

double success_probability(const DataVector& x) {
  return x.squared_norm() / static_cast<double>(x.dimension());
}

EncodedState postselect(const PrepState& s) {
  const double p = success_probability(s);
  if (!(p > 0.0)) throw ZeroVectorError();
  const double inv = 1.0 / std::sqrt(p);
  std::vector<Amplitude> out(s.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.pairs()[i].marked * inv;
  return EncodedState(std::move(out));
}

double fidelity(const EncodedState& e, const DataVector& x) {
  if (e.dimension() != x.dimension()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  require_nonzero(x);
  Amplitude overlap = 0.0;
  for (std::size_t i = 0; i < x.dimension(); ++i) overlap += std::conj(e.amplitudes()[i]) * x[i];
  return std::min(1.0, std::abs(overlap) / std::sqrt(x.squared_norm()));
}

AmplitudeAmplifier::AmplitudeAmplifier(const DataVector& x)
    : initial_(prepare_raw_state(x)), current_(initial_), queries_(kQueriesPerPreparation) {}

void AmplitudeAmplifier::iterate(double alpha, double beta) {
  apply_iteration(current_.pairs_, initial_.pairs_, alpha, beta);
  queries_ += kQueriesPerIteration;
}

PrepState grover_iterate(const PrepState& s, const DataVector& x, double alpha, double beta) {
  if (s.dimension() != x.dimension()) {
    throw std::invalid_argument("grover_iterate: dimension mismatch");
  }
  const PrepState initial = prepare_raw_state(x);
  std::vector<AmplitudePair> psi(s.pairs().begin(), s.pairs().end());
  apply_iteration(psi, initial.pairs(), alpha, beta);
  return PrepState(std::move(psi));
}

// ---------------------------------------------------------------------------

std::size_t grover_iteration_count(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in (0, 1]");
  const double theta = std::asin(std::sqrt(p));
  return static_cast<std::size_t>(std::floor(std::numbers::pi / (4.0 * theta)));
}

double grover_success_probability(double p, std::size_t k) {
  const double theta = std::asin(std::sqrt(p));
  const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
  return s * s;
}

double chebyshev_t(double degree, double x) {
  if (x >= -1.0 && x <= 1.0) return std::cos(degree * std::acos(x));
  if (x > 1.0) return std::cosh(degree * std::acosh(x));
  throw std::invalid_argument("chebyshev_t: argument below -1");
}

FixedPointSchedule fixed_point_schedule(double lambda_min, double delta) {
  if (!(lambda_min > 0.0 && lambda_min <= 1.0)) {
    throw std::invalid_argument("lambda_min must lie in (0, 1]");
  }
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");

  FixedPointSchedule s;
  const double bound = std::log(2.0 / delta) / std::sqrt(lambda_min);
  auto length = static_cast<std::size_t>(std::ceil(bound));
  if (length % 2 == 0) ++length;
  s.sequence_length = std::max<std::size_t>(length, 1);
  s.iterations = (s.sequence_length - 1) / 2;
  const double big_l = static_cast<double>(s.sequence_length);
  s.gamma = 1.0 / chebyshev_t(1.0 / big_l, 1.0 / delta);

  const double root = std::sqrt(1.0 - s.gamma * s.gamma);
  s.alphas.resize(s.iterations);
  s.betas.resize(s.iterations);
  for (std::size_t j = 1; j <= s.iterations; ++j) {
    const double t = std::tan(2.0 * std::numbers::pi * static_cast<double>(j) / big_l) * root;
    const double alpha = 2.0 * std::atan2(1.0, t);  // 2 arccot(t)
    s.alphas[j - 1] = alpha;
    s.betas[s.iterations - j] = -alpha;
  }
  return s;
}

double fixed_point_success_probability(const FixedPointSchedule& schedule, double delta,
                                       double p) {
  const double big_l = static_cast<double>(schedule.sequence_length);
  const double arg = chebyshev_t(1.0 / big_l, 1.0 / delta) * std::sqrt(std::max(0.0, 1.0 - p));
  const double t = chebyshev_t(big_l, arg);
  return std::clamp(1.0 - delta * delta * t * t, 0.0, 1.0);
}

std::uint64_t geometric_attempts(double p, RngStream& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in (0, 1]");
  const double u = rng.uniform_open_zero();
  if (p >= 1.0) return 1;
  const double failures = std::floor(std::log(u) / std::log1p(-p));
  constexpr double kCap = 0x1.0p62;
  return 1 + static_cast<std::uint64_t>(std::min(failures, kCap));
}

// ---------------------------------------------------------------------------

TrialResult run_naive(const DataVector& x, std::uint64_t seed, const PrepOptions& options) {
  require_nonzero(x);
  TrialResult r;
  r.strategy = Strategy::kNaive;
  r.dimension = x.dimension();
  r.seed = seed;

  double fid = 1.0;
  if (use_statevector(x, options)) {
    const PrepState s = prepare_raw_state(x);
    r.success_probability_per_attempt = success_probability(s);
    fid = postselected_fidelity(s, x);
  } else {
    r.success_probability_per_attempt = success_probability(x);
  }
  RngStream rng(derive_seed({seed, kMeasureStream}));
  const std::uint64_t attempts = geometric_attempts(r.success_probability_per_attempt, rng);
  r.oracle_queries = kQueriesPerPreparation * attempts;
  r.success = true;
  r.fidelity = fid;
  return r;
}

TrialResult run_known_amplitude_aa(const DataVector& x, std::uint64_t seed,
                                   const PrepOptions& options) {
  require_nonzero(x);
  TrialResult r;
  r.strategy = Strategy::kKnownAmplitudeAA;
  r.dimension = x.dimension();
  r.seed = seed;

  if (use_statevector(x, options)) {
    AmplitudeAmplifier amp(x);
    const std::size_t k = grover_iteration_count(amp.good_probability());
    for (std::size_t j = 0; j < k; ++j) amp.iterate(std::numbers::pi, std::numbers::pi);
    r.oracle_queries = amp.oracle_queries();
    r.success_probability_per_attempt = amp.good_probability();
    r.success = measure(r.success_probability_per_attempt, seed);
    r.fidelity = r.success ? postselected_fidelity(amp.state(), x) : 0.0;
  } else {
    const double p = success_probability(x);
    const std::size_t k = grover_iteration_count(p);
    r.oracle_queries = kQueriesPerPreparation + kQueriesPerIteration * k;
    r.success_probability_per_attempt = grover_success_probability(p, k);
    r.success = measure(r.success_probability_per_attempt, seed);
    r.fidelity = r.success ? 1.0 : 0.0;
  }
  return r;
}

TrialResult run_fixed_point_aa(const DataVector& x, double lambda_min, double delta,
                               std::uint64_t seed, const PrepOptions& options) {
  require_nonzero(x);
  const FixedPointSchedule schedule = fixed_point_schedule(lambda_min, delta);
  TrialResult r;
  r.strategy = Strategy::kFixedPointAA;
  r.dimension = x.dimension();
  r.seed = seed;

  std::optional<AmplitudeAmplifier> amp;
  if (use_statevector(x, options)) {
    amp.emplace(x);
    for (std::size_t j = 0; j < schedule.iterations; ++j) {
      amp->iterate(schedule.alphas[j], schedule.betas[j]);
    }
    r.oracle_queries = amp->oracle_queries();
    r.success_probability_per_attempt = amp->good_probability();
  } else {
    r.oracle_queries = kQueriesPerPreparation + kQueriesPerIteration * schedule.iterations;
    r.success_probability_per_attempt =
        fixed_point_success_probability(schedule, delta, success_probability(x));
  }

  const double guarantee = 1.0 - delta * delta;
  if (r.success_probability_per_attempt < guarantee - kNormTolerance) {
    throw PreconditionViolation(
        "fixed-point amplification reached success probability " +
        format_real(r.success_probability_per_attempt) + " < 1 - delta^2 = " +
        format_real(guarantee) + "; lambda_min = " + format_real(lambda_min) +
        " is not a lower bound for this input (P = " + format_real(success_probability(x)) +
        ")");
  }
  r.success = measure(r.success_probability_per_attempt, seed);
  if (r.success) r.fidelity = amp ? postselected_fidelity(amp->state(), x) : 1.0;
  return r;
}

}  // namespace smoothprep
