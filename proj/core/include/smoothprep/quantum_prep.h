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

// Exact statevector simulation of amplitude encoding from an entry-wise
// oracle O_x |i>|j> = |i>|j + x_i>.
//
// The pipeline is: uniform superposition over i, one oracle call to load x_i
// into a value register, an ancilla rotation conditioned on that register,
// and a second oracle call to uncompute it. What remains is
//
//   D^{-1/2} sum_i |i> ( sqrt(1 - x_i^2) |0> + x_i |1> )
//
// and post-selecting the ancilla on |1> yields |x> = x / ||x||_2 with
// probability ||x||_2^2 / D. The value register is never materialised: it is
// back in |0> by the time anything else touches the state, so each index
// carries just the two ancilla amplitudes.
//
// Query accounting: one query is one application of O_x or its inverse.
// A preparation costs 2. One amplification iteration applies the preparation
// unitary and its inverse once each, so it costs 4.

#ifndef SMOOTHPREP_QUANTUM_PREP_H_
#define SMOOTHPREP_QUANTUM_PREP_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smoothprep/random.h"
#include "smoothprep/strategy.h"
#include "smoothprep/vectors.h"

namespace smoothprep {

using Amplitude = std::complex<double>;

inline constexpr std::uint64_t kQueriesPerPreparation = 2;
inline constexpr std::uint64_t kQueriesPerIteration = 4;

/// Above this dimension the automatic mode switches to closed-form
/// probabilities instead of holding the statevector.
inline constexpr std::size_t kStatevectorMaxDimension = std::size_t{1} << 22;

/// Ancilla amplitudes for one index register value.
struct AmplitudePair {
  Amplitude unmarked;  // ancilla |0>
  Amplitude marked;    // ancilla |1>, the post-selected branch
};

/// The 2D-amplitude joint state after oracle, rotation and uncompute. Norm 1
/// within 1e-12, checked on construction.
class PrepState {
 public:
  explicit PrepState(std::vector<AmplitudePair> pairs);

  std::span<const AmplitudePair> pairs() const noexcept { return pairs_; }
  std::size_t dimension() const noexcept { return pairs_.size(); }
  double norm() const;

 private:
  friend class AmplitudeAmplifier;
  std::vector<AmplitudePair> pairs_;
};

/// Normalised amplitudes proportional to x (up to one global phase).
class EncodedState {
 public:
  explicit EncodedState(std::vector<Amplitude> amplitudes);

  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

 private:
  std::vector<Amplitude> amplitudes_;
};

enum class SimulationMode {
  kAutomatic,    // statevector up to kStatevectorMaxDimension, analytic above
  kStatevector,  // always hold and evolve the amplitudes
  kAnalytic,     // closed forms only
};

struct PrepOptions {
  SimulationMode mode = SimulationMode::kAutomatic;
};

/// One preparation run. oracle_queries counts every O_x and O_x^dagger call.
struct TrialResult {
  Strategy strategy = Strategy::kNaive;
  std::size_t dimension = 0;
  std::uint64_t oracle_queries = 0;
  bool success = false;
  double success_probability_per_attempt = 0.0;
  double fidelity = 0.0;  // 0 when no state was produced
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kTrialCsvHeader =
    "strategy,D,queries,success,p_attempt,fidelity,seed";
std::string to_csv_row(const TrialResult& r);

// ---------------------------------------------------------------------------
// State-level operations.

/// Throws std::invalid_argument if any |x_i| > 1 (impossible for a
/// DataVector, kept for states built by hand).
PrepState prepare_raw_state(const DataVector& x);

/// Weight of the ancilla-|1> branch: sum_i |a_i1|^2 = ||x||^2 / D.
double success_probability(const PrepState& s);

/// ||x||^2 / D straight from the entries.
double success_probability(const DataVector& x);

/// Projects onto ancilla |1> and renormalises. Throws ZeroVectorError if that
/// branch is empty.
EncodedState postselect(const PrepState& s);

/// One generalised Grover iteration: multiply the good (ancilla |1>) branch by
/// e^{i beta}, then reflect about the prepared state A|0> with phase alpha,
/// i.e. apply I - (1 - e^{-i alpha}) |s><s|. The conjugate phase on the second
/// reflection is the convention the fixed-point phases are written for. At
/// alpha = beta = pi this is the standard Grover step up to global phase; at
/// alpha = beta = 0 it is the identity. `s` must lie in the span of A|0> and
/// its good component, which holds for anything produced by this module.
PrepState grover_iterate(const PrepState& s, const DataVector& x, double alpha, double beta);

/// |sum_i conj(e_i) x_i| / ||x||_2. Throws ZeroVectorError for x = 0.
double fidelity(const EncodedState& e, const DataVector& x);

/// Holds A|0> for one input and evolves a working copy in place, counting
/// oracle queries as operations are applied.
class AmplitudeAmplifier {
 public:
  /// Prepares A|0>; costs kQueriesPerPreparation.
  explicit AmplitudeAmplifier(const DataVector& x);

  void iterate(double alpha, double beta);

  const PrepState& state() const noexcept { return current_; }
  double good_probability() const { return success_probability(current_); }
  std::uint64_t oracle_queries() const noexcept { return queries_; }

 private:
  PrepState initial_;
  PrepState current_;
  std::uint64_t queries_ = 0;
};

// ---------------------------------------------------------------------------
// Amplification schedules and their closed forms.

/// floor(pi / (4 theta)) with theta = arcsin(sqrt(p)).
std::size_t grover_iteration_count(double p);

/// sin^2((2k + 1) theta).
double grover_success_probability(double p, std::size_t k);

/// Phases for fixed-point amplification that reach success >= 1 - delta^2 for
/// every initial probability >= lambda_min.
struct FixedPointSchedule {
  std::size_t sequence_length = 1;  // L, odd
  std::size_t iterations = 0;       // (L - 1) / 2
  double gamma = 0.0;
  std::vector<double> alphas;
  std::vector<double> betas;
};

/// L is the smallest odd integer >= ln(2/delta) / sqrt(lambda_min);
/// gamma = 1 / T_{1/L}(1/delta); alpha_j = -beta_{l-j+1} =
/// 2 arccot(tan(2 pi j / L) sqrt(1 - gamma^2)).
FixedPointSchedule fixed_point_schedule(double lambda_min, double delta);

/// Closed form of the final success probability,
/// 1 - delta^2 T_L(T_{1/L}(1/delta) sqrt(1 - p))^2.
double fixed_point_success_probability(const FixedPointSchedule& schedule, double delta,
                                       double p);

/// Chebyshev polynomial of the first kind for real degree, any real argument
/// >= -1 (the branch used by the fixed-point formulas).
double chebyshev_t(double degree, double x);

/// Number of independent Bernoulli(p) attempts up to and including the first
/// success, drawn by inversion from one uniform. p must be in (0, 1].
std::uint64_t geometric_attempts(double p, RngStream& rng);

// ---------------------------------------------------------------------------
// Strategies.

/// Prepare and post-select until the ancilla reads |1>. oracle_queries =
/// 2 * attempts. Throws ZeroVectorError for x = 0.
TrialResult run_naive(const DataVector& x, std::uint64_t seed, const PrepOptions& options = {});

/// One preparation followed by floor(pi / (4 theta)) standard Grover
/// iterations, then one measurement. Throws ZeroVectorError for x = 0.
TrialResult run_known_amplitude_aa(const DataVector& x, std::uint64_t seed = 0,
                                   const PrepOptions& options = {});

/// One preparation followed by the fixed-point phase sequence for
/// (lambda_min, delta), then one measurement. Throws PreconditionViolation if
/// the final success probability falls below 1 - delta^2, which means
/// lambda_min was not a lower bound for this input.
TrialResult run_fixed_point_aa(const DataVector& x, double lambda_min, double delta,
                               std::uint64_t seed = 0, const PrepOptions& options = {});

}  // namespace smoothprep

#endif  // SMOOTHPREP_QUANTUM_PREP_H_
