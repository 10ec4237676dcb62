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

// Input vectors in [-1, 1]^D, their Gaussian perturbation, and the standard /
// offset / noise-offset rounding conventions.

#ifndef SMOOTHPREP_VECTORS_H_
#define SMOOTHPREP_VECTORS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smoothprep {

enum class Provenance {
  kRaw,
  kPerturbed,
  kRoundedStandard,
  kRoundedOffset,
  kNoiseOffset,
};

std::string_view to_string(Provenance p);

/// A real vector with every entry in [-1, 1] and a record of how it was made.
///
/// Immutable once built. The only legal derivations are
///   raw -> perturbed -> {rounded-standard, rounded-offset, noise-offset}
///   raw -> {rounded-standard, rounded-offset, noise-offset}
/// and the transforming functions below enforce that.
class DataVector {
 public:
  /// Throws std::invalid_argument if `entries` is empty or holds a NaN, and
  /// OutOfRangeError if any |entry| > 1.
  explicit DataVector(std::vector<double> entries,
                      Provenance provenance = Provenance::kRaw,
                      std::size_t clamped_entries = 0);

  std::span<const double> entries() const noexcept { return entries_; }
  std::size_t dimension() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const noexcept { return entries_[i]; }
  Provenance provenance() const noexcept { return provenance_; }

  /// Entries that were clipped back to the [-1, 1] box when this vector was
  /// produced by perturb(). Zero for every other provenance.
  std::size_t clamped_entries() const noexcept { return clamped_; }

  /// Sum of squares.
  double squared_norm() const noexcept;
  double max_abs() const noexcept;
  bool is_zero() const noexcept;

 private:
  std::vector<double> entries_;
  Provenance provenance_;
  std::size_t clamped_;
};

struct GaussianPerturbation {
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

enum class RoundingMode { kStandard, kOffset, kStochasticOffset };

std::string_view to_string(RoundingMode m);
std::optional<RoundingMode> parse_rounding_mode(std::string_view name);

struct RoundingConvention {
  RoundingMode mode = RoundingMode::kOffset;
  double epsilon = 0.1;
  std::uint64_t master_seed = 0;  // stochastic-offset only
};

// ---------------------------------------------------------------------------
// Loading.

/// Parses a generator spec: `zero:D`, `basis:D:i` (1-based i), `ones:D`,
/// `uniform:D:seed`, `sparse:D:k:seed`. Throws std::invalid_argument on a
/// malformed spec or D = 0.
DataVector generate_vector(std::string_view spec);

/// True if `spec` starts with one of the generator names followed by ':'.
bool is_generator_spec(std::string_view spec);

/// Reads one decimal real per line. Blank lines and lines whose first
/// non-space character is '#' are skipped. Throws InputError if the file
/// cannot be read or a line does not parse, OutOfRangeError for an entry
/// outside [-1, 1], and std::invalid_argument for an empty file.
DataVector read_vector_file(const std::filesystem::path& path);

/// Generator spec if it looks like one, file path otherwise.
DataVector load_vector(std::string_view source);

// ---------------------------------------------------------------------------
// Transformations.

/// x + g with g_i ~ N(0, sigma^2) i.i.d., each entry clipped to [-1, 1].
/// The draw for entry i depends only on (p.seed, i). Requires a raw input.
DataVector perturb(const DataVector& x, const GaussianPerturbation& p);

/// Nearest integer multiple of epsilon, ties away from zero.
DataVector round_standard(const DataVector& x, double epsilon);

/// Nearest half-integer multiple of epsilon: epsilon * (floor(x/epsilon) + 1/2).
/// No output entry is zero; every |x'_i| >= epsilon / 2.
DataVector round_offset(const DataVector& x, double epsilon);

/// x_i + w_i with w_i ~ Uniform[-epsilon/2, epsilon/2] drawn from
/// (master_seed, i) alone, so the same location always gets the same offset.
DataVector apply_white_noise_offset(const DataVector& x, double epsilon,
                                    std::uint64_t master_seed);

/// Dispatches on convention.mode.
DataVector apply_rounding(const DataVector& x, const RoundingConvention& convention);

/// Scalar rules shared with the vector versions.
double round_standard_scalar(double value, double epsilon);
double round_offset_scalar(double value, double epsilon);

}  // namespace smoothprep

#endif  // SMOOTHPREP_VECTORS_H_
