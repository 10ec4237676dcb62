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

#include "smoothprep/vectors.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "smoothprep/errors.h"
#include "smoothprep/parallel.h"
#include "smoothprep/random.h"

namespace smoothprep {
namespace {

constexpr std::uint64_t kPerturbStream = 0x70657274;  // "pert"
constexpr std::uint64_t kOffsetStream = 0x6f666673;   // "offs"

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1], got " +
                                std::to_string(epsilon));
  }
}

void check_can_round(const DataVector& x) {
  if (x.provenance() != Provenance::kRaw && x.provenance() != Provenance::kPerturbed) {
    throw std::invalid_argument(std::string("cannot round a vector that is already ") +
                                std::string(to_string(x.provenance())));
  }
}

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_uint(std::string_view field, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw std::invalid_argument("generator spec: bad " + std::string(what) + " '" +
                                std::string(field) + "'");
  }
  return value;
}

std::size_t parse_dimension(std::string_view field) {
  const std::uint64_t d = parse_uint(field, "dimension");
  if (d == 0) throw std::invalid_argument("generator spec: dimension must be >= 1");
  return static_cast<std::size_t>(d);
}

void expect_arity(const std::vector<std::string_view>& parts, std::size_t n,
                  std::string_view usage) {
  if (parts.size() != n) {
    throw std::invalid_argument("generator spec: expected " + std::string(usage));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kRaw: return "raw";
    case Provenance::kPerturbed: return "perturbed";
    case Provenance::kRoundedStandard: return "rounded-standard";
    case Provenance::kRoundedOffset: return "rounded-offset";
    case Provenance::kNoiseOffset: return "noise-offset";
  }
  return "unknown";
}

std::string_view to_string(RoundingMode m) {
  switch (m) {
    case RoundingMode::kStandard: return "standard";
    case RoundingMode::kOffset: return "offset";
    case RoundingMode::kStochasticOffset: return "stochastic-offset";
  }
  return "unknown";
}

std::optional<RoundingMode> parse_rounding_mode(std::string_view name) {
  if (name == "standard") return RoundingMode::kStandard;
  if (name == "offset") return RoundingMode::kOffset;
  if (name == "stochastic-offset") return RoundingMode::kStochasticOffset;
  return std::nullopt;
}

DataVector::DataVector(std::vector<double> entries, Provenance provenance,
                       std::size_t clamped_entries)
    : entries_(std::move(entries)), provenance_(provenance), clamped_(clamped_entries) {
  if (entries_.empty()) throw std::invalid_argument("vector dimension must be >= 1");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double e = entries_[i];
    if (std::isnan(e)) {
      throw std::invalid_argument("entry " + std::to_string(i + 1) + " is NaN");
    }
    if (std::abs(e) > 1.0) {
      throw OutOfRangeError("entry " + std::to_string(i + 1) + " = " + std::to_string(e) +
                            " lies outside [-1, 1]");
    }
  }
}

double DataVector::squared_norm() const noexcept {
  std::vector<double> squares(entries_.size());
  std::transform(entries_.begin(), entries_.end(), squares.begin(),
                 [](double e) { return e * e; });
  return pairwise_sum(squares);
}

double DataVector::max_abs() const noexcept {
  double m = 0.0;
  for (double e : entries_) m = std::max(m, std::abs(e));
  return m;
}

bool DataVector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](double e) { return e == 0.0; });
}

// ---------------------------------------------------------------------------

bool is_generator_spec(std::string_view spec) {
  for (std::string_view name : {"zero:", "basis:", "ones:", "uniform:", "sparse:"}) {
    if (spec.starts_with(name)) return true;
  }
  return false;
}

DataVector generate_vector(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view kind = parts.front();

  if (kind == "zero") {
    expect_arity(parts, 2, "zero:D");
    return DataVector(std::vector<double>(parse_dimension(parts[1]), 0.0));
  }
  if (kind == "ones") {
    expect_arity(parts, 2, "ones:D");
    return DataVector(std::vector<double>(parse_dimension(parts[1]), 1.0));
  }
  if (kind == "basis") {
    expect_arity(parts, 3, "basis:D:i");
    const std::size_t d = parse_dimension(parts[1]);
    const std::uint64_t i = parse_uint(parts[2], "index");
    if (i < 1 || i > d) {
      throw std::invalid_argument("generator spec: basis index must lie in [1, D]");
    }
    std::vector<double> e(d, 0.0);
    e[i - 1] = 1.0;
    return DataVector(std::move(e));
  }
  if (kind == "uniform") {
    expect_arity(parts, 3, "uniform:D:seed");
    const std::size_t d = parse_dimension(parts[1]);
    const CounterRng rng(derive_seed({parse_uint(parts[2], "seed"), 0x756e6966}));
    std::vector<double> e(d);
    for (std::size_t i = 0; i < d; ++i) e[i] = 2.0 * rng.uniform(i) - 1.0;
    return DataVector(std::move(e));
  }
  if (kind == "sparse") {
    expect_arity(parts, 4, "sparse:D:k:seed");
    const std::size_t d = parse_dimension(parts[1]);
    const std::uint64_t k = parse_uint(parts[2], "k");
    if (k > d) throw std::invalid_argument("generator spec: sparse k must not exceed D");
    RngStream rng(derive_seed({parse_uint(parts[3], "seed"), 0x73707273}));
    // Partial Fisher-Yates picks k distinct positions.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> e(d, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t pick = j + static_cast<std::size_t>(rng.below(d - j));
      std::swap(order[j], order[pick]);
      e[order[j]] = 2.0 * rng.uniform() - 1.0;
    }
    return DataVector(std::move(e));
  }
  throw std::invalid_argument("unknown generator '" + std::string(kind) +
                              "' (expected zero, basis, ones, uniform, sparse)");
}

DataVector read_vector_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open vector file '" + path.string() + "'");
  std::vector<double> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    double value = 0.0;
    const char* end = text.data() + text.size();
    const char* first = text.data();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
      throw InputError(path.string() + ":" + std::to_string(line_no) +
                       ": malformed real '" + std::string(text) + "'");
    }
    if (std::abs(value) > 1.0) {
      throw OutOfRangeError(path.string() + ":" + std::to_string(line_no) + ": entry " +
                            std::string(text) + " lies outside [-1, 1]");
    }
    entries.push_back(value);
  }
  if (in.bad()) throw InputError("read error on '" + path.string() + "'");
  if (entries.empty()) {
    throw std::invalid_argument("vector file '" + path.string() + "' holds no entries (D = 0)");
  }
  return DataVector(std::move(entries));
}

DataVector load_vector(std::string_view source) {
  if (is_generator_spec(source)) return generate_vector(source);
  return read_vector_file(std::filesystem::path(std::string(source)));
}

// ---------------------------------------------------------------------------

DataVector perturb(const DataVector& x, const GaussianPerturbation& p) {
  if (x.provenance() != Provenance::kRaw) {
    throw std::invalid_argument("perturb requires a raw vector");
  }
  if (!(p.sigma >= 0.0) || !std::isfinite(p.sigma)) {
    throw std::invalid_argument("sigma must be a finite nonnegative real");
  }
  std::vector<double> out(x.entries().begin(), x.entries().end());
  std::size_t clamped = 0;
  if (p.sigma > 0.0) {
    const CounterRng rng(derive_seed({p.seed, kPerturbStream}));
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double v = out[i] + p.sigma * rng.gaussian(i);
      if (std::abs(v) > 1.0) ++clamped;
      out[i] = clamp_unit(v);
    }
  }
  return DataVector(std::move(out), Provenance::kPerturbed, clamped);
}

// value / epsilon in binary misses decimal grid points by an ulp or two
// (0.3 / 0.1 = 2.9999999999999996). Quotients that close to an integer are
// snapped onto it.
static double grid_quotient(double value, double epsilon) {
  const double q = value / epsilon;
  const double n = std::nearbyint(q);
  const double tol = 8 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(q));
  return std::abs(q - n) <= tol ? n : q;
}

double round_standard_scalar(double value, double epsilon) {
  const double q = grid_quotient(value, epsilon);
  const double cell = std::floor(q);
  const double tol = 8 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(q));
  double n;
  if (std::abs(q - cell - 0.5) <= tol) {
    n = q > 0 ? cell + 1 : cell;  // tie: away from zero
  } else {
    n = std::round(q);
  }
  return clamp_unit(epsilon * n);
}

double round_offset_scalar(double value, double epsilon) {
  const double cell = std::floor(grid_quotient(value, epsilon));
  double rounded = clamp_unit(epsilon * (cell + 0.5));
  // epsilon * (cell + 1/2) can land an ulp or two beyond epsilon / 2 from
  // value (0.1 * 3.5 > 0.35). Step back toward value first; only if that
  // fails is the neighbouring cell the closer one.
  for (int k = 0; k < 4 && std::abs(rounded - value) > epsilon / 2; ++k) {
    rounded = std::nextafter(rounded, value);
  }
  if (std::abs(rounded - value) > epsilon / 2) {
    const double alt = clamp_unit(epsilon * (cell + (rounded < value ? 1.5 : -0.5)));
    if (std::abs(alt - value) < std::abs(rounded - value)) rounded = alt;
  }
  return rounded;
}

DataVector round_standard(const DataVector& x, double epsilon) {
  check_epsilon(epsilon);
  check_can_round(x);
  std::vector<double> out(x.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = round_standard_scalar(x[i], epsilon);
  return DataVector(std::move(out), Provenance::kRoundedStandard);
}

DataVector round_offset(const DataVector& x, double epsilon) {
  check_epsilon(epsilon);
  check_can_round(x);
  std::vector<double> out(x.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = round_offset_scalar(x[i], epsilon);
  return DataVector(std::move(out), Provenance::kRoundedOffset);
}

DataVector apply_white_noise_offset(const DataVector& x, double epsilon,
                                    std::uint64_t master_seed) {
  check_epsilon(epsilon);
  check_can_round(x);
  const CounterRng rng(derive_seed({master_seed, kOffsetStream}));
  std::vector<double> out(x.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double w = epsilon * (rng.uniform(i) - 0.5);
    out[i] = clamp_unit(x[i] + w);
  }
  return DataVector(std::move(out), Provenance::kNoiseOffset);
}

DataVector apply_rounding(const DataVector& x, const RoundingConvention& convention) {
  switch (convention.mode) {
    case RoundingMode::kStandard: return round_standard(x, convention.epsilon);
    case RoundingMode::kOffset: return round_offset(x, convention.epsilon);
    case RoundingMode::kStochasticOffset:
      return apply_white_noise_offset(x, convention.epsilon, convention.master_seed);
  }
  throw std::invalid_argument("unknown rounding mode");
}

}  // namespace smoothprep
