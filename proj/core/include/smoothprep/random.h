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

#ifndef SMOOTHPREP_RANDOM_H_
#define SMOOTHPREP_RANDOM_H_

#include <cstdint>
#include <initializer_list>

namespace smoothprep {

__extension__ using uint128_t = unsigned __int128;

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Folds a list of words into one seed. Order-sensitive, so
/// derive_seed({s, 1, 2}) and derive_seed({s, 2, 1}) are unrelated streams.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) noexcept;

/// Counter-based generator: every draw is a pure function of (key, counter).
///
/// There is no hidden state, so draws can be made in any order, from any
/// thread, and a trial can be replayed from its key alone. The construction is
/// SplitMix64 evaluated at an arbitrary position of its Weyl sequence.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(mix64(key)) {}

  std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix64(key_ + (counter + 1) * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform on [0, 1), 53 bits of resolution.
  double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform_open_zero(std::uint64_t counter) const noexcept {
    return static_cast<double>((bits(counter) >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal for slot `index` (Box-Muller on counters 2i and 2i+1).
  double gaussian(std::uint64_t index) const noexcept;

  /// Integer uniform on [0, n) by 128-bit multiply-high; bias is below n/2^64.
  std::uint64_t below(std::uint64_t counter, std::uint64_t n) const noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<uint128_t>(bits(counter)) * n) >> 64);
  }

 private:
  std::uint64_t key_;
};

/// Sequential view over a CounterRng for loops whose draw count is not known
/// up front (rejection sampling). Local state only.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) noexcept : rng_(key) {}

  std::uint64_t bits() noexcept { return rng_.bits(next_++); }
  double uniform() noexcept { return rng_.uniform(next_++); }
  double uniform_open_zero() noexcept { return rng_.uniform_open_zero(next_++); }
  std::uint64_t below(std::uint64_t n) noexcept { return rng_.below(next_++, n); }
  std::uint64_t draws() const noexcept { return next_; }

 private:
  CounterRng rng_;
  std::uint64_t next_ = 0;
};

}  // namespace smoothprep

#endif  // SMOOTHPREP_RANDOM_H_
