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

#ifndef SMOOTHPREP_STRATEGY_H_
#define SMOOTHPREP_STRATEGY_H_

#include <optional>
#include <string_view>

namespace smoothprep {

enum class Strategy {
  kNaive,               // repeat prepare + post-select until success
  kKnownAmplitudeAA,    // Grover iterations with the iteration count set from P
  kFixedPointAA,        // phase-tailored iterations given only a lower bound on P
  kClassicalRejection,  // l2 sampling by rejection from entry-wise RAM reads
};

/// Canonical names: naive, known-amplitude-aa, fixed-point-aa,
/// classical-rejection.
std::string_view to_string(Strategy s);

/// Accepts the canonical names plus the short forms aa, fixed-point,
/// classical.
std::optional<Strategy> parse_strategy(std::string_view name);

inline bool is_quantum(Strategy s) { return s != Strategy::kClassicalRejection; }

}  // namespace smoothprep

#endif  // SMOOTHPREP_STRATEGY_H_
