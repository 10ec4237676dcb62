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

#include "smoothprep/strategy.h"

namespace smoothprep {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kNaive: return "naive";
    case Strategy::kKnownAmplitudeAA: return "known-amplitude-aa";
    case Strategy::kFixedPointAA: return "fixed-point-aa";
    case Strategy::kClassicalRejection: return "classical-rejection";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "naive") return Strategy::kNaive;
  if (name == "known-amplitude-aa" || name == "aa") return Strategy::kKnownAmplitudeAA;
  if (name == "fixed-point-aa" || name == "fixed-point") return Strategy::kFixedPointAA;
  if (name == "classical-rejection" || name == "classical") {
    return Strategy::kClassicalRejection;
  }
  return std::nullopt;
}

}  // namespace smoothprep
