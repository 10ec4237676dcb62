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

#ifndef SMOOTHPREP_TOOLS_CLI_COMMANDS_H_
#define SMOOTHPREP_TOOLS_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace smoothprep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitIo = 4;

/// Everything a run depends on. Two runs with equal configs produce the same
/// bytes (apart from the timestamp line, which --deterministic removes).
struct RunConfig {
  std::string command;

  // Shared.
  std::vector<std::string> gens;
  std::vector<std::string> files;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  std::string out_path;
  bool plot = false;
  std::string plot_path;
  bool deterministic = false;
  unsigned threads = 0;

  // prep / smoothed.
  std::string strategy;
  std::optional<double> delta;
  std::optional<double> lambda_min;
  std::string mode = "automatic";

  // sample.
  std::size_t samples = 1;
  double entry_bound = 1.0;
  std::uint64_t max_queries = 0;  // 0: library default
  bool check_dist = false;

  // smoothed.
  std::optional<std::size_t> dimension;
  std::vector<double> sigmas;
  std::optional<double> sigma;
  std::vector<std::size_t> dims;
  std::string fit_out;

  // rounding.
  std::optional<double> epsilon;
  std::string rounding_mode = "all";

  // fit.
  std::string x_col;
  std::string y_col;
};

/// Canonical single-line rendering, echoed into every output header.
std::string describe(const RunConfig& config);

/// Runs the tool. args[0] is the program name. Results go to --out or `out`;
/// diagnostics go to `err`. Returns one of the kExit* codes.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace smoothprep::cli

#endif  // SMOOTHPREP_TOOLS_CLI_COMMANDS_H_
