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

#ifndef SMOOTHPREP_TOOLS_CLI_SVG_PLOT_H_
#define SMOOTHPREP_TOOLS_CLI_SVG_PLOT_H_

#include <span>
#include <string>
#include <string_view>

#include "smoothprep/smoothed.h"

namespace smoothprep::cli {

struct PlotLabels {
  std::string title;
  std::string x_axis;
  std::string y_axis;
};

/// Log-log scatter of `points` with the fitted power law drawn across the
/// x range. Self-contained SVG 1.1 document.
std::string render_loglog_svg(std::span<const PowerLawPoint> points, const PowerLawFit& fit,
                              const PlotLabels& labels);

}  // namespace smoothprep::cli

#endif  // SMOOTHPREP_TOOLS_CLI_SVG_PLOT_H_
