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

#include "cli/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "smoothprep/csv.h"

namespace smoothprep::cli {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 440;
constexpr double kLeft = 80;
constexpr double kRight = 24;
constexpr double kTop = 40;
constexpr double kBottom = 60;

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo, hi;  // log10 bounds, padded outward to whole decades
  double map(double log_value, double pixel_lo, double pixel_hi) const {
    return pixel_lo + (log_value - lo) / (hi - lo) * (pixel_hi - pixel_lo);
  }
};

Axis make_axis(double min_value, double max_value) {
  double lo = std::floor(std::log10(min_value));
  double hi = std::ceil(std::log10(max_value));
  if (hi <= lo) hi = lo + 1;
  return {lo, hi};
}

}  // namespace

std::string render_loglog_svg(std::span<const PowerLawPoint> points, const PowerLawFit& fit,
                              const PlotLabels& labels) {
  double xmin = points.front().scale, xmax = xmin;
  double ymin = points.front().value, ymax = ymin;
  for (const auto& p : points) {
    xmin = std::min(xmin, p.scale);
    xmax = std::max(xmax, p.scale);
    ymin = std::min(ymin, p.value);
    ymax = std::max(ymax, p.value);
  }
  const Axis ax = make_axis(xmin, xmax);
  const Axis ay = make_axis(ymin, ymax);
  const double px0 = kLeft, px1 = kWidth - kRight;
  const double py0 = kHeight - kBottom, py1 = kTop;  // y grows downward
  auto sx = [&](double v) { return ax.map(std::log10(v), px0, px1); };
  auto sy = [&](double v) { return ay.map(std::log10(v), py0, py1); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(labels.title) << "</text>\n";

  // Decade grid and tick labels.
  for (double d = ax.lo; d <= ax.hi; d += 1) {
    const double x = ax.map(d, px0, px1);
    svg << "<line x1=\"" << x << "\" y1=\"" << py0 << "\" x2=\"" << x << "\" y2=\"" << py1
        << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << py0 + 18 << "\" text-anchor=\"middle\">1e"
        << static_cast<int>(d) << "</text>\n";
  }
  for (double d = ay.lo; d <= ay.hi; d += 1) {
    const double y = ay.map(d, py0, py1);
    svg << "<line x1=\"" << px0 << "\" y1=\"" << y << "\" x2=\"" << px1 << "\" y2=\"" << y
        << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << px0 - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e"
        << static_cast<int>(d) << "</text>\n";
  }
  svg << "<rect x=\"" << px0 << "\" y=\"" << py1 << "\" width=\"" << px1 - px0
      << "\" height=\"" << py0 - py1 << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << (px0 + px1) / 2 << "\" y=\"" << kHeight - 16
      << "\" text-anchor=\"middle\">" << escape(labels.x_axis) << "</text>\n";
  svg << "<text transform=\"translate(18," << (py0 + py1) / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(labels.y_axis) << "</text>\n";

  auto fitted = [&](double s) { return std::exp(fit.log_prefactor) * std::pow(s, fit.exponent); };
  svg << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(fitted(xmin)) << "\" x2=\"" << sx(xmax)
      << "\" y2=\"" << sy(fitted(xmax)) << "\" stroke=\"#c33\" stroke-width=\"1.5\"/>\n";
  for (const auto& p : points) {
    svg << "<circle cx=\"" << sx(p.scale) << "\" cy=\"" << sy(p.value)
        << "\" r=\"4\" fill=\"#246\"/>\n";
  }
  svg << "<text x=\"" << px1 - 8 << "\" y=\"" << py1 + 18 << "\" text-anchor=\"end\">slope "
      << format_real(std::round(fit.exponent * 1000) / 1000) << ", r2 "
      << format_real(std::round(fit.r_squared * 10000) / 10000) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace smoothprep::cli
