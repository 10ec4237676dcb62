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

#include "cli/commands.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "cli/svg_plot.h"
#include "smoothprep/classical_sampler.h"
#include "smoothprep/csv.h"
#include "smoothprep/errors.h"
#include "smoothprep/parallel.h"
#include "smoothprep/quantum_prep.h"
#include "smoothprep/random.h"
#include "smoothprep/smoothed.h"
#include "smoothprep/strategy.h"
#include "smoothprep/vectors.h"

namespace smoothprep::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text destined for --out (or stdout), plus side files and diagnostics.
struct Output {
  std::ostringstream body;
  std::vector<std::string> notes;  // stderr lines
};

std::string quote_arg(std::string_view arg) {
  const bool plain = !arg.empty() && arg.find_first_of(" \t\"'\\$`*?;&|<>()") == std::string_view::npos;
  if (plain) return std::string(arg);
  std::string q = "'";
  for (char c : arg) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

std::string join_list(const auto& values, auto&& fmt) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += fmt(v);
  }
  return out;
}

std::string opt_real(const std::optional<double>& v) { return v ? format_real(*v) : "-"; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ts;
  ts << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ts.str();
}

std::string header(const RunConfig& config, std::span<const std::string> args) {
  std::string cmd = "smoothprep";
  for (std::size_t i = 1; i < args.size(); ++i) cmd += " " + quote_arg(args[i]);
  std::string h = "# smoothprep " SMOOTHPREP_VERSION "\n";
  h += "# command: " + cmd + "\n";
  h += "# config: " + describe(config) + "\n";
  if (!config.deterministic) h += "# timestamp: " + utc_timestamp() + "\n";
  return h;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw OutputError("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw OutputError("write to '" + path + "' failed");
}

// ---------------------------------------------------------------------------
// Input helpers.

DataVector single_input(const RunConfig& c) {
  const std::size_t n = c.gens.size() + c.files.size();
  if (n != 1) throw UsageError("exactly one of --gen SPEC or --file PATH is required");
  if (!c.gens.empty()) return generate_vector(c.gens.front());
  return read_vector_file(c.files.front());
}

Strategy require_strategy(const RunConfig& c) {
  if (c.strategy.empty()) throw UsageError("--strategy is required");
  const auto s = parse_strategy(c.strategy);
  if (!s) throw UsageError("unknown strategy '" + c.strategy + "'");
  return *s;
}

SimulationMode parse_mode(const std::string& name) {
  if (name == "automatic") return SimulationMode::kAutomatic;
  if (name == "statevector") return SimulationMode::kStatevector;
  if (name == "analytic") return SimulationMode::kAnalytic;
  throw UsageError("unknown --mode '" + name + "' (automatic, statevector, analytic)");
}

void check_fixed_point_flags(const RunConfig& c, Strategy s) {
  if (s != Strategy::kFixedPointAA) {
    if (c.delta || c.lambda_min) {
      throw UsageError("--delta and --lambda-min apply only to --strategy fixed-point-aa");
    }
    return;
  }
  if (!c.lambda_min) throw UsageError("--strategy fixed-point-aa requires --lambda-min");
}

/// Replaces a `D` field of a generator spec (`basis:D:1`) with `dim`.
std::string instantiate_spec(const std::string& spec, std::size_t dim) {
  std::string out;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = spec.find(':', start);
    const std::string field = spec.substr(start, colon - start);
    if (!out.empty() || start > 0) out += ':';
    out += field == "D" ? std::to_string(dim) : field;
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands.

void cmd_prep(const RunConfig& c, Output& o) {
  const DataVector x = single_input(c);
  const Strategy strategy = require_strategy(c);
  if (strategy == Strategy::kClassicalRejection) {
    throw UsageError("prep runs quantum strategies; use 'sample' for classical rejection");
  }
  check_fixed_point_flags(c, strategy);
  const std::size_t trials = c.trials.value_or(1);
  if (trials == 0) throw UsageError("--trials must be >= 1");
  const PrepOptions options{parse_mode(c.mode)};
  const double delta = c.delta.value_or(0.1);

  std::vector<TrialResult> results(trials);
  parallel_for(trials, c.threads, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed({c.seed, static_cast<std::uint64_t>(t)});
    switch (strategy) {
      case Strategy::kNaive: results[t] = run_naive(x, seed, options); break;
      case Strategy::kKnownAmplitudeAA:
        results[t] = run_known_amplitude_aa(x, seed, options);
        break;
      default:
        results[t] = run_fixed_point_aa(x, *c.lambda_min, delta, seed, options);
        break;
    }
  });
  o.body << kTrialCsvHeader << '\n';
  for (const auto& r : results) o.body << to_csv_row(r) << '\n';
}

void cmd_sample(const RunConfig& c, Output& o) {
  const DataVector x = single_input(c);
  if (c.samples == 0) throw UsageError("--n must be >= 1");
  SamplerConfig base;
  base.entry_bound = c.entry_bound;
  if (c.max_queries != 0) base.max_queries = c.max_queries;

  std::vector<SampleResult> results(c.samples);
  std::vector<std::uint64_t> seeds(c.samples);
  parallel_for(c.samples, c.threads, [&](std::size_t s) {
    SamplerConfig cfg = base;
    cfg.seed = seeds[s] = derive_seed({c.seed, static_cast<std::uint64_t>(s)});
    results[s] = l2_sample(x, cfg);
  });
  o.body << kSampleCsvHeader << '\n';
  for (std::size_t s = 0; s < results.size(); ++s) o.body << to_csv_row(results[s], seeds[s]) << '\n';

  if (c.check_dist) {
    const std::vector<double> exact = l2_distribution(x);
    std::vector<double> empirical(x.dimension(), 0.0);
    for (const auto& r : results) empirical[r.index - 1] += 1.0;
    for (double& f : empirical) f /= static_cast<double>(results.size());
    o.body << "# check-dist index,exact,empirical\n";
    for (std::size_t j = 0; j < exact.size(); ++j) {
      o.body << "# " << j + 1 << ',' << format_real(exact[j]) << ',' << format_real(empirical[j])
             << '\n';
    }
    const double tv = total_variation(exact, empirical);
    o.body << "# tv_distance=" << format_real(tv) << '\n';
    o.notes.push_back("tv_distance=" + format_real(tv));
  }
}

void cmd_smoothed(const RunConfig& c, Output& o) {
  const Strategy strategy = require_strategy(c);
  check_fixed_point_flags(c, strategy);
  HarnessOptions options;
  options.mode = parse_mode(c.mode);
  options.threads = c.threads;
  options.entry_bound = c.entry_bound;
  if (c.max_queries != 0) options.max_queries = c.max_queries;
  if (c.lambda_min) options.lambda_min = *c.lambda_min;
  if (c.delta) options.delta = *c.delta;
  const std::size_t trials = c.trials.value_or(kDefaultTrials);

  std::vector<SmoothedEstimate> rows;
  bool sweep_over_sigma = false;
  bool is_sweep = false;

  if (!c.dims.empty()) {
    if (!c.sigma) throw UsageError("--dims needs a single --sigma");
    if (!c.sigmas.empty() || c.dimension) {
      throw UsageError("use either --dims with --sigma, or --d with --sigmas");
    }
    if (!c.files.empty()) throw UsageError("--file has a fixed dimension; use --gen with D");
    if (c.gens.size() > 1) throw UsageError("at most one --gen");
    const std::string spec = c.gens.empty() ? "zero:D" : c.gens.front();
    rows = sweep_dimension(strategy, *c.sigma, c.dims, trials, c.seed, options,
                           [&](std::size_t d) { return generate_vector(instantiate_spec(spec, d)); });
    is_sweep = true;
  } else {
    DataVector x = (c.gens.empty() && c.files.empty())
                       ? (c.dimension ? zero_vector(*c.dimension)
                                      : throw UsageError("--d (or an input vector) is required"))
                       : single_input(c);
    if (c.dimension && *c.dimension != x.dimension()) {
      throw UsageError("--d disagrees with the input vector's dimension");
    }
    if (!c.sigmas.empty() && c.sigma) throw UsageError("give --sigmas or --sigma, not both");
    if (c.sigmas.size() > 1) {
      rows = sweep_sigma(strategy, x, c.sigmas, trials, c.seed, options);
      is_sweep = true;
      sweep_over_sigma = true;
    } else {
      const double s = c.sigma ? *c.sigma
                       : !c.sigmas.empty() ? c.sigmas.front()
                                           : throw UsageError("--sigma or --sigmas is required");
      rows.push_back(estimate_smoothed(strategy, x, s, trials, c.seed, options));
    }
  }

  o.body << kSmoothedCsvHeader << '\n';
  for (const auto& e : rows) {
    o.body << to_csv_row(e) << '\n';
    if (e.clip_fraction > kMaxClipFraction) {
      o.notes.push_back("warning: sigma=" + format_real(e.sigma) + " D=" +
                        std::to_string(e.dimension) + " clipped " +
                        format_real(100 * e.clip_fraction) + "% of entries (above 1%)");
    }
  }
  if (!is_sweep) return;

  const PowerLawFit fit = sweep_over_sigma ? fit_sigma_sweep(rows) : fit_dimension_sweep(rows);
  o.body << "# fit " << kFitCsvHeader << '\n';
  o.body << "# fit " << to_csv_row(fit) << '\n';
  o.notes.push_back("fit: exponent=" + format_real(fit.exponent) +
                    " r2=" + format_real(fit.r_squared) +
                    " n_points=" + std::to_string(fit.n_points));
  if (!c.fit_out.empty()) {
    write_file(c.fit_out, std::string(kFitCsvHeader) + "\n" + to_csv_row(fit) + "\n");
  }
  if (c.plot) {
    std::vector<PowerLawPoint> points;
    for (const auto& e : rows) {
      points.push_back({sweep_over_sigma ? e.sigma : static_cast<double>(e.dimension),
                        e.mean_queries});
    }
    const std::string path = !c.plot_path.empty() ? c.plot_path
                             : !c.out_path.empty() ? c.out_path + ".svg"
                                                   : std::string("smoothed.svg");
    PlotLabels labels;
    labels.title = std::string(to_string(strategy)) + ": mean queries vs " +
                   (sweep_over_sigma ? "sigma" : "D");
    labels.x_axis = sweep_over_sigma ? "sigma" : "D";
    labels.y_axis = "mean queries";
    write_file(path, render_loglog_svg(points, fit, labels));
    o.notes.push_back("plot: " + path);
  }
}

void cmd_rounding(const RunConfig& c, Output& o) {
  if (!c.epsilon) throw UsageError("--eps is required");
  const double eps = *c.epsilon;
  if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("--eps must lie in (0, 1]");
  std::vector<RoundingMode> modes;
  if (c.rounding_mode == "all") {
    modes = {RoundingMode::kStandard, RoundingMode::kOffset, RoundingMode::kStochasticOffset};
  } else if (const auto m = parse_rounding_mode(c.rounding_mode)) {
    modes = {*m};
  } else {
    throw UsageError("unknown --mode '" + c.rounding_mode +
                     "' (standard, offset, stochastic-offset, all)");
  }
  std::vector<std::pair<std::string, DataVector>> inputs;
  for (const auto& g : c.gens) inputs.emplace_back(g, generate_vector(g));
  for (const auto& f : c.files) inputs.emplace_back(f, read_vector_file(f));
  if (inputs.empty()) throw UsageError("give at least one --gen SPEC or --file PATH");

  const double floor = (eps / 2) * (eps / 2);
  o.body << "source,mode,epsilon,D,min_abs,max_abs_error,success_probability,floor,meets_floor\n";
  for (const auto& [source, x] : inputs) {
    for (RoundingMode mode : modes) {
      const DataVector r = apply_rounding(x, {mode, eps, c.seed});
      double min_abs = 1.0, max_err = 0.0;
      for (std::size_t i = 0; i < r.dimension(); ++i) {
        min_abs = std::min(min_abs, std::abs(r[i]));
        max_err = std::max(max_err, std::abs(r[i] - x[i]));
      }
      const double p = success_probability(r);
      o.body << join_csv({source, std::string(to_string(mode)), format_real(eps),
                          std::to_string(r.dimension()), format_real(min_abs),
                          format_real(max_err), format_real(p), format_real(floor),
                          p >= floor ? "true" : "false"})
             << '\n';
    }
  }
}

void cmd_fit(const RunConfig& c, Output& o) {
  if (c.files.size() != 1 || !c.gens.empty()) throw UsageError("fit needs exactly one --file CSV");
  const std::string& path = c.files.front();
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");

  std::vector<std::string> columns;
  std::vector<std::vector<double>> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_csv(line);
    if (columns.empty()) {
      for (auto f : fields) columns.emplace_back(f);
      continue;
    }
    if (fields.size() != columns.size()) {
      throw InputError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(columns.size()) + " fields");
    }
    std::vector<double> row(fields.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), v);
      if (ec == std::errc() && ptr == fields[i].data() + fields[i].size()) row[i] = v;
    }
    table.push_back(std::move(row));
  }
  if (columns.empty()) throw InputError("'" + path + "' has no header row");

  auto find = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return i;
    }
    return std::nullopt;
  };
  auto varies = [&](std::size_t col) {
    for (const auto& r : table) {
      if (r[col] != table.front()[col]) return true;
    }
    return false;
  };
  // Defaults: scale,value files; otherwise a smoothed sweep (sigma or D
  // against mean_queries); otherwise the first two columns.
  std::optional<std::size_t> xi, yi;
  if (!c.x_col.empty()) {
    xi = find(c.x_col);
  } else if (find("scale")) {
    xi = find("scale");
  } else if (find("sigma") && find("D") && !table.empty()) {
    xi = varies(*find("sigma")) ? find("sigma") : find("D");
  } else if (!columns.empty()) {
    xi = 0;
  }
  if (!c.y_col.empty()) {
    yi = find(c.y_col);
  } else if (find("value")) {
    yi = find("value");
  } else if (find("mean_queries")) {
    yi = find("mean_queries");
  } else if (columns.size() > 1) {
    yi = 1;
  }
  if (!xi || !yi) throw UsageError("fit: could not resolve the x/y columns in '" + path + "'");

  std::vector<PowerLawPoint> points;
  for (const auto& r : table) {
    if (std::isnan(r[*xi]) || std::isnan(r[*yi])) {
      throw InputError("fit: non-numeric value in column '" + columns[*xi] + "' or '" +
                       columns[*yi] + "'");
    }
    points.push_back({r[*xi], r[*yi]});
  }
  const PowerLawFit fit = fit_power_law(points);
  o.body << kFitCsvHeader << '\n' << to_csv_row(fit) << '\n';
}

// ---------------------------------------------------------------------------

void add_shared(CLI::App* sub, RunConfig& c) {
  sub->add_option("--gen", c.gens, "Generator spec: zero:D, basis:D:i, ones:D, uniform:D:seed, sparse:D:k:seed");
  sub->add_option("--file", c.files, "Input file");
  sub->add_option("--seed", c.seed, "Base seed");
  sub->add_option("--trials", c.trials, "Trials");
  sub->add_option("--out", c.out_path, "Output CSV path (default: stdout)");
  sub->add_flag("--plot", c.plot, "Write a log-log SVG next to the output");
  sub->add_flag("--deterministic", c.deterministic, "Omit environment-derived header fields");
  sub->add_option("--threads", c.threads, "Worker threads (0: all cores)");
}

int dispatch(const RunConfig& c, std::span<const std::string> args, std::ostream& out,
             std::ostream& err) {
  Output o;
  if (c.command == "prep") {
    cmd_prep(c, o);
  } else if (c.command == "sample") {
    cmd_sample(c, o);
  } else if (c.command == "smoothed") {
    cmd_smoothed(c, o);
  } else if (c.command == "rounding") {
    cmd_rounding(c, o);
  } else if (c.command == "fit") {
    cmd_fit(c, o);
  } else {
    throw UsageError("unknown command '" + c.command + "'");
  }
  const std::string content = header(c, args) + o.body.str();
  if (c.out_path.empty()) {
    out << content;
    out.flush();
  } else {
    write_file(c.out_path, content);
  }
  for (const auto& n : o.notes) err << n << '\n';
  return kExitOk;
}

}  // namespace

std::string describe(const RunConfig& c) {
  auto str = [](const std::string& s) { return s; };
  auto sz = [](std::size_t v) { return std::to_string(v); };
  std::string d = "command=" + c.command;
  d += " gen=" + join_list(c.gens, str);
  d += " file=" + join_list(c.files, str);
  d += " seed=" + std::to_string(c.seed);
  d += " trials=" + (c.trials ? std::to_string(*c.trials) : std::string("-"));
  if (c.command == "prep" || c.command == "smoothed") {
    d += " strategy=" + c.strategy + " mode=" + c.mode;
    d += " delta=" + opt_real(c.delta) + " lambda_min=" + opt_real(c.lambda_min);
  }
  if (c.command == "sample" || c.command == "smoothed") {
    d += " c=" + format_real(c.entry_bound) + " max_queries=" + std::to_string(c.max_queries);
  }
  if (c.command == "sample") {
    d += " n=" + std::to_string(c.samples) + " check_dist=" + (c.check_dist ? "1" : "0");
  }
  if (c.command == "smoothed") {
    d += " d=" + (c.dimension ? std::to_string(*c.dimension) : std::string("-"));
    d += " sigmas=" + join_list(c.sigmas, format_real);
    d += " sigma=" + opt_real(c.sigma);
    d += " dims=" + join_list(c.dims, sz);
    d += " plot=" + std::string(c.plot ? "1" : "0");
  }
  if (c.command == "rounding") {
    d += " eps=" + opt_real(c.epsilon) + " mode=" + c.rounding_mode;
  }
  if (c.command == "fit") {
    d += " x_col=" + (c.x_col.empty() ? std::string("-") : c.x_col);
    d += " y_col=" + (c.y_col.empty() ? std::string("-") : c.y_col);
  }
  return d;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smoothed-analysis experiments for amplitude encoding and l2 sampling",
               "smoothprep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SMOOTHPREP_VERSION);
  RunConfig c;

  auto* prep = app.add_subcommand("prep", "Prepare amplitude-encoded states; one CSV row per trial");
  add_shared(prep, c);
  prep->add_option("--strategy", c.strategy, "naive | aa | fixed-point")->required();
  prep->add_option("--delta", c.delta, "Fixed-point failure amplitude (default 0.1)");
  prep->add_option("--lambda-min", c.lambda_min, "Fixed-point lower bound on P");
  prep->add_option("--mode", c.mode, "automatic | statevector | analytic");

  auto* sample = app.add_subcommand("sample", "Draw l2 samples by rejection");
  add_shared(sample, c);
  sample->add_option("--n", c.samples, "Number of samples");
  sample->add_option("--c", c.entry_bound, "Known bound on |x_i| (default 1)");
  sample->add_option("--max-queries", c.max_queries, "Read budget per sample");
  sample->add_flag("--check-dist", c.check_dist, "Compare frequencies with the exact distribution");

  auto* smoothed = app.add_subcommand("smoothed", "Monte Carlo smoothed-complexity sweeps");
  add_shared(smoothed, c);
  smoothed->add_option("--strategy", c.strategy, "naive | aa | fixed-point | classical")->required();
  smoothed->add_option("--d", c.dimension, "Dimension (input defaults to zero:D)");
  smoothed->add_option("--sigmas", c.sigmas, "Comma-separated sigma grid")->delimiter(',');
  smoothed->add_option("--sigma", c.sigma, "Single sigma");
  smoothed->add_option("--dims", c.dims, "Comma-separated dimension grid")->delimiter(',');
  smoothed->add_option("--delta", c.delta, "Fixed-point failure amplitude (default 0.1)");
  smoothed->add_option("--lambda-min", c.lambda_min, "Fixed-point lower bound on P");
  smoothed->add_option("--mode", c.mode, "automatic | statevector | analytic");
  smoothed->add_option("--c", c.entry_bound, "Classical entry bound (default 1)");
  smoothed->add_option("--max-queries", c.max_queries, "Classical read budget per sample");
  smoothed->add_option("--fit-out", c.fit_out, "Also write the fit as CSV");
  smoothed->add_option("--plot-out", c.plot_path, "SVG path for --plot");

  auto* rounding = app.add_subcommand("rounding", "Compare rounding conventions and the P floor");
  add_shared(rounding, c);
  rounding->add_option("--eps", c.epsilon, "Base precision in (0, 1]")->required();
  rounding->add_option("--mode", c.rounding_mode, "standard | offset | stochastic-offset | all");

  auto* fit = app.add_subcommand("fit", "Power-law fit of a two-column or sweep CSV");
  add_shared(fit, c);
  fit->add_option("--x-col", c.x_col, "Column used as scale");
  fit->add_option("--y-col", c.y_col, "Column used as value");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();

  try {
    return dispatch(c, args, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace smoothprep::cli
