// Copyright 2026 The midrange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  All flags live on the top-level app and every
// subcommand falls through to it, so a config file uses the same keys as the
// flags:  midrange simulate --config run.cfg

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "midrange/midrange.hpp"

namespace {

using midrange::Json;

struct Options {
  std::optional<std::uint64_t> n;
  std::optional<double> d;
  std::optional<double> d_min;
  std::optional<double> d_max;
  std::optional<std::uint64_t> steps;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> k;
  std::uint64_t seed = 0;
  unsigned threads = midrange::default_threads();
  std::string output = "-";
  std::optional<std::string> format;
  bool degrees = false;
  bool edges_only = false;
  std::string drawing_in;
  std::string drawing_out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag --") + flag);
  return *v;
}

double require_threshold(const std::optional<double>& v, const char* flag, bool allow_zero = false) {
  const double d = require(v, flag);
  if (!(allow_zero ? d >= 0.0 : d > 0.0) || d > std::numbers::pi) {
    throw UsageError(std::string("--") + flag + " must lie in " + (allow_zero ? "[0, pi]" : "(0, pi]"));
  }
  return d;
}

std::uint64_t require_at_least(const std::optional<std::uint64_t>& v, const char* flag, std::uint64_t lo) {
  const std::uint64_t x = require(v, flag);
  if (x < lo) throw UsageError(std::string("--") + flag + " must be at least " + std::to_string(lo));
  return x;
}

// Flags that determine the result; written into every output.
Json resolved_config(const std::string& command, const Options& o) {
  Json j{{"command", command}};
  if (o.n) j["n"] = *o.n;
  if (o.d) j["d"] = *o.d;
  if (o.d_min) j["d_min"] = *o.d_min;
  if (o.d_max) j["d_max"] = *o.d_max;
  if (o.steps) j["steps"] = *o.steps;
  if (o.trials) j["trials"] = *o.trials;
  if (o.k) j["k"] = *o.k;
  j["seed"] = o.seed;
  if (!o.drawing_in.empty()) j["drawing_in"] = o.drawing_in;
  if (o.edges_only) j["edges_only"] = true;
  return j;
}

std::string format_of(const Options& o, const char* fallback) {
  const std::string f = o.format.value_or(fallback);
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

void emit(const Options& o, const std::string& text) {
  if (o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + o.output);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_summary(const Options& o, const std::string& command, const midrange::ExperimentSummary& s) {
  const Json config = resolved_config(command, o);
  if (format_of(o, "json") == "csv") {
    std::ostringstream os;
    midrange::write_csv(os, s, config);
    return os.str();
  }
  Json j = midrange::to_json(s);
  j["config"] = config;
  return dump(j);
}

int run_analytic(const Options& o) {
  const double d = require_threshold(o.d, "d");
  const std::uint64_t n = o.n.value_or(1000);
  if (n < 2) throw UsageError("--n must be at least 2");
  const midrange::AnalyticParams p{d, n};
  Json j{{"format", midrange::kFormatVersion}, {"config", resolved_config("analytic", o)}};
  j["d"] = d;
  j["n"] = n;
  if (d < std::numbers::pi) j["arc_length_density"] = midrange::arc_length_density(d);
  j["conditional_cross_probability"] = midrange::conditional_cross_probability(d);
  j["joint_cross_probability"] = midrange::joint_cross_probability(d);
  j["cap_area"] = midrange::cap_area(d);
  j["expected_edges"] = midrange::expected_edges(p);
  j["expected_crossings"] = midrange::expected_crossings(p);
  j["ratio_function"] = midrange::ratio_function(d);
  j["finite_n_ratio_target"] = midrange::finite_n_ratio_target(p);
  j["midrange_upper_limit"] = midrange::midrange_upper_limit();
  j["unconditional_cross_probability"] = midrange::unconditional_cross_probability().closed_form;
  emit(o, dump(j));
  return 0;
}

int run_sweep(const Options& o) {
  const double lo = require_threshold(o.d_min, "d-min");
  const double hi = require_threshold(o.d_max, "d-max");
  const std::uint64_t steps = require_at_least(o.steps, "steps", 2);
  if (!(lo < hi)) throw UsageError("--d-min must be below --d-max");
  const std::uint64_t n = o.n.value_or(1000);
  if (n < 2) throw UsageError("--n must be at least 2");
  const Json config = resolved_config("sweep", o);
  const std::string fmt = format_of(o, "csv");
  std::ostringstream os;
  Json rows = Json::array();
  if (fmt == "csv") {
    for (const auto& [key, value] : config.items()) os << "# " << key << '=' << value.dump() << '\n';
    os << "format_version,d,ratio_function,joint_probability,expected_edges_per_vertex\n";
  }
  for (std::uint64_t i = 0; i < steps; ++i) {
    const double d = i + 1 == steps ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    const double g = midrange::ratio_function(d);
    const double joint = midrange::joint_cross_probability(d);
    const double per_vertex = midrange::expected_edges({d, n}) / static_cast<double>(n);
    if (fmt == "csv") {
      os << midrange::kFormatVersion << ',' << Json(d).dump() << ',' << Json(g).dump() << ',' << Json(joint).dump()
         << ',' << Json(per_vertex).dump() << '\n';
    } else {
      rows.push_back({{"d", d}, {"ratio_function", g}, {"joint_probability", joint},
                      {"expected_edges_per_vertex", per_vertex}});
    }
  }
  if (fmt == "json") {
    os << dump(Json{{"format", midrange::kFormatVersion}, {"config", config}, {"rows", rows}});
  }
  emit(o, os.str());
  return 0;
}

int run_pairprob(const Options& o) {
  midrange::ExperimentConfig c;
  c.mode = midrange::ExperimentMode::kPairProbability;
  c.d = require_threshold(o.d, "d");
  c.trials = require_at_least(o.trials, "trials", 1);
  c.master_seed = o.seed;
  c.threads = o.threads;
  emit(o, render_summary(o, "pairprob", midrange::run_pair_probability(c)));
  return 0;
}

int run_simulate(const Options& o) {
  midrange::ExperimentConfig c;
  c.mode = o.edges_only ? midrange::ExperimentMode::kEdgeCount : midrange::ExperimentMode::kDrawingRatio;
  c.n = require_at_least(o.n, "n", o.edges_only ? 2 : 4);
  c.d = require_threshold(o.d, "d");
  c.trials = require_at_least(o.trials, "trials", 1);
  c.master_seed = o.seed;
  c.threads = o.threads;
  emit(o, render_summary(o, "simulate", midrange::run_experiment(c)));
  return 0;
}

int run_complete(const Options& o) {
  midrange::ExperimentConfig c;
  c.mode = midrange::ExperimentMode::kCompleteGraph;
  c.n = require_at_least(o.n, "n", 4);
  c.trials = require_at_least(o.trials, "trials", 1);
  c.master_seed = o.seed;
  c.threads = o.threads;
  emit(o, render_summary(o, "complete", midrange::run_complete_graph(c)));
  return 0;
}

std::string rational_string(const midrange::Rational& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

int run_copies(const Options& o) {
  const std::uint64_t k = require_at_least(o.k, "k", 1);
  format_of(o, "json");
  midrange::SphericalDrawing drawing;
  if (!o.drawing_in.empty()) {
    std::ifstream in(o.drawing_in);
    if (!in) throw UsageError("cannot read --drawing-in file " + o.drawing_in);
    drawing = midrange::drawing_from_json(Json::parse(in));
  } else {
    const std::uint64_t n = require_at_least(o.n, "n", 2);
    midrange::SeededStream stream(o.seed, 0);
    drawing = midrange::build_threshold_drawing(stream, n, require_threshold(o.d, "d"));
  }
  if (!o.drawing_out.empty()) {
    std::ofstream out(o.drawing_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + o.drawing_out);
    out << midrange::to_json(drawing).dump() << '\n';
  }
  const midrange::CrossingReport single = midrange::count_crossings(drawing, {.threads = o.threads});
  midrange::SeededStream pole_stream(o.seed, 1);
  const midrange::UnitVector pole = midrange::choose_projection_pole(drawing, pole_stream);
  const midrange::CopiesResult r = midrange::replicate_copies(drawing, k, pole, single);
  const midrange::PlanarCrossingCount planar = midrange::count_planar_crossings(r.planar);

  Json j{{"format", midrange::kFormatVersion}, {"config", resolved_config("copies", o)}};
  j["pole"] = {pole.x(), pole.y(), pole.z()};
  j["spacing"] = r.spacing;
  j["single"] = midrange::to_json(r.single);
  j["combined"] = midrange::to_json(r.combined);
  j["ratio_single_exact"] = rational_string(midrange::exact_ratio(r.single.cr, r.single.n, r.single.e));
  j["ratio_combined_exact"] = rational_string(midrange::exact_ratio(r.combined.cr, r.combined.n, r.combined.e));
  j["ratio_identity_exact"] = r.ratio_identity_exact;
  j["planar_crossings"] = planar.crossings;
  j["planar_degeneracies"] = planar.degeneracies();
  emit(o, dump(j));
  return r.ratio_identity_exact && planar.crossings == r.combined.cr ? 0 : 1;
}

int run_selftest(const Options& o) {
  const auto checks = midrange::run_selftest(o.seed);
  bool ok = true;
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    ok = ok && c.passed;
  }
  os << (ok ? "selftest passed\n" : "selftest FAILED\n");
  emit(o, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random geodesic drawings on the sphere and the midrange crossing constant"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read flags from a key=value file");
  Options o;

  app.add_option("--n", o.n, "Number of vertices");
  app.add_option("--d", o.d, "Distance threshold in radians");
  app.add_option("--d-min,--d_min", o.d_min, "Sweep start");
  app.add_option("--d-max,--d_max", o.d_max, "Sweep end");
  app.add_option("--steps", o.steps, "Sweep grid points");
  app.add_option("--trials", o.trials, "Number of independent trials");
  app.add_option("--seed", o.seed, "Master seed (default 0)");
  app.add_option("--k,--copies", o.k, "Number of planar copies");
  app.add_option("--threads", o.threads, "Worker threads; never changes results")->check(CLI::PositiveNumber);
  app.add_option("--output,-o", o.output, "Output file, - for stdout");
  app.add_option("--format", o.format, "json or csv");
  app.add_flag("--degrees", o.degrees, "Read --d, --d-min and --d-max in degrees");
  app.add_flag("--edges-only,--edges_only", o.edges_only, "simulate: count edges only");
  app.add_option("--drawing-in,--drawing_in", o.drawing_in, "copies: read the drawing from a JSON file");
  app.add_option("--drawing-out,--drawing_out", o.drawing_out, "copies: write the drawing as JSON");

  const auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help)->fallthrough(); };
  auto* analytic = sub("analytic", "Closed-form quantities at --d (and --n)");
  auto* sweep = sub("sweep", "Table of g(d) over [--d-min, --d-max] with --steps points");
  auto* pairprob = sub("pairprob", "Simulate P[two random arcs of length <= d cross]");
  auto* simulate = sub("simulate", "Normalized crossing ratio of random threshold drawings");
  auto* complete = sub("complete", "Crossings of the random geodesic drawing of K_n");
  auto* copies = sub("copies", "Disjoint planar copies and the ratio identity");
  auto* selftest = sub("selftest", "Run the oracle and property checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (o.degrees) {
    const auto convert = [](std::optional<double>& x) {
      if (x) *x = *x * (std::numbers::pi / 180.0);
    };
    convert(o.d);
    convert(o.d_min);
    convert(o.d_max);
  }

  try {
    if (analytic->parsed()) return run_analytic(o);
    if (sweep->parsed()) return run_sweep(o);
    if (pairprob->parsed()) return run_pairprob(o);
    if (simulate->parsed()) return run_simulate(o);
    if (complete->parsed()) return run_complete(o);
    if (copies->parsed()) return run_copies(o);
    if (selftest->parsed()) return run_selftest(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for the list of flags.\n";
    return 2;
  } catch (const midrange::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
