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

// Acceptance suite.  Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "midrange/midrange.hpp"

namespace {

using namespace midrange;

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Outcome limit_constant() {
  const double limit = 8.0 / (9.0 * kPi * kPi);
  const double g = ratio_function(1e-3);
  const bool ok = std::abs(g - limit) <= 1e-6 && limit < 0.0900633;
  return {ok, fmt("g(1e-3)=%.12f limit=%.12f |diff|=%.3g (tol 1e-6), limit < 0.0900633", g, limit, std::abs(g - limit))};
}

Outcome pair_probability_full_sphere() {
  ExperimentConfig c;
  c.mode = ExperimentMode::kPairProbability;
  c.d = kPi;
  c.trials = 1'000'000;
  c.master_seed = kSeed;
  c.threads = 1;
  const ExperimentSummary s = run_pair_probability(c);
  const double tol = 3.0 * std::sqrt(0.125 * 0.875 / 1e6);
  const double diff = std::abs(s.mean - 0.125);
  return {diff <= tol, fmt("estimate=%.6f |diff|=%.6f (tol %.6f)", s.mean, diff, tol)};
}

Outcome quadrature_vs_closed_form() {
  double worst = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double d = 0.05 + (kPi - 0.05) * i / 50.0;
    const double f = std::sin(d) - d * std::cos(d);
    worst = std::max(worst, std::abs(joint_cross_probability_by_quadrature(d) - f * f / (8.0 * kPi * kPi)));
  }
  return {worst < 1e-8, fmt("50 thresholds in (0.05, pi], max |diff|=%.3g (tol 1e-8)", worst)};
}

Outcome expected_edges_check() {
  ExperimentConfig c;
  c.mode = ExperimentMode::kEdgeCount;
  c.n = 1000;
  c.d = 0.5;
  c.trials = 50;
  c.master_seed = kSeed;
  c.threads = default_threads();
  const ExperimentSummary s = run_edge_count(c);
  const Statistic& e = *s.edges;
  const double exact = 1000.0 * 999.0 * (1.0 - std::cos(0.5)) / 4.0;
  const double diff = std::abs(e.mean - exact);
  return {diff <= 3.0 * e.std_error,
          fmt("mean=%.3f exact=%.6f |diff|=%.3f (3 SE=%.3f)", e.mean, exact, diff, 3.0 * e.std_error)};
}

Outcome complete_graph_expectation() {
  ExperimentConfig c;
  c.mode = ExperimentMode::kCompleteGraph;
  c.n = 60;
  c.trials = 50;
  c.master_seed = kSeed;
  c.threads = default_threads();
  const ExperimentSummary s = run_complete_graph(c);
  const Statistic& cr = *s.crossings;
  const double exact = static_cast<double>(complete_graph_expected_crossings(60));
  const double diff = std::abs(cr.mean - exact);
  return {diff <= 3.0 * cr.std_error,
          fmt("mean=%.3f exact=%.3f |diff|=%.3f (3 SE=%.3f)", cr.mean, exact, diff, 3.0 * cr.std_error)};
}

Outcome headline_ratio() {
  ExperimentConfig c;
  c.mode = ExperimentMode::kDrawingRatio;
  c.n = 500;
  c.d = threshold_for_edges_per_vertex(500, 15.0);
  c.trials = 20;
  c.master_seed = kSeed;
  c.threads = default_threads();
  const ExperimentSummary s = run_drawing_ratio(c);
  const double g = ratio_function(c.d);
  const double target = finite_n_ratio_target({c.d, c.n});
  const double rel = std::abs(s.mean - g) / g;
  const double diff = std::abs(s.mean - target);
  const bool ok = s.samples == 20 && rel <= 0.10 && diff <= 3.0 * s.std_error;
  return {ok, fmt("d=%.6f mean=%.6f g(d)=%.6f rel=%.3f (tol 0.10) target=%.6f |diff|=%.6f (3 SE=%.6f)", c.d, s.mean, g,
                  rel, target, diff, 3.0 * s.std_error)};
}

Outcome monotonicity() { return {check_monotonicity(10'000), "10000 grid points on [1e-3, pi]"}; }

Outcome projection_oracles() {
  std::uint64_t stereo_mismatch = 0, gnomonic_mismatch = 0, degeneracies = 0, total_crossings = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    SeededStream stream(kSeed, t);
    const SphericalDrawing drawing = build_threshold_drawing(stream, 50, 0.6);
    const CrossingReport sphere = count_crossings(drawing);
    const PlanarCrossingCount planar = count_planar_crossings(project_drawing(drawing, choose_projection_pole(drawing, stream)));
    stereo_mismatch += planar.crossings != sphere.cr;
    degeneracies += sphere.degeneracies + planar.degeneracies() + drawing.degeneracy_count;
    total_crossings += sphere.cr;
  }
  for (std::uint64_t t = 0; t < 100; ++t) {
    SeededStream stream(kSeed, 1000 + t);
    const UnitVector center = sample_unit_vector(stream);
    const SphericalDrawing drawing = build_cap_drawing(stream, 50, 0.6, center, 1.2);
    const CrossingReport sphere = count_crossings(drawing);
    const PlanarCrossingCount planar = count_gnomonic_crossings(drawing, center);
    gnomonic_mismatch += planar.crossings != sphere.cr;
    degeneracies += sphere.degeneracies + planar.degeneracies() + drawing.degeneracy_count;
    total_crossings += sphere.cr;
  }
  const bool ok = stereo_mismatch == 0 && gnomonic_mismatch == 0 && degeneracies == 0 && total_crossings > 0;
  return {ok, fmt("stereographic mismatches=%llu/100 gnomonic mismatches=%llu/100 degeneracies=%llu crossings=%llu",
                  static_cast<unsigned long long>(stereo_mismatch), static_cast<unsigned long long>(gnomonic_mismatch),
                  static_cast<unsigned long long>(degeneracies), static_cast<unsigned long long>(total_crossings))};
}

Outcome copies_identity() {
  SeededStream stream(kSeed, 7);
  const SphericalDrawing drawing = build_threshold_drawing(stream, 60, 0.8);
  const CrossingReport single = count_crossings(drawing);
  const UnitVector pole = choose_projection_pole(drawing, stream);
  bool ok = single.cr > 0;
  std::string detail = fmt("n=%llu e=%llu cr=%llu;", static_cast<unsigned long long>(single.n),
                           static_cast<unsigned long long>(single.e), static_cast<unsigned long long>(single.cr));
  for (std::uint64_t k : {1u, 2u, 7u}) {
    const CopiesResult r = replicate_copies(drawing, k, pole, single);
    const PlanarCrossingCount planar = count_planar_crossings(r.planar);
    const bool same = exact_ratio(r.combined.cr, r.combined.n, r.combined.e) == exact_ratio(single.cr, single.n, single.e);
    const bool counted = planar.crossings == k * single.cr && planar.degeneracies() == 0;
    ok = ok && same && r.ratio_identity_exact && counted;
    detail += fmt(" k=%llu cr'=%llu exact=%s", static_cast<unsigned long long>(k),
                  static_cast<unsigned long long>(planar.crossings), same && counted ? "yes" : "no");
  }
  return {ok, detail};
}

Outcome arc_length_distribution() {
  SeededStream stream(kSeed, 99);
  const KsResult ks = pairwise_angle_density_test(stream, 1'000'000);
  return {ks.passes_1pct(), fmt("N=%zu D=%.6f (critical %.6f)", ks.samples, ks.statistic, ks.critical_value_1pct())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"limit constant", limit_constant},
      {"pair crossing probability at d = pi", pair_probability_full_sphere},
      {"quadrature vs closed form", quadrature_vs_closed_form},
      {"expected edge count", expected_edges_check},
      {"complete graph expected crossings", complete_graph_expectation},
      {"headline normalized ratio", headline_ratio},
      {"monotonicity of g", monotonicity},
      {"projection oracles", projection_oracles},
      {"copies ratio identity", copies_identity},
      {"arc length distribution", arc_length_distribution},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s AC%zu %s: %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.passed;
  }
  std::printf("%d of %zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
