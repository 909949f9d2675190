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

// Reduced-size versions of the oracle-equivalence and property checks, for
// a quick end-to-end health check of a build.

#ifndef MIDRANGE_SELFTEST_HPP_
#define MIDRANGE_SELFTEST_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "midrange/analytic.hpp"
#include "midrange/drawing.hpp"
#include "midrange/exact.hpp"
#include "midrange/geom.hpp"
#include "midrange/montecarlo.hpp"
#include "midrange/projection.hpp"
#include "midrange/sampling.hpp"

namespace midrange {

struct SelfTestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline SelfTestCheck check_predicate_symmetries(std::uint64_t seed) {
  SeededStream stream(seed, 1);
  int failures = 0;
  int band = 0;
  for (int i = 0; i < 20000; ++i) {
    const UnitVector p = sample_unit_vector(stream), q = sample_unit_vector(stream);
    const UnitVector r = sample_unit_vector(stream), s = sample_unit_vector(stream);
    const GeodesicArc e1 = make_arc(p, q), e2 = make_arc(r, s);
    const CrossingTest base = test_crossing(e1, e2);
    const Rotation rot = sample_rotation(stream);
    const CrossingTest rotated =
        test_crossing(make_arc(rot.apply(p), rot.apply(q)), make_arc(rot.apply(r), rot.apply(s)));
    if (base.in_tolerance_band || rotated.in_tolerance_band) {
      ++band;
      continue;
    }
    failures += base.crosses != arcs_cross(e2, e1);
    failures += base.crosses != arcs_cross(e1.reversed(), e2);
    failures += base.crosses != rotated.crosses;
  }
  return {"crossing predicate symmetry, reversal and rotation", failures == 0,
          "failures=" + std::to_string(failures) + " band=" + std::to_string(band)};
}

inline SelfTestCheck check_gnomonic_pairs(std::uint64_t seed) {
  SeededStream stream(seed, 2);
  const UnitVector pole = sample_unit_vector(stream);
  const TangentFrame frame(pole);
  int disagreements = 0;
  int band = 0;
  for (int i = 0; i < 20000; ++i) {
    UnitVector pts[4];
    for (auto& p : pts) {
      do {
        p = sample_unit_vector(stream);
      } while (dot(p, pole) <= 0.05);
    }
    const CrossingTest sphere = test_crossing(make_arc(pts[0], pts[1]), make_arc(pts[2], pts[3]));
    const PlanarCrossTest plane =
        test_segment_crossing(gnomonic_project(pts[0], frame), gnomonic_project(pts[1], frame),
                              gnomonic_project(pts[2], frame), gnomonic_project(pts[3], frame));
    if (sphere.in_tolerance_band || plane.in_tolerance_band) {
      ++band;
    } else {
      disagreements += sphere.crosses != plane.crosses;
    }
  }
  return {"gnomonic segment test agrees with arc predicate", disagreements == 0,
          "disagreements=" + std::to_string(disagreements) + " band=" + std::to_string(band)};
}

inline SelfTestCheck check_drawing_oracles(std::uint64_t seed) {
  SeededStream poles(seed, 3);
  int mismatches = 0;
  std::uint64_t degeneracies = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    SeededStream stream(seed, 100 + t);
    const SphericalDrawing d = build_threshold_drawing(stream, 50, 0.6);
    const CrossingReport sphere = count_crossings(d);
    const CrossingReport unfiltered = count_crossings(d, {.prefilter = false});
    const PlanarCrossingCount plane = count_planar_crossings(project_drawing(d, choose_projection_pole(d, poles)));
    mismatches += sphere.cr != plane.crossings || sphere.cr != unfiltered.cr;
    degeneracies += sphere.degeneracies + plane.degeneracies();

    const UnitVector center = sample_unit_vector(poles);
    SeededStream cap_stream(seed, 200 + t);
    const SphericalDrawing cap = build_cap_drawing(cap_stream, 60, 0.3, center, 0.7);
    const PlanarCrossingCount gnomonic = count_gnomonic_crossings(cap, center);
    mismatches += count_crossings(cap).cr != gnomonic.crossings;
    degeneracies += gnomonic.degeneracies();
  }
  return {"stereographic, gnomonic and unfiltered counts match", mismatches == 0 && degeneracies == 0,
          "mismatches=" + std::to_string(mismatches) + " degeneracies=" + std::to_string(degeneracies)};
}

inline SelfTestCheck check_copies_identity(std::uint64_t seed) {
  SeededStream stream(seed, 4);
  const SphericalDrawing d = build_threshold_drawing(stream, 50, 0.6);
  const UnitVector pole = choose_projection_pole(d, stream);
  const CrossingReport single = count_crossings(d);
  bool ok = true;
  for (std::uint64_t k : {1u, 2u, 7u}) ok = ok && replicate_copies(d, k, pole, single).ratio_identity_exact;
  const PlanarCrossingCount four = count_planar_crossings(replicate_copies(d, 4, pole, single).planar);
  ok = ok && four.crossings == 4 * single.cr;
  return {"copies ratio identity", ok, "cr=" + std::to_string(single.cr)};
}

inline SelfTestCheck check_quadrature() {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double d = 0.05 + (std::numbers::pi - 0.05) * (k + 1) / 50.0;
    worst = std::max(worst, std::abs(joint_cross_probability_by_quadrature(d) - joint_cross_probability(d)));
  }
  const UnconditionalProbability u = unconditional_cross_probability();
  const bool ok = worst < 1e-8 && std::abs(u.quadrature - u.closed_form) < 1e-12;
  std::ostringstream detail;
  detail << "max_abs_error=" << worst << " unconditional=" << u.quadrature;
  return {"quadrature agrees with closed forms", ok, detail.str()};
}

inline SelfTestCheck check_limit_and_monotonicity() {
  const double limit = midrange_upper_limit();
  const bool ok = std::abs(ratio_function(1e-3) - limit) < 1e-6 && limit < 0.0900633 &&
                  std::abs(extrapolate_ratio_limit() - limit) < 1e-8 && check_monotonicity(10000);
  std::ostringstream detail;
  detail.precision(12);
  detail << "g(1e-3)=" << ratio_function(1e-3) << " limit=" << limit;
  return {"ratio limit and monotonicity", ok, detail.str()};
}

inline SelfTestCheck check_sampling(std::uint64_t seed) {
  SeededStream stream(seed, 5);
  const KsResult ks = pairwise_angle_density_test(stream, 100000);
  return {"arc length distribution (KS, 1%)", ks.passes_1pct(), "D=" + std::to_string(ks.statistic)};
}

inline SelfTestCheck check_probabilities(std::uint64_t seed) {
  constexpr std::uint64_t kTrials = 200000;
  const auto within = [](double mean, double p) {
    return std::abs(mean - p) <= 3.0 * std::sqrt(p * (1 - p) / double(kTrials));
  };
  const double pi = std::numbers::pi;
  ExperimentConfig c{.n = 0, .d = pi, .trials = kTrials, .master_seed = seed, .mode = ExperimentMode::kPairProbability};
  const ExperimentSummary pair = run_pair_probability(c);
  const BernoulliEstimate cond = estimate_conditional_cross_probability(pi / 2, kTrials, seed + 1);
  const BernoulliEstimate fixed = estimate_fixed_circles_cross_probability(pi / 2, pi / 2, kTrials, seed + 2);
  const bool ok = within(pair.mean, 0.125) && within(cond.mean(), conditional_cross_probability(pi / 2)) &&
                  within(fixed.mean(), fixed_circles_cross_probability(pi / 2, pi / 2));
  std::ostringstream detail;
  detail << "pair=" << pair.mean << " conditional=" << cond.mean() << " fixed=" << fixed.mean();
  return {"simulated crossing probabilities", ok, detail.str()};
}

}  // namespace detail

inline std::vector<SelfTestCheck> run_selftest(std::uint64_t seed = 0) {
  return {detail::check_predicate_symmetries(seed), detail::check_gnomonic_pairs(seed),
          detail::check_drawing_oracles(seed),      detail::check_copies_identity(seed),
          detail::check_quadrature(),               detail::check_limit_and_monotonicity(),
          detail::check_sampling(seed),             detail::check_probabilities(seed)};
}

}  // namespace midrange

#endif  // MIDRANGE_SELFTEST_HPP_
