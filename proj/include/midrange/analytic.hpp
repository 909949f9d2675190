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

// Closed-form expectations for random geodesic drawings with a distance
// threshold d, and the normalized crossing ratio
//
//   g(d) = (sin d - d cos d)^2 / (pi^2 (1 - cos d)^3),
//
// which increases on (0, pi) from 8 / (9 pi^2) to 1/8.

#ifndef MIDRANGE_ANALYTIC_HPP_
#define MIDRANGE_ANALYTIC_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "midrange/quadrature.hpp"

namespace midrange {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Reference values.  Only midrange_upper is used computationally; the lower
// bounds are documentation.  The lower bounds are stated in the standard
// orientation kappa(n, e) >= c * e^3 / n^2.
struct ReferenceConstants {
  static constexpr double midrange_upper = 8.0 / (9.0 * std::numbers::pi * std::numbers::pi);
  static constexpr double midrange_upper_decimal = 0.0900633;
  // Expected crossings of the uniform geodesic drawing of K_n is n^4/64 + o(n^4).
  static constexpr double moon_complete_constant = 1.0 / 64.0;
  static constexpr double crossing_lemma_lower = 1.0 / 64.0;
  static constexpr double ackerman_lower = 1.0 / 29.0;
};

static_assert(ReferenceConstants::midrange_upper < ReferenceConstants::midrange_upper_decimal);
static_assert(ReferenceConstants::midrange_upper_decimal - ReferenceConstants::midrange_upper < 1e-7);

struct AnalyticParams {
  double d = std::numbers::pi;
  std::uint64_t n = 2;
};

// Below this threshold the cancelling differences are evaluated by series.
inline constexpr double kSeriesSwitchover = 0.1;

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

inline double sin_minus_d_cos_naive(double d) { return std::sin(d) - d * std::cos(d); }

// sin d - d cos d = sum_{k>=1} (-1)^(k+1) 2k d^(2k+1) / (2k+1)!
inline double sin_minus_d_cos_series(double d) {
  const double d2 = d * d;
  return d * d2 * (1.0 / 3.0 + d2 * (-1.0 / 30.0 + d2 * (1.0 / 840.0 + d2 * (-1.0 / 45360.0))));
}

inline double one_minus_cos_naive(double d) { return 1.0 - std::cos(d); }

inline double one_minus_cos_series(double d) {
  const double d2 = d * d;
  return d2 * (1.0 / 2.0 + d2 * (-1.0 / 24.0 + d2 * (1.0 / 720.0 + d2 * (-1.0 / 40320.0))));
}

inline double ratio_from_parts(double f, double omc) {
  return f * f / (omc * omc * omc) / (std::numbers::pi * std::numbers::pi);
}

inline double ratio_function_naive(double d) {
  return ratio_from_parts(sin_minus_d_cos_naive(d), one_minus_cos_naive(d));
}

inline double ratio_function_series(double d) {
  return ratio_from_parts(sin_minus_d_cos_series(d), one_minus_cos_series(d));
}

}  // namespace detail

inline double sin_minus_d_cos(double d) {
  return d < kSeriesSwitchover ? detail::sin_minus_d_cos_series(d) : detail::sin_minus_d_cos_naive(d);
}

inline double one_minus_cos(double d) {
  return d < kSeriesSwitchover ? detail::one_minus_cos_series(d) : detail::one_minus_cos_naive(d);
}

inline double binomial2(std::uint64_t n) {
  return n < 2 ? 0.0 : 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
}

// Density of the length of the minor arc between two uniform points.
inline double arc_length_density(double alpha) {
  detail::require(alpha > 0.0 && alpha < std::numbers::pi, "arc_length_density: alpha outside (0, pi)");
  return 0.5 * std::sin(alpha);
}

// P[PQ crosses RS | |PQ| = alpha] for uniform R, S.
inline double conditional_cross_probability(double alpha) {
  detail::require(alpha > 0.0 && alpha <= std::numbers::pi, "conditional_cross_probability: alpha outside (0, pi]");
  return alpha / (4.0 * std::numbers::pi);
}

struct UnconditionalProbability {
  double closed_form = 0.125;
  double quadrature = 0.0;
};

// P[PQ crosses RS] for four independent uniform points, in closed form and
// by integrating the conditional probability against the length density.
inline UnconditionalProbability unconditional_cross_probability(double abs_tol = 1e-14) {
  constexpr double pi = std::numbers::pi;
  const double q = integrate([](double a) { return a / (4.0 * pi) * 0.5 * std::sin(a); }, 0.0, pi, abs_tol);
  return {0.125, q};
}

// Crossing probability of arcs of lengths alpha and beta placed uniformly
// on two fixed, distinct great circles.
inline double fixed_circles_cross_probability(double alpha, double beta) {
  constexpr double pi = std::numbers::pi;
  detail::require(alpha > 0.0 && alpha <= pi && beta > 0.0 && beta <= pi,
                  "fixed_circles_cross_probability: lengths outside (0, pi]");
  return alpha * beta / (2.0 * pi * pi);
}

// P[PQ crosses RS, |PQ| <= d, |RS| <= d] = (sin d - d cos d)^2 / (8 pi^2).
inline double joint_cross_probability(double d) {
  constexpr double pi = std::numbers::pi;
  detail::require(d > 0.0 && d <= pi, "joint_cross_probability: d outside (0, pi]");
  const double f = sin_minus_d_cos(d);
  return f * f / (8.0 * pi * pi);
}

// Iterated-quadrature evaluation of the same probability, straight from the
// integrand 2 (a / 2pi)(b / 2pi) (sin a / 2)(sin b / 2).
inline double joint_cross_probability_by_quadrature(double d, double abs_tol = 1e-12) {
  constexpr double pi = std::numbers::pi;
  detail::require(d > 0.0 && d <= pi, "joint_cross_probability_by_quadrature: d outside (0, pi]");
  auto integrand = [](double a, double b) {
    return 2.0 * (a / (2.0 * pi)) * (b / (2.0 * pi)) * 0.5 * std::sin(a) * 0.5 * std::sin(b);
  };
  return integrate_2d(integrand, 0.0, d, 0.0, d, abs_tol);
}

inline double cap_area(double d) {
  detail::require(d >= 0.0 && d <= std::numbers::pi, "cap_area: d outside [0, pi]");
  return 2.0 * std::numbers::pi * one_minus_cos(d);
}

// Expected edge count n (n - 1) (1 - cos d) / 4.
inline double expected_edges(const AnalyticParams& p) {
  detail::require(p.n >= 2, "expected_edges: n < 2");
  detail::require(p.d > 0.0 && p.d <= std::numbers::pi, "expected_edges: d outside (0, pi]");
  return static_cast<double>(p.n) * static_cast<double>(p.n - 1) * one_minus_cos(p.d) / 4.0;
}

// Expected crossings: joint probability times the number of unordered pairs
// of vertex-disjoint vertex pairs, C(n,2) C(n-2,2) / 2.
inline double expected_crossings(const AnalyticParams& p) {
  detail::require(p.d > 0.0 && p.d <= std::numbers::pi, "expected_crossings: d outside (0, pi]");
  if (p.n < 4) return 0.0;
  return joint_cross_probability(p.d) * 0.5 * binomial2(p.n) * binomial2(p.n - 2);
}

// Exact finite-n value of E[cr] n^2 / E[e]^3.
inline double finite_n_ratio_target(const AnalyticParams& p) {
  const double e = expected_edges(p);
  const double n = static_cast<double>(p.n);
  return expected_crossings(p) * n * n / (e * e * e);
}

inline double ratio_function(double d) {
  detail::require(d > 0.0 && d <= std::numbers::pi, "ratio_function: d outside (0, pi]");
  return d < kSeriesSwitchover ? detail::ratio_function_series(d) : detail::ratio_function_naive(d);
}

// Threshold for which the expected degree (n - 1)(1 - cos d)/2 equals
// 2 * edges_per_vertex.
inline double threshold_for_edges_per_vertex(std::uint64_t n, double edges_per_vertex) {
  detail::require(n >= 2, "threshold_for_edges_per_vertex: n < 2");
  const double omc = 4.0 * edges_per_vertex / static_cast<double>(n - 1);
  detail::require(omc > 0.0 && omc <= 2.0, "threshold_for_edges_per_vertex: density not attainable");
  return std::acos(1.0 - omc);
}

inline constexpr double midrange_upper_limit() { return ReferenceConstants::midrange_upper; }

// Richardson extrapolation of g to d -> 0 using g(d) = L (1 + c d^2 + O(d^4)).
inline double extrapolate_ratio_limit(double h1 = 1e-3, double h2 = 1e-4) {
  const double g1 = ratio_function(h1);
  const double g2 = ratio_function(h2);
  return (g2 * h1 * h1 - g1 * h2 * h2) / (h1 * h1 - h2 * h2);
}

// True iff g is strictly increasing on a uniform grid over [1e-3, pi].
inline bool check_monotonicity(std::uint64_t grid_points) {
  detail::require(grid_points >= 2, "check_monotonicity: need at least two grid points");
  constexpr double lo = 1e-3;
  constexpr double hi = std::numbers::pi;
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  double prev = ratio_function(lo);
  for (std::uint64_t i = 1; i < grid_points; ++i) {
    const double d = i + 1 == grid_points ? hi : lo + static_cast<double>(i) * step;
    const double g = ratio_function(d);
    if (!(g > prev)) return false;
    prev = g;
  }
  return true;
}

}  // namespace midrange

#endif  // MIDRANGE_ANALYTIC_HPP_
