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

#ifndef MIDRANGE_PLANAR_HPP_
#define MIDRANGE_PLANAR_HPP_

#include <algorithm>
#include <cmath>

namespace midrange {

struct PlanarPoint {
  double u = 0.0;
  double v = 0.0;

  friend constexpr PlanarPoint operator+(PlanarPoint a, PlanarPoint b) { return {a.u + b.u, a.v + b.v}; }
  friend constexpr PlanarPoint operator-(PlanarPoint a, PlanarPoint b) { return {a.u - b.u, a.v - b.v}; }
  friend constexpr PlanarPoint operator*(double s, PlanarPoint a) { return {s * a.u, s * a.v}; }
  friend constexpr bool operator==(PlanarPoint, PlanarPoint) = default;

  bool finite() const { return std::isfinite(u) && std::isfinite(v); }
};

constexpr double dot(PlanarPoint a, PlanarPoint b) { return a.u * b.u + a.v * b.v; }
constexpr double cross(PlanarPoint a, PlanarPoint b) { return a.u * b.v - a.v * b.u; }
inline double norm(PlanarPoint a) { return std::hypot(a.u, a.v); }

// Twice the signed area of (a, b, c); positive for a counter-clockwise turn.
constexpr double orient2d(PlanarPoint a, PlanarPoint b, PlanarPoint c) { return cross(b - a, c - a); }

struct PlanarCrossTest {
  bool crosses = false;
  bool in_tolerance_band = false;
};

// Proper intersection of segments [p1,p2] and [q1,q2].  Orientation values
// within `rel_tol` times the operand scale are reported as band cases and
// never as crossings.
inline PlanarCrossTest test_segment_crossing(PlanarPoint p1, PlanarPoint p2, PlanarPoint q1, PlanarPoint q2,
                                             double rel_tol = 1e-12) {
  const double o1 = orient2d(p1, p2, q1);
  const double o2 = orient2d(p1, p2, q2);
  const double o3 = orient2d(q1, q2, p1);
  const double o4 = orient2d(q1, q2, p2);
  const double scale_p = norm(p2 - p1) * std::max(norm(q1 - p1), norm(q2 - p1));
  const double scale_q = norm(q2 - q1) * std::max(norm(p1 - q1), norm(p2 - q1));
  const double tol_p = rel_tol * scale_p;
  const double tol_q = rel_tol * scale_q;

  const bool strict = ((o1 > tol_p && o2 < -tol_p) || (o1 < -tol_p && o2 > tol_p)) &&
                      ((o3 > tol_q && o4 < -tol_q) || (o3 < -tol_q && o4 > tol_q));
  if (strict) return {true, false};
  // Non-strict separation on both lines would still allow a touch.
  const bool loose = (o1 >= -tol_p || o2 >= -tol_p) && (o1 <= tol_p || o2 <= tol_p) &&
                     (o3 >= -tol_q || o4 >= -tol_q) && (o3 <= tol_q || o4 <= tol_q);
  const bool near_zero = std::abs(o1) <= tol_p || std::abs(o2) <= tol_p || std::abs(o3) <= tol_q ||
                         std::abs(o4) <= tol_q;
  return {false, loose && near_zero};
}

inline bool segments_cross(PlanarPoint p1, PlanarPoint p2, PlanarPoint q1, PlanarPoint q2) {
  return test_segment_crossing(p1, p2, q1, q2).crosses;
}

}  // namespace midrange

#endif  // MIDRANGE_PLANAR_HPP_
