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

// Spherical geometry on the unit sphere: unit vectors, minor great-circle
// arcs, the arc crossing predicate and the two projections used to redraw
// spherical drawings in the plane.

#ifndef MIDRANGE_GEOM_HPP_
#define MIDRANGE_GEOM_HPP_

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

#include "midrange/planar.hpp"

namespace midrange {

// Tolerances shared by the predicates below.
inline constexpr double kUnitNormTolerance = 1e-12;
inline constexpr double kArcMinSeparation = 1e-9;
inline constexpr double kMembershipMargin = 1e-12;
inline constexpr double kCoincidentCircleTolerance = 1e-10;
inline constexpr double kSharedEndpointTolerance = 1e-12;
inline constexpr double kGnomonicMinDot = 1e-6;
inline constexpr double kStereographicPoleTolerance = 1e-9;

class DegenerateArc : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CoincidentGreatCircles : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OutsideHemisphere : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class AtPole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

constexpr double max_abs_diff(const Vec3& a, const Vec3& b) {
  const Vec3 d = a - b;
  const double ax = d.x < 0 ? -d.x : d.x;
  const double ay = d.y < 0 ? -d.y : d.y;
  const double az = d.z < 0 ? -d.z : d.z;
  return std::max({ax, ay, az});
}

// A point on the unit sphere.  The norm invariant is checked whenever a
// value is constructed from raw coordinates.
class UnitVector {
 public:
  UnitVector() : v_{0.0, 0.0, 1.0} {}

  UnitVector(double x, double y, double z) : UnitVector(Vec3{x, y, z}) {}

  explicit UnitVector(const Vec3& v) : v_(v) {
    if (!(std::abs(dot(v, v) - 1.0) <= kUnitNormTolerance)) {
      throw std::invalid_argument("UnitVector: coordinates are not on the unit sphere");
    }
  }

  // Rescales any nonzero finite vector onto the sphere.
  static UnitVector normalize(const Vec3& v) {
    const double len = norm(v);
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw std::invalid_argument("UnitVector::normalize: zero or non-finite vector");
    }
    return UnitVector(Unchecked{}, (1.0 / len) * v);
  }

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  UnitVector operator-() const { return UnitVector(Unchecked{}, -v_); }
  friend bool operator==(const UnitVector&, const UnitVector&) = default;

 private:
  struct Unchecked {};
  UnitVector(Unchecked, const Vec3& v) : v_(v) {}

  Vec3 v_;
};

inline double dot(const UnitVector& a, const UnitVector& b) { return dot(a.vec(), b.vec()); }
inline Vec3 cross(const UnitVector& a, const UnitVector& b) { return cross(a.vec(), b.vec()); }

inline double great_circle_distance(const UnitVector& p, const UnitVector& q) {
  return std::acos(std::clamp(dot(p, q), -1.0, 1.0));
}

// Row-major proper rotation.
struct Rotation {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  // Rotation represented by the quaternion (w, x, y, z); the quaternion is
  // normalized first.
  static Rotation from_quaternion(double w, double x, double y, double z) {
    const double len = std::sqrt(w * w + x * x + y * y + z * z);
    w /= len;
    x /= len;
    y /= len;
    z /= len;
    return Rotation{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
                     2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
                     2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
  }

  Vec3 apply(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  UnitVector apply(const UnitVector& p) const { return UnitVector::normalize(apply(p.vec())); }
};

// Minor great-circle arc between two distinct, non-antipodal points.
class GeodesicArc {
 public:
  const UnitVector& a() const { return a_; }
  const UnitVector& b() const { return b_; }
  const UnitVector& normal() const { return normal_; }
  double length() const { return length_; }

  // Signed membership values of a point p on the arc's great circle:
  // (a x p).normal and (p x b).normal.  Both are nonnegative exactly on the
  // closed minor arc.
  double after_start(const Vec3& p) const { return dot(p, start_side_); }
  double before_end(const Vec3& p) const { return dot(p, end_side_); }

  UnitVector midpoint() const { return UnitVector::normalize(a_.vec() + b_.vec()); }

  GeodesicArc reversed() const { return GeodesicArc(b_, a_); }

  friend GeodesicArc make_arc(const UnitVector& p, const UnitVector& q);

 private:
  GeodesicArc(const UnitVector& p, const UnitVector& q)
      : a_(p),
        b_(q),
        normal_(UnitVector::normalize(cross(p, q))),
        length_(great_circle_distance(p, q)),
        start_side_(cross(normal_.vec(), p.vec())),
        end_side_(cross(q.vec(), normal_.vec())) {}

  UnitVector a_;
  UnitVector b_;
  UnitVector normal_;
  double length_;
  Vec3 start_side_;
  Vec3 end_side_;
};

// True when p and q coincide or are antipodal within kArcMinSeparation.
inline bool is_degenerate_pair(const UnitVector& p, const UnitVector& q) {
  if (std::abs(dot(p, q)) < 0.5) return false;
  const double len = great_circle_distance(p, q);
  // The cross product is the reliable witness: acos is flat near 0 and pi.
  const double sine = norm(cross(p, q));
  return len <= kArcMinSeparation || len >= std::numbers::pi - kArcMinSeparation || sine <= kArcMinSeparation;
}

inline GeodesicArc make_arc(const UnitVector& p, const UnitVector& q) {
  if (is_degenerate_pair(p, q)) throw DegenerateArc("make_arc: endpoints coincide or are antipodal");
  return GeodesicArc(p, q);
}

// Closed membership test for a point already on the arc's great circle.
inline bool arc_contains(const GeodesicArc& arc, const UnitVector& p) {
  assert(std::abs(dot(p, arc.normal())) <= 1e-9);
  return arc.after_start(p.vec()) >= -kMembershipMargin && arc.before_end(p.vec()) >= -kMembershipMargin;
}

inline bool share_endpoint(const GeodesicArc& e1, const GeodesicArc& e2) {
  const auto close = [](const UnitVector& p, const UnitVector& q) {
    return max_abs_diff(p.vec(), q.vec()) <= kSharedEndpointTolerance;
  };
  return close(e1.a(), e2.a()) || close(e1.a(), e2.b()) || close(e1.b(), e2.a()) || close(e1.b(), e2.b());
}

struct CrossingTest {
  bool crosses = false;
  // A candidate intersection point sits within the membership margin of an
  // arc endpoint: a touch that rounding could classify either way.
  bool in_tolerance_band = false;
};

// The great circles of two arcs meet in an antipodal pair {t, -t}; the arcs
// cross iff one of the pair lies strictly inside both arcs.
inline CrossingTest test_crossing(const GeodesicArc& e1, const GeodesicArc& e2) {
  if (share_endpoint(e1, e2)) return {};
  const Vec3 c = cross(e1.normal().vec(), e2.normal().vec());
  const double len = norm(c);
  if (len < kCoincidentCircleTolerance) {
    throw CoincidentGreatCircles("arcs_cross: arcs lie on the same great circle");
  }
  const Vec3 t = (1.0 / len) * c;
  const double s1 = e1.after_start(t);
  const double s2 = e1.before_end(t);
  const double s3 = e2.after_start(t);
  const double s4 = e2.before_end(t);
  // The margin of -t is obtained by negating every value.
  const double margin_t = std::min({s1, s2, s3, s4});
  const double margin_neg = -std::max({s1, s2, s3, s4});
  if (margin_t > kMembershipMargin || margin_neg > kMembershipMargin) return {true, false};
  const bool band = std::abs(margin_t) <= kMembershipMargin || std::abs(margin_neg) <= kMembershipMargin;
  return {false, band};
}

inline bool arcs_cross(const GeodesicArc& e1, const GeodesicArc& e2) { return test_crossing(e1, e2).crosses; }

// Orthonormal basis of the tangent plane at `pole`.  The first axis is the
// coordinate axis least aligned with the pole (lowest index on ties),
// Gram-Schmidt reduced against the pole; the second completes a right-handed
// frame.
struct TangentFrame {
  UnitVector pole;
  Vec3 e1;
  Vec3 e2;

  explicit TangentFrame(const UnitVector& p) : pole(p) {
    const Vec3& v = p.vec();
    std::size_t axis = 0;
    for (std::size_t i = 1; i < 3; ++i) {
      if (std::abs(v[i]) < std::abs(v[axis])) axis = i;
    }
    Vec3 basis{axis == 0 ? 1.0 : 0.0, axis == 1 ? 1.0 : 0.0, axis == 2 ? 1.0 : 0.0};
    e1 = UnitVector::normalize(basis - dot(basis, v) * v).vec();
    e2 = cross(v, e1);
  }
};

inline PlanarPoint gnomonic_project(const UnitVector& p, const TangentFrame& frame) {
  const double h = dot(p, frame.pole);
  if (!(h > kGnomonicMinDot)) {
    throw OutsideHemisphere("gnomonic_project: point is not in the open hemisphere of the pole");
  }
  return {dot(p.vec(), frame.e1) / h, dot(p.vec(), frame.e2) / h};
}

inline PlanarPoint gnomonic_project(const UnitVector& p, const UnitVector& pole) {
  return gnomonic_project(p, TangentFrame(pole));
}

// Projection from `pole` onto the plane through the origin orthogonal to it.
inline PlanarPoint stereographic_project(const UnitVector& p, const TangentFrame& frame) {
  const double h = dot(p, frame.pole);
  if (!(h < 1.0 - kStereographicPoleTolerance)) {
    throw AtPole("stereographic_project: point coincides with the projection pole");
  }
  const double s = 1.0 / (1.0 - h);
  return {s * dot(p.vec(), frame.e1), s * dot(p.vec(), frame.e2)};
}

inline PlanarPoint stereographic_project(const UnitVector& p, const UnitVector& pole) {
  return stereographic_project(p, TangentFrame(pole));
}

// Spherical distance from `p` to the closed arc.
inline double distance_to_arc(const GeodesicArc& arc, const UnitVector& p) {
  const Vec3& n = arc.normal().vec();
  const Vec3 in_plane = p.vec() - dot(p.vec(), n) * n;
  if (norm(in_plane) > 1e-15) {
    const Vec3 foot = (1.0 / norm(in_plane)) * in_plane;
    if (arc.after_start(foot) >= 0.0 && arc.before_end(foot) >= 0.0) {
      return std::asin(std::min(1.0, std::abs(dot(p.vec(), n))));
    }
  }
  return std::min(great_circle_distance(p, arc.a()), great_circle_distance(p, arc.b()));
}

}  // namespace midrange

#endif  // MIDRANGE_GEOM_HPP_
