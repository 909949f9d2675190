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

// Planar redrawings of spherical drawings.
//
// Stereographic projection maps every great circle not through the pole to
// a circle and every great circle through the pole to a line through the
// origin, so each geodesic edge becomes a circular arc or a segment and the
// crossing structure is preserved.  Gnomonic projection maps great circles
// to lines and serves as a second, straight-segment oracle inside a
// hemisphere.

#ifndef MIDRANGE_PROJECTION_HPP_
#define MIDRANGE_PROJECTION_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include "midrange/drawing.hpp"
#include "midrange/exact.hpp"
#include "midrange/geom.hpp"
#include "midrange/planar.hpp"
#include "midrange/sampling.hpp"

namespace midrange {

class PoleConflict : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kPoleClearance = 1e-6;
// Great circles whose normal is within this of the tangent plane are drawn
// as straight segments.
inline constexpr double kStraightEdgeTolerance = 1e-12;
inline constexpr double kPlanarAngleMargin = 1e-10;
inline constexpr double kPlanarParamMargin = 1e-10;
inline constexpr double kTangencyTolerance = 1e-10;

// Arc of the circle (center, radius) from start_angle through a signed sweep
// (counter-clockwise when positive), |sweep| < 2 pi.
struct CircularArc {
  PlanarPoint center;
  double radius = 1.0;
  double start_angle = 0.0;
  double sweep = 0.0;
};

struct StraightSegment {
  PlanarPoint from;
  PlanarPoint to;
};

using EdgeShape = std::variant<CircularArc, StraightSegment>;

struct PlanarEdge {
  Edge ends;
  EdgeShape shape;
};

struct PlanarArcDrawing {
  std::vector<PlanarPoint> vertices;
  std::vector<PlanarEdge> edges;
};

inline double wrap_two_pi(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a -= two_pi;
  return a;
}

inline PlanarPoint point_at(const CircularArc& arc, double angle) {
  return {arc.center.u + arc.radius * std::cos(angle), arc.center.v + arc.radius * std::sin(angle)};
}

inline PlanarPoint start_point(const EdgeShape& s) {
  if (const auto* arc = std::get_if<CircularArc>(&s)) return point_at(*arc, arc->start_angle);
  return std::get<StraightSegment>(s).from;
}

inline PlanarPoint end_point(const EdgeShape& s) {
  if (const auto* arc = std::get_if<CircularArc>(&s)) return point_at(*arc, arc->start_angle + arc->sweep);
  return std::get<StraightSegment>(s).to;
}

// The arc of the given circle that runs from `from` to `to` through `via`.
inline CircularArc arc_through(PlanarPoint center, double radius, PlanarPoint from, PlanarPoint via, PlanarPoint to) {
  const auto angle = [&](PlanarPoint p) { return std::atan2(p.v - center.v, p.u - center.u); };
  const double a0 = angle(from);
  const double ccw_to_end = wrap_two_pi(angle(to) - a0);
  const double ccw_to_via = wrap_two_pi(angle(via) - a0);
  const double sweep = ccw_to_via < ccw_to_end ? ccw_to_end : ccw_to_end - 2.0 * std::numbers::pi;
  return {center, radius, a0, sweep};
}

enum class Membership { kOutside, kInterior, kBand };

// Classifies a point on the arc's circle against the open arc.
inline Membership classify(const CircularArc& arc, PlanarPoint q) {
  const double phi = std::atan2(q.v - arc.center.v, q.u - arc.center.u);
  const double t = arc.sweep > 0.0 ? wrap_two_pi(phi - arc.start_angle) : wrap_two_pi(arc.start_angle - phi);
  const double len = std::abs(arc.sweep);
  const double m = kPlanarAngleMargin;
  if (t > m && t < len - m) return Membership::kInterior;
  if (t <= m || t >= 2.0 * std::numbers::pi - m || std::abs(t - len) <= m) return Membership::kBand;
  return Membership::kOutside;
}

// Classifies a point on the segment's line against the open segment.
inline Membership classify(const StraightSegment& seg, PlanarPoint q) {
  const PlanarPoint dir = seg.to - seg.from;
  const double s = dot(q - seg.from, dir) / dot(dir, dir);
  const double m = kPlanarParamMargin;
  if (s > m && s < 1.0 - m) return Membership::kInterior;
  if (std::abs(s) <= m || std::abs(s - 1.0) <= m) return Membership::kBand;
  return Membership::kOutside;
}

struct BoundingBox {
  double min_u = std::numeric_limits<double>::infinity();
  double min_v = std::numeric_limits<double>::infinity();
  double max_u = -std::numeric_limits<double>::infinity();
  double max_v = -std::numeric_limits<double>::infinity();

  void add(PlanarPoint p) {
    min_u = std::min(min_u, p.u);
    min_v = std::min(min_v, p.v);
    max_u = std::max(max_u, p.u);
    max_v = std::max(max_v, p.v);
  }
  void add(const BoundingBox& b) {
    add(PlanarPoint{b.min_u, b.min_v});
    add(PlanarPoint{b.max_u, b.max_v});
  }
  bool overlaps(const BoundingBox& o, double pad) const {
    return min_u <= o.max_u + pad && o.min_u <= max_u + pad && min_v <= o.max_v + pad && o.min_v <= max_v + pad;
  }
  double diameter() const { return std::hypot(max_u - min_u, max_v - min_v); }
};

inline BoundingBox bounding_box(const EdgeShape& shape) {
  BoundingBox box;
  if (const auto* seg = std::get_if<StraightSegment>(&shape)) {
    box.add(seg->from);
    box.add(seg->to);
    return box;
  }
  const auto& arc = std::get<CircularArc>(shape);
  box.add(point_at(arc, arc.start_angle));
  box.add(point_at(arc, arc.start_angle + arc.sweep));
  for (int k = 0; k < 4; ++k) {
    const double phi = k * 0.5 * std::numbers::pi;
    const double t = arc.sweep > 0.0 ? wrap_two_pi(phi - arc.start_angle) : wrap_two_pi(arc.start_angle - phi);
    if (t <= std::abs(arc.sweep)) box.add(point_at(arc, phi));
  }
  return box;
}

inline BoundingBox bounding_box(const PlanarArcDrawing& drawing) {
  BoundingBox box;
  for (const PlanarPoint& p : drawing.vertices) box.add(p);
  for (const PlanarEdge& e : drawing.edges) box.add(bounding_box(e.shape));
  return box;
}

// Smallest spherical distance from `pole` to a vertex or an edge.
inline double projection_clearance(const SphericalDrawing& drawing, const UnitVector& pole) {
  double clearance = std::numbers::pi;
  for (const UnitVector& v : drawing.vertices) clearance = std::min(clearance, great_circle_distance(v, pole));
  for (const Edge& e : drawing.edges) {
    clearance = std::min(clearance, distance_to_arc(make_arc(drawing.vertices[e.i], drawing.vertices[e.j]), pole));
  }
  return clearance;
}

// Best of `candidates` random poles by projection_clearance.
inline UnitVector choose_projection_pole(const SphericalDrawing& drawing, SeededStream& stream,
                                         int candidates = 32) {
  UnitVector best = sample_unit_vector(stream);
  double best_clearance = projection_clearance(drawing, best);
  for (int i = 1; i < candidates; ++i) {
    const UnitVector pole = sample_unit_vector(stream);
    const double c = projection_clearance(drawing, pole);
    if (c > best_clearance) {
      best = pole;
      best_clearance = c;
    }
  }
  return best;
}

inline PlanarArcDrawing project_drawing(const SphericalDrawing& drawing, const UnitVector& pole) {
  const TangentFrame frame(pole);
  PlanarArcDrawing out;
  out.vertices.reserve(drawing.vertices.size());
  for (const UnitVector& v : drawing.vertices) {
    if (great_circle_distance(v, pole) < kPoleClearance) throw PoleConflict("project_drawing: vertex at the pole");
    out.vertices.push_back(stereographic_project(v, frame));
  }
  out.edges.reserve(drawing.edges.size());
  for (const Edge& e : drawing.edges) {
    const GeodesicArc arc = make_arc(drawing.vertices[e.i], drawing.vertices[e.j]);
    if (distance_to_arc(arc, pole) < kPoleClearance) throw PoleConflict("project_drawing: edge passes the pole");
    const PlanarPoint from = out.vertices[e.i];
    const PlanarPoint to = out.vertices[e.j];
    // The plane n.x = 0 in frame coordinates (a, b, c) maps to the circle
    // |w + (a, b) / c| = 1 / |c|.
    const Vec3& n = arc.normal().vec();
    const double a = dot(n, frame.e1);
    const double b = dot(n, frame.e2);
    const double c = dot(n, frame.pole.vec());
    if (std::abs(c) < kStraightEdgeTolerance) {
      out.edges.push_back({e, StraightSegment{from, to}});
    } else {
      const PlanarPoint via = stereographic_project(arc.midpoint(), frame);
      out.edges.push_back({e, arc_through({-a / c, -b / c}, 1.0 / std::abs(c), from, via, to)});
    }
  }
  return out;
}

struct PlanarCrossingCount {
  std::uint64_t crossings = 0;
  std::uint64_t tangencies = 0;
  // Intersection points within the margin of an edge endpoint.
  std::uint64_t band = 0;

  std::uint64_t degeneracies() const { return tangencies + band; }
};

namespace detail {

struct Intersections {
  std::array<PlanarPoint, 2> points{};
  int count = 0;
  bool tangent = false;
};

inline Intersections intersect_circles(PlanarPoint c1, double r1, PlanarPoint c2, double r2) {
  Intersections out;
  const PlanarPoint delta = c2 - c1;
  const double dist = norm(delta);
  if (dist == 0.0) return out;
  const double a = (r1 * r1 - r2 * r2 + dist * dist) / (2.0 * dist);
  const double h2 = r1 * r1 - a * a;
  const double h = std::sqrt(std::abs(h2));
  const PlanarPoint base = c1 + (a / dist) * delta;
  if (h <= kTangencyTolerance * std::max(1.0, std::min(r1, r2))) {
    out.tangent = true;
    out.points[0] = base;
    out.count = 1;
    return out;
  }
  if (h2 < 0.0) return out;
  const PlanarPoint perp{-delta.v / dist, delta.u / dist};
  out.points = {base + h * perp, base - h * perp};
  out.count = 2;
  return out;
}

inline Intersections intersect_circle_line(PlanarPoint c, double r, PlanarPoint p0, PlanarPoint p1) {
  Intersections out;
  const PlanarPoint dir = p1 - p0;
  const double len = norm(dir);
  const PlanarPoint unit = (1.0 / len) * dir;
  // Foot of the perpendicular from the center.
  const double s = dot(c - p0, unit);
  const PlanarPoint foot = p0 + s * unit;
  const double off = norm(c - foot);
  const double h2 = r * r - off * off;
  const double h = std::sqrt(std::abs(h2));
  if (h <= kTangencyTolerance * std::max(1.0, r)) {
    out.tangent = true;
    out.points[0] = foot;
    out.count = 1;
    return out;
  }
  if (h2 < 0.0) return out;
  out.points = {foot + h * unit, foot - h * unit};
  out.count = 2;
  return out;
}

inline void tally(Membership ma, Membership mb, bool tangent, PlanarCrossingCount& count) {
  if (ma == Membership::kOutside || mb == Membership::kOutside) return;
  if (tangent) {
    ++count.tangencies;
  } else if (ma == Membership::kInterior && mb == Membership::kInterior) {
    ++count.crossings;
  } else {
    ++count.band;
  }
}

inline void count_pair(const EdgeShape& sa, const EdgeShape& sb, PlanarCrossingCount& count) {
  const auto* arc_a = std::get_if<CircularArc>(&sa);
  const auto* arc_b = std::get_if<CircularArc>(&sb);
  const auto* seg_a = std::get_if<StraightSegment>(&sa);
  const auto* seg_b = std::get_if<StraightSegment>(&sb);
  if (seg_a && seg_b) {
    const PlanarCrossTest t = test_segment_crossing(seg_a->from, seg_a->to, seg_b->from, seg_b->to);
    if (t.crosses) ++count.crossings;
    if (t.in_tolerance_band) ++count.band;
    return;
  }
  Intersections hits;
  if (arc_a && arc_b) {
    hits = intersect_circles(arc_a->center, arc_a->radius, arc_b->center, arc_b->radius);
  } else {
    const CircularArc& arc = arc_a ? *arc_a : *arc_b;
    const StraightSegment& seg = seg_a ? *seg_a : *seg_b;
    hits = intersect_circle_line(arc.center, arc.radius, seg.from, seg.to);
  }
  for (int k = 0; k < hits.count; ++k) {
    const PlanarPoint q = hits.points[k];
    const auto member = [&](const EdgeShape& s) { return std::visit([&](const auto& x) { return classify(x, q); }, s); };
    tally(member(sa), member(sb), hits.tangent, count);
  }
}

}  // namespace detail

// Proper crossings between vertex-disjoint edges, by exact circle-circle,
// circle-line and segment-segment intersection.
inline PlanarCrossingCount count_planar_crossings(const PlanarArcDrawing& drawing) {
  std::vector<BoundingBox> boxes;
  boxes.reserve(drawing.edges.size());
  for (const PlanarEdge& e : drawing.edges) boxes.push_back(bounding_box(e.shape));
  PlanarCrossingCount count;
  for (std::size_t a = 0; a < drawing.edges.size(); ++a) {
    for (std::size_t b = a + 1; b < drawing.edges.size(); ++b) {
      if (drawing.edges[a].ends.shares_vertex(drawing.edges[b].ends)) continue;
      const double pad = 1e-9 * std::max({1.0, boxes[a].diameter(), boxes[b].diameter()});
      if (!boxes[a].overlaps(boxes[b], pad)) continue;
      detail::count_pair(drawing.edges[a].shape, drawing.edges[b].shape, count);
    }
  }
  return count;
}

// Straight-segment count after gnomonic projection about `pole`; every
// vertex must lie in the open hemisphere of the pole.
inline PlanarCrossingCount count_gnomonic_crossings(const SphericalDrawing& drawing, const UnitVector& pole) {
  const TangentFrame frame(pole);
  std::vector<PlanarPoint> pts;
  pts.reserve(drawing.vertices.size());
  for (const UnitVector& v : drawing.vertices) pts.push_back(gnomonic_project(v, frame));
  PlanarCrossingCount count;
  const auto& edges = drawing.edges;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (edges[a].shares_vertex(edges[b])) continue;
      const PlanarCrossTest t = test_segment_crossing(pts[edges[a].i], pts[edges[a].j], pts[edges[b].i], pts[edges[b].j]);
      if (t.crosses) ++count.crossings;
      if (t.in_tolerance_band) ++count.band;
    }
  }
  return count;
}

inline EdgeShape translated(const EdgeShape& shape, PlanarPoint offset) {
  if (const auto* arc = std::get_if<CircularArc>(&shape)) {
    CircularArc moved = *arc;
    moved.center = moved.center + offset;
    return moved;
  }
  const auto& seg = std::get<StraightSegment>(shape);
  return StraightSegment{seg.from + offset, seg.to + offset};
}

struct CopiesResult {
  PlanarArcDrawing planar;
  CrossingReport single;
  CrossingReport combined;
  double spacing = 0.0;
  // cr' N^2 / e'^3 == cr n^2 / e^3 in exact rational arithmetic.
  bool ratio_identity_exact = false;
};

// Lays k translated copies of the projected drawing along the u axis at a
// spacing of 2.5 bounding-box diameters, so edges of different copies are
// disjoint.
inline CopiesResult replicate_copies(const SphericalDrawing& drawing, std::uint64_t k, const UnitVector& pole,
                                     const CrossingReport& single) {
  if (k < 1) throw std::invalid_argument("replicate_copies: k < 1");
  const PlanarArcDrawing base = project_drawing(drawing, pole);
  const BoundingBox box = bounding_box(base);
  CopiesResult out;
  out.single = single;
  out.spacing = 2.5 * std::max(box.diameter(), 1e-9);
  const std::uint32_t n = static_cast<std::uint32_t>(base.vertices.size());
  out.planar.vertices.reserve(k * base.vertices.size());
  out.planar.edges.reserve(k * base.edges.size());
  for (std::uint64_t c = 0; c < k; ++c) {
    const PlanarPoint offset{static_cast<double>(c) * out.spacing, 0.0};
    const std::uint32_t shift = static_cast<std::uint32_t>(c) * n;
    for (const PlanarPoint& p : base.vertices) out.planar.vertices.push_back(p + offset);
    for (const PlanarEdge& e : base.edges) {
      out.planar.edges.push_back({{e.ends.i + shift, e.ends.j + shift}, translated(e.shape, offset)});
    }
  }
  out.combined = CrossingReport::make(k * single.n, k * single.e, k * single.cr, k * single.degeneracies);
  out.ratio_identity_exact =
      exact_ratio(out.combined.cr, out.combined.n, out.combined.e) == exact_ratio(single.cr, single.n, single.e);
  return out;
}

inline CopiesResult replicate_copies(const SphericalDrawing& drawing, std::uint64_t k, const UnitVector& pole) {
  return replicate_copies(drawing, k, pole, count_crossings(drawing));
}

}  // namespace midrange

#endif  // MIDRANGE_PROJECTION_HPP_
