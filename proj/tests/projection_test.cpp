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

#include "midrange/projection.hpp"

#include <cmath>
#include <numbers>
#include <variant>

#include <gtest/gtest.h>

#include "midrange/drawing.hpp"
#include "midrange/exact.hpp"
#include "midrange/sampling.hpp"

namespace midrange {
namespace {

constexpr double kPi = std::numbers::pi;

double distance_to_shape_start(const PlanarEdge& e, PlanarPoint p) { return norm(start_point(e.shape) - p); }
double distance_to_shape_end(const PlanarEdge& e, PlanarPoint p) { return norm(end_point(e.shape) - p); }

TEST(ProjectDrawingTest, EmptyEdgeSet) {
  SphericalDrawing d;
  d.vertices = {UnitVector(1, 0, 0), UnitVector(0, 1, 0), UnitVector(0, 0, -1)};
  const PlanarArcDrawing p = project_drawing(d, UnitVector(0, 0, 1));
  EXPECT_EQ(p.vertices.size(), 3u);
  EXPECT_TRUE(p.edges.empty());
}

TEST(ProjectDrawingTest, EquatorialArcLiesOnUnitCircle) {
  SphericalDrawing d;
  d.vertices = {UnitVector(1, 0, 0), UnitVector(0, 1, 0)};
  d.edges = {{0, 1}};
  const PlanarArcDrawing p = project_drawing(d, UnitVector(0, 0, 1));
  ASSERT_EQ(p.edges.size(), 1u);
  const auto* arc = std::get_if<CircularArc>(&p.edges[0].shape);
  ASSERT_NE(arc, nullptr);
  EXPECT_NEAR(arc->center.u, 0.0, 1e-15);
  EXPECT_NEAR(arc->center.v, 0.0, 1e-15);
  EXPECT_NEAR(arc->radius, 1.0, 1e-15);
  EXPECT_NEAR(std::abs(arc->sweep), kPi / 2, 1e-15);
  EXPECT_LT(distance_to_shape_start(p.edges[0], p.vertices[0]), 1e-15);
  EXPECT_LT(distance_to_shape_end(p.edges[0], p.vertices[1]), 1e-15);
}

TEST(ProjectDrawingTest, GreatCircleThroughPoleBecomesSegment) {
  SphericalDrawing d;
  d.vertices = {UnitVector(1, 0, 0), UnitVector::normalize({1, 0, -1})};
  d.edges = {{0, 1}};
  const PlanarArcDrawing p = project_drawing(d, UnitVector(0, 0, 1));
  ASSERT_TRUE(std::holds_alternative<StraightSegment>(p.edges[0].shape));
}

TEST(ProjectDrawingTest, PoleConflicts) {
  SphericalDrawing d;
  d.vertices = {UnitVector(0, 0, 1), UnitVector(0, 1, 0)};
  EXPECT_THROW(project_drawing(d, UnitVector(0, 0, 1)), PoleConflict);
  d.vertices = {UnitVector::normalize({1, 0, 1}), UnitVector::normalize({-1, 0, 1})};
  d.edges = {{0, 1}};
  EXPECT_THROW(project_drawing(d, UnitVector(0, 0, 1)), PoleConflict);
}

TEST(ProjectDrawingTest, EdgesPassThroughVertexImages) {
  SeededStream stream(21);
  const SphericalDrawing d = build_threshold_drawing(stream, 80, 1.0);
  SeededStream poles(22);
  const PlanarArcDrawing p = project_drawing(d, choose_projection_pole(d, poles));
  for (const PlanarEdge& e : p.edges) {
    const double scale = std::max(1.0, norm(p.vertices[e.ends.i]));
    ASSERT_LT(distance_to_shape_start(e, p.vertices[e.ends.i]), 1e-9 * scale);
    ASSERT_LT(distance_to_shape_end(e, p.vertices[e.ends.j]), 1e-9 * scale);
  }
}

TEST(BoundingBoxTest, ContainsSampledArcPoints) {
  SeededStream stream(23);
  for (int t = 0; t < 1000; ++t) {
    const CircularArc arc{{stream.normal(), stream.normal()}, 0.1 + stream.uniform(),
                          2 * kPi * stream.uniform() - kPi, (2 * stream.uniform() - 1) * 1.9 * kPi};
    const BoundingBox box = bounding_box(EdgeShape{arc});
    for (int k = 0; k <= 64; ++k) {
      const PlanarPoint q = point_at(arc, arc.start_angle + arc.sweep * k / 64.0);
      ASSERT_GE(q.u, box.min_u - 1e-12);
      ASSERT_LE(q.u, box.max_u + 1e-12);
      ASSERT_GE(q.v, box.min_v - 1e-12);
      ASSERT_LE(q.v, box.max_v + 1e-12);
    }
  }
}

TEST(CountPlanarCrossingsTest, TwoUnitCircleArcsCrossOnce) {
  // Unit circles about (0,0) and (1.2,0) meet at (0.6, +-0.8); only the
  // upper point lies on both arcs.
  PlanarArcDrawing p;
  p.vertices = {{1, 0}, {std::cos(1.5), std::sin(1.5)}, {1.2 + std::cos(2.0), std::sin(2.0)},
                {1.2 + std::cos(2.5), std::sin(2.5)}};
  p.edges = {{{0, 1}, CircularArc{{0, 0}, 1.0, 0.0, 1.5}}, {{2, 3}, CircularArc{{1.2, 0}, 1.0, 2.0, 0.5}}};
  const PlanarCrossingCount c = count_planar_crossings(p);
  EXPECT_EQ(c.crossings, 1u);
  EXPECT_EQ(c.degeneracies(), 0u);
  // Reversing orientation of one arc changes nothing.
  p.edges[1].shape = CircularArc{{1.2, 0}, 1.0, 2.5, -0.5};
  EXPECT_EQ(count_planar_crossings(p).crossings, 1u);
  // The complementary arc misses the upper point and reaches the lower one,
  // which the first arc does not contain.
  p.edges[1].shape = CircularArc{{1.2, 0}, 1.0, 2.5, 2 * kPi - 0.5};
  EXPECT_EQ(count_planar_crossings(p).crossings, 0u);
}

TEST(CountPlanarCrossingsTest, TangentCirclesAreFlagged) {
  PlanarArcDrawing p;
  p.vertices = {{0, -1}, {0, 1}, {2, 1}, {2, -1}};
  p.edges = {{{0, 1}, CircularArc{{0, 0}, 1.0, -kPi / 2, kPi}}, {{2, 3}, CircularArc{{2, 0}, 1.0, kPi / 2, kPi}}};
  const PlanarCrossingCount c = count_planar_crossings(p);
  EXPECT_EQ(c.crossings, 0u);
  EXPECT_EQ(c.tangencies, 1u);
}

TEST(CountPlanarCrossingsTest, CircleAndSegment) {
  PlanarArcDrawing p;
  p.vertices = {{-2, 0.5}, {2, 0.5}, {1, 0}, {-1, 0}};
  p.edges = {{{0, 1}, StraightSegment{{-2, 0.5}, {2, 0.5}}}, {{2, 3}, CircularArc{{0, 0}, 1.0, 0.0, kPi}}};
  EXPECT_EQ(count_planar_crossings(p).crossings, 2u);
  p.edges[1].shape = CircularArc{{0, 0}, 1.0, 0.0, kPi / 2};
  EXPECT_EQ(count_planar_crossings(p).crossings, 1u);
}

TEST(ProjectionOracleTest, StereographicCountMatchesSphericalCount) {
  SeededStream poles(31);
  std::uint64_t total = 0;
  for (int t = 0; t < 100; ++t) {
    SeededStream stream(3100, t);
    const SphericalDrawing d = build_threshold_drawing(stream, 50, 0.6);
    const CrossingReport sphere = count_crossings(d);
    const PlanarCrossingCount plane = count_planar_crossings(project_drawing(d, choose_projection_pole(d, poles)));
    ASSERT_EQ(sphere.degeneracies, 0u);
    ASSERT_EQ(plane.degeneracies(), 0u);
    ASSERT_EQ(plane.crossings, sphere.cr) << "trial " << t;
    total += sphere.cr;
  }
  EXPECT_GT(total, 0u);
}

TEST(ProjectionOracleTest, StereographicCountMatchesForLongArcs) {
  SeededStream poles(32);
  for (int t = 0; t < 20; ++t) {
    SeededStream stream(3200, t);
    const SphericalDrawing d = build_threshold_drawing(stream, 14, 2.5);
    const CrossingReport sphere = count_crossings(d);
    const PlanarCrossingCount plane = count_planar_crossings(project_drawing(d, choose_projection_pole(d, poles)));
    ASSERT_EQ(plane.degeneracies(), 0u);
    ASSERT_EQ(plane.crossings, sphere.cr) << "trial " << t;
  }
}

TEST(ProjectionOracleTest, GnomonicCountMatchesInsideCap) {
  SeededStream centers(33);
  std::uint64_t total = 0;
  for (int t = 0; t < 100; ++t) {
    SeededStream stream(3300, t);
    const UnitVector center = sample_unit_vector(centers);
    const SphericalDrawing d = build_cap_drawing(stream, 60, 0.3, center, 0.7);
    const CrossingReport sphere = count_crossings(d);
    const PlanarCrossingCount plane = count_gnomonic_crossings(d, center);
    ASSERT_EQ(sphere.degeneracies, 0u);
    ASSERT_EQ(plane.degeneracies(), 0u);
    ASSERT_EQ(plane.crossings, sphere.cr) << "trial " << t;
    total += sphere.cr;
  }
  EXPECT_GT(total, 0u);
}

TEST(ReplicateCopiesTest, SingleCopyKeepsRatio) {
  SeededStream stream(41);
  const SphericalDrawing d = build_threshold_drawing(stream, 50, 0.6);
  SeededStream poles(42);
  const CopiesResult r = replicate_copies(d, 1, choose_projection_pole(d, poles));
  EXPECT_EQ(r.combined, r.single);
  EXPECT_TRUE(r.ratio_identity_exact);
}

TEST(ReplicateCopiesTest, SevenCopiesScaleCounts) {
  SeededStream stream(43);
  const SphericalDrawing d = build_threshold_drawing(stream, 50, 0.6);
  SeededStream poles(44);
  const CopiesResult r = replicate_copies(d, 7, choose_projection_pole(d, poles));
  EXPECT_EQ(r.combined.cr, 7 * r.single.cr);
  EXPECT_EQ(r.combined.e, 7 * r.single.e);
  EXPECT_EQ(r.combined.n, 350u);
  EXPECT_TRUE(r.ratio_identity_exact);
  EXPECT_EQ(exact_ratio(r.combined.cr, r.combined.n, r.combined.e), exact_ratio(r.single.cr, 50, r.single.e));
  EXPECT_EQ(r.planar.vertices.size(), 350u);
  EXPECT_EQ(r.planar.edges.size(), 7 * d.e());
}

TEST(ReplicateCopiesTest, CombinedPlanarCountIsMultipleOfSingle) {
  SeededStream stream(45);
  const SphericalDrawing d = build_threshold_drawing(stream, 50, 0.6);
  SeededStream poles(46);
  const UnitVector pole = choose_projection_pole(d, poles);
  const PlanarCrossingCount single = count_planar_crossings(project_drawing(d, pole));
  const CopiesResult r = replicate_copies(d, 4, pole);
  const PlanarCrossingCount combined = count_planar_crossings(r.planar);
  EXPECT_EQ(combined.crossings, 4 * single.crossings);
  EXPECT_EQ(combined.crossings, r.combined.cr);
  EXPECT_EQ(combined.degeneracies(), 0u);
  // Copies occupy disjoint boxes.
  BoundingBox first;
  for (std::size_t i = 0; i < d.e(); ++i) first.add(bounding_box(r.planar.edges[i].shape));
  BoundingBox second;
  for (std::size_t i = d.e(); i < 2 * d.e(); ++i) second.add(bounding_box(r.planar.edges[i].shape));
  EXPECT_FALSE(first.overlaps(second, 0.0));
}

TEST(ReplicateCopiesTest, RejectsZeroCopies) {
  SeededStream stream(47);
  const SphericalDrawing d = build_threshold_drawing(stream, 10, 0.6);
  EXPECT_THROW(replicate_copies(d, 0, UnitVector(0, 0, 1), CrossingReport{}), std::invalid_argument);
}

TEST(ExactRatioTest, IdentityForAnyCopyCount) {
  SeededStream stream(48);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t n = 4 + stream.next_u64() % 100000;
    const std::uint64_t e = 1 + stream.next_u64() % 1000000;
    const std::uint64_t cr = stream.next_u64() % (e * (e - 1) / 2 + 1);
    const std::uint64_t k = 1 + stream.next_u64() % 1000;
    ASSERT_EQ(exact_ratio(k * cr, k * n, k * e), exact_ratio(cr, n, e));
  }
  EXPECT_EQ(exact_ratio(0, 10, 0), Rational(0));
  EXPECT_EQ(exact_ratio(3, 4, 2), Rational(6));
}

}  // namespace
}  // namespace midrange
