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

// Random distance-threshold geodesic drawings and exact crossing counts.

#ifndef MIDRANGE_DRAWING_HPP_
#define MIDRANGE_DRAWING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "midrange/geom.hpp"
#include "midrange/parallel.hpp"
#include "midrange/sampling.hpp"

namespace midrange {

struct Edge {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  bool shares_vertex(const Edge& o) const { return i == o.i || i == o.j || j == o.i || j == o.j; }
};

struct SphericalDrawing {
  std::vector<UnitVector> vertices;
  std::vector<Edge> edges;  // i < j, sorted lexicographically
  double threshold_d = std::numbers::pi;
  // Vertices rejected and resampled because they formed a coincident or
  // antipodal pair with an earlier vertex.
  std::uint64_t degeneracy_count = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;

  std::size_t n() const { return vertices.size(); }
  std::size_t e() const { return edges.size(); }
  friend bool operator==(const SphericalDrawing&, const SphericalDrawing&) = default;
};

struct CrossingReport {
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  std::uint64_t cr = 0;
  double ratio = 0.0;  // cr n^2 / e^3, or 0 without edges
  std::uint64_t degeneracies = 0;

  static CrossingReport make(std::uint64_t n, std::uint64_t e, std::uint64_t cr, std::uint64_t degeneracies) {
    CrossingReport r{n, e, cr, 0.0, degeneracies};
    if (e > 0) {
      const long double ld_e = static_cast<long double>(e);
      const long double ld_n = static_cast<long double>(n);
      r.ratio = static_cast<double>(static_cast<long double>(cr) * ld_n * ld_n / (ld_e * ld_e * ld_e));
    }
    return r;
  }
  friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

// Joins every pair of `vertices` at great-circle distance <= d.
inline SphericalDrawing make_threshold_drawing(std::vector<UnitVector> vertices, double d) {
  if (!(d > 0.0 && d <= std::numbers::pi)) throw std::invalid_argument("threshold drawing: d outside (0, pi]");
  SphericalDrawing out;
  out.threshold_d = d;
  out.vertices = std::move(vertices);
  const std::size_t n = out.vertices.size();
  // Dot products clear of cos(d) decide without acos; the rest use the
  // distance itself so the edge rule is exactly distance <= d.
  const double cos_d = std::cos(d);
  const auto joined = [&](const UnitVector& p, const UnitVector& q) {
    const double c = dot(p, q);
    if (c > cos_d + 1e-12) return true;
    if (c < cos_d - 1e-12) return false;
    return great_circle_distance(p, q) <= d;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (joined(out.vertices[i], out.vertices[j])) {
        if (is_degenerate_pair(out.vertices[i], out.vertices[j])) {
          throw DegenerateArc("threshold drawing: edge between coincident or antipodal vertices");
        }
        out.edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
  }
  return out;
}

namespace detail {

template <class Sampler>
std::vector<UnitVector> sample_separated(std::size_t n, Sampler&& sample, std::uint64_t& rejected) {
  std::vector<UnitVector> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const UnitVector p = sample();
    bool ok = true;
    for (const UnitVector& q : pts) {
      if (is_degenerate_pair(p, q)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      pts.push_back(p);
    } else {
      ++rejected;
    }
  }
  return pts;
}

}  // namespace detail

inline SphericalDrawing build_threshold_drawing(SeededStream& stream, std::size_t n, double d) {
  if (n < 2) throw std::invalid_argument("build_threshold_drawing: n < 2");
  std::uint64_t rejected = 0;
  auto pts = detail::sample_separated(n, [&] { return sample_unit_vector(stream); }, rejected);
  SphericalDrawing out = make_threshold_drawing(std::move(pts), d);
  out.degeneracy_count = rejected;
  out.seed = stream.master_seed();
  out.stream_index = stream.stream_index();
  return out;
}

// Same construction with the vertices drawn uniformly from a spherical cap.
inline SphericalDrawing build_cap_drawing(SeededStream& stream, std::size_t n, double d, const UnitVector& center,
                                          double cap_radius) {
  if (n < 2) throw std::invalid_argument("build_cap_drawing: n < 2");
  std::uint64_t rejected = 0;
  auto pts = detail::sample_separated(n, [&] { return sample_in_cap(stream, center, cap_radius); }, rejected);
  SphericalDrawing out = make_threshold_drawing(std::move(pts), d);
  out.degeneracy_count = rejected;
  out.seed = stream.master_seed();
  out.stream_index = stream.stream_index();
  return out;
}

struct CountOptions {
  // Reject pairs whose bounding caps are disjoint before the exact test.
  bool prefilter = true;
  unsigned threads = 1;
};

// Every pair of vertex-disjoint edges is tested with test_crossing.  Coincident
// great circles and tolerance-band touches are counted as degeneracies.
inline CrossingReport count_crossings(const SphericalDrawing& drawing, const CountOptions& options = {}) {
  const std::size_t e = drawing.edges.size();
  std::vector<GeodesicArc> arcs;
  arcs.reserve(e);
  // Each arc lies in the cap about its midpoint of radius length / 2.
  struct Cap {
    Vec3 center;
    double radius;
    double cos_r;
    double sin_r;
  };
  std::vector<Cap> caps;
  caps.reserve(e);
  constexpr double kCapSlack = 1e-9;
  for (const Edge& edge : drawing.edges) {
    const GeodesicArc& arc = arcs.emplace_back(make_arc(drawing.vertices[edge.i], drawing.vertices[edge.j]));
    const double r = 0.5 * arc.length() + kCapSlack;
    caps.push_back({arc.midpoint().vec(), r, std::cos(r), std::sin(r)});
  }

  struct Tally {
    std::uint64_t crossings = 0;
    std::uint64_t degeneracies = 0;
  };
  const unsigned threads = std::max(1u, options.threads);
  std::vector<Tally> tallies(threads);
  parallel_for(e, threads, [&](std::size_t a, unsigned worker) {
    Tally local;
    const Edge& ea = drawing.edges[a];
    const Cap& ca = caps[a];
    for (std::size_t b = a + 1; b < e; ++b) {
      if (ea.shares_vertex(drawing.edges[b])) continue;
      if (options.prefilter) {
        const Cap& cb = caps[b];
        if (ca.radius + cb.radius < std::numbers::pi &&
            dot(ca.center, cb.center) < ca.cos_r * cb.cos_r - ca.sin_r * cb.sin_r) {
          continue;
        }
      }
      try {
        const CrossingTest t = test_crossing(arcs[a], arcs[b]);
        if (t.crosses) {
          ++local.crossings;
        } else if (t.in_tolerance_band) {
          ++local.degeneracies;
        }
      } catch (const CoincidentGreatCircles&) {
        ++local.degeneracies;
      }
    }
    tallies[worker].crossings += local.crossings;
    tallies[worker].degeneracies += local.degeneracies;
  });

  std::uint64_t cr = 0;
  std::uint64_t degeneracies = 0;
  for (const Tally& t : tallies) {
    cr += t.crossings;
    degeneracies += t.degeneracies;
  }
  return CrossingReport::make(drawing.n(), e, cr, degeneracies);
}

}  // namespace midrange

#endif  // MIDRANGE_DRAWING_HPP_
