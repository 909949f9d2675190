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

// Reproducible random streams and uniform sampling on the unit sphere.

#ifndef MIDRANGE_SAMPLING_HPP_
#define MIDRANGE_SAMPLING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "midrange/geom.hpp"

namespace midrange {

// SplitMix64 finalizer (Steele, Lea & Flood).  Fixed so that a manifest of
// (master_seed, stream_index) pins every sample on every platform.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
  return splitmix64(master_seed ^ splitmix64(stream_index));
}

// A deterministic random stream identified by (master_seed, stream_index).
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard; the uniform and normal transforms are implemented here because
// the <random> distributions are implementation-defined.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t master_seed, std::uint64_t stream_index = 0)
      : master_seed_(master_seed), stream_index_(stream_index), engine_(mix_seed(master_seed, stream_index)) {}

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal, Marsaglia polar method.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline UnitVector sample_unit_vector(SeededStream& stream) {
  for (;;) {
    const Vec3 g{stream.normal(), stream.normal(), stream.normal()};
    if (norm(g) >= 1e-6) return UnitVector::normalize(g);
  }
}

// Uniform (Haar) random rotation via a uniformly random unit quaternion.
inline Rotation sample_rotation(SeededStream& stream) {
  double w, x, y, z, len;
  do {
    w = stream.normal();
    x = stream.normal();
    y = stream.normal();
    z = stream.normal();
    len = std::sqrt(w * w + x * x + y * y + z * z);
  } while (len < 1e-6);
  return Rotation::from_quaternion(w, x, y, z);
}

// Uniform sample from the cap of the given angular radius, by rejection.
inline UnitVector sample_in_cap(SeededStream& stream, const UnitVector& center, double radius) {
  const double min_dot = std::cos(radius);
  for (;;) {
    UnitVector p = sample_unit_vector(stream);
    if (dot(p, center) >= min_dot) return p;
  }
}

// CDF of the great-circle distance between two independent uniform points;
// its density is sin(alpha)/2 on (0, pi).
inline double arc_length_cdf(double alpha) {
  if (alpha <= 0.0) return 0.0;
  if (alpha >= std::numbers::pi) return 1.0;
  return 0.5 * (1.0 - std::cos(alpha));
}

// One-sample Kolmogorov-Smirnov statistic.  Sorts `samples` in place.
template <class Cdf>
double ks_statistic(std::span<double> samples, Cdf&& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

struct KsResult {
  double statistic = 0.0;
  std::size_t samples = 0;

  // Asymptotic two-sided critical value at the 1% level.
  double critical_value_1pct() const { return 1.63 / std::sqrt(static_cast<double>(samples)); }
  bool passes_1pct() const { return statistic < critical_value_1pct(); }
};

inline KsResult pairwise_angle_density_test(SeededStream& stream, std::size_t samples) {
  if (samples < 10000) throw std::invalid_argument("pairwise_angle_density_test: need at least 1e4 samples");
  std::vector<double> angles(samples);
  for (double& a : angles) {
    const UnitVector p = sample_unit_vector(stream);
    const UnitVector q = sample_unit_vector(stream);
    a = great_circle_distance(p, q);
  }
  return {ks_statistic(angles, arc_length_cdf), samples};
}

}  // namespace midrange

#endif  // MIDRANGE_SAMPLING_HPP_
