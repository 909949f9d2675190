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

// Exact rational arithmetic for the normalized crossing ratio.

#ifndef MIDRANGE_EXACT_HPP_
#define MIDRANGE_EXACT_HPP_

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace midrange {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// cr * n^2 / e^3 as an exact rational; zero when there are no edges.
inline Rational exact_ratio(std::uint64_t cr, std::uint64_t n, std::uint64_t e) {
  if (e == 0) return Rational(0);
  const BigInt num = BigInt(cr) * BigInt(n) * BigInt(n);
  const BigInt den = BigInt(e) * BigInt(e) * BigInt(e);
  return Rational(num, den);
}

// C(n,2) C(n-2,2) / 16: expected crossings of the uniform geodesic drawing
// of the complete graph.
inline Rational complete_graph_expected_crossings(std::uint64_t n) {
  if (n < 4) return Rational(0);
  const BigInt pairs = BigInt(n) * BigInt(n - 1) / 2;
  const BigInt rest = BigInt(n - 2) * BigInt(n - 3) / 2;
  return Rational(pairs * rest, BigInt(16));
}

}  // namespace midrange

#endif  // MIDRANGE_EXACT_HPP_
