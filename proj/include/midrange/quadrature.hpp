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

#ifndef MIDRANGE_QUADRATURE_HPP_
#define MIDRANGE_QUADRATURE_HPP_

#include <algorithm>
#include <cmath>

namespace midrange {

namespace detail {

template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth, int min_depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || (min_depth <= 0 && std::abs(delta) <= 15.0 * tol)) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, min_depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, min_depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature with Richardson correction and interval
// halving.  `abs_tol` bounds the estimated absolute error for smooth
// integrands; the first `min_depth` levels are always subdivided.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-10, int max_depth = 48, int min_depth = 4) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, min_depth);
}

// Iterated integral of f(x, y) over [ax, bx] x [ay, by].
template <class F>
double integrate_2d(F&& f, double ax, double bx, double ay, double by, double abs_tol = 1e-10) {
  const double inner_tol = abs_tol / (2.0 * std::max(1.0, std::abs(bx - ax)));
  auto outer = [&](double x) { return integrate([&](double y) { return f(x, y); }, ay, by, inner_tol); };
  return integrate(outer, ax, bx, 0.5 * abs_tol);
}

}  // namespace midrange

#endif  // MIDRANGE_QUADRATURE_HPP_
