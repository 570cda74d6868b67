// Copyright 2026 The riva Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdlib>
#include <utility>

namespace riva {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  int max_depth = 48;
  int initial_panels = 8;  // pre-split guards against missing narrow peaks
};

namespace detail {

template <class F>
double adaptive_simpson(F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [lo, hi]. The tolerance is
// resolved against a coarse first-pass estimate, so rel_tol controls the
// relative error of the final value.
template <class F>
double integrate(F&& f, double lo, double hi, QuadratureOptions opt = {}) {
  if (lo == hi) return 0.0;
  const int panels = opt.initial_panels < 1 ? 1 : opt.initial_panels;
  const double h = (hi - lo) / panels;

  // Coarse pass to fix the error scale.
  double coarse = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = lo + i * h;
    const double b = (i + 1 == panels) ? hi : lo + (i + 1) * h;
    coarse += (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
  }
  double eps = opt.rel_tol * std::fabs(coarse);
  if (eps < opt.abs_tol) eps = opt.abs_tol;
  if (eps == 0.0) eps = opt.rel_tol;  // integrand may be identically tiny
  const double panel_eps = eps / panels;

  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = lo + i * h;
    const double b = (i + 1 == panels) ? hi : lo + (i + 1) * h;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total += detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, panel_eps,
                                      opt.max_depth);
  }
  return total;
}

}  // namespace riva
