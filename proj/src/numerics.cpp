// Copyright 2026 The isoprofile Authors
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

#include "isoprofile/numerics.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "isoprofile/errors.hpp"

namespace isoprofile::numerics {
namespace {

double simpson_step(const ScalarFn& f, double a, double fa, double m, double fm, double b, double fb,
                    double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

// Nodes and weights of the 15-point Kronrod rule; odd indices are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

std::pair<double, double> kronrod_panel(const ScalarFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double gauss = fc * kWg[3];
  double kronrod = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    kronrod += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  return {kronrod * h, std::abs((kronrod - gauss) * h)};
}

double kronrod_step(const ScalarFn& f, double a, double b, double abs_tol, double rel_tol,
                    int depth) {
  const auto [value, err] = kronrod_panel(f, a, b);
  if (depth <= 0 || err <= std::max(abs_tol, rel_tol * std::abs(value))) return value;
  const double m = 0.5 * (a + b);
  return kronrod_step(f, a, m, 0.5 * abs_tol, rel_tol, depth - 1) +
         kronrod_step(f, m, b, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const ScalarFn& f, double a, double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, m, fm, b, fb, whole, tol, max_depth);
}

double gauss_kronrod(const ScalarFn& f, double a, double b, double abs_tol, double rel_tol,
                     int max_depth) {
  if (a == b) return 0.0;
  return kronrod_step(f, a, b, abs_tol, rel_tol, max_depth);
}

double solve_bracketed(const ScalarFn& f, double lo, double hi, double x_tol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) throw InvalidArgument("solve_bracketed: root is not bracketed");
  int side = 0;
  for (int i = 0; i < max_iter && hi - lo > x_tol; ++i) {
    double x = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    // Fall back to plain bisection every few steps so the bracket always shrinks.
    if (i % 4 == 3) x = 0.5 * (lo + hi);
    const double fx = f(x);
    if (fx == 0) return x;
    if ((fx < 0) == (flo < 0)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
  }
  return 0.5 * (lo + hi);
}

double newton_bracketed(const ScalarFn& f, const ScalarFn& df, double lo, double hi, double x0,
                        double x_tol, int max_iter) {
  double x = (x0 > lo && x0 < hi) ? x0 : 0.5 * (lo + hi);
  for (int i = 0; i < max_iter; ++i) {
    const double fx = f(x);
    if (fx == 0) return x;
    if (fx < 0) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = df(x);
    double next = (d > 0 && std::isfinite(d)) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= x_tol || hi - lo <= x_tol) return next;
    x = next;
  }
  return x;
}

}  // namespace isoprofile::numerics

namespace isoprofile::normal {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;
// Above this point erfc underflows before pdf does; use the continued fraction.
constexpr double kFarTail = 30.0;

double mills_continued_fraction(double x) {
  // R(x) = 1 / (x + 1 / (x + 2 / (x + 3 / (x + ...)))), evaluated backwards.
  double tail = x;
  for (int k = 120; k >= 1; --k) tail = x + k / tail;
  return 1.0 / tail;
}

}  // namespace

double pdf(double x) { return std::exp(-0.5 * x * x - kLogSqrt2Pi); }

double cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double sf(double x) { return 0.5 * std::erfc(x * kInvSqrt2); }

double mills_ratio(double x) {
  if (x >= kFarTail) return mills_continued_fraction(x);
  return sf(x) / pdf(x);
}

double log_sf(double x) {
  if (x >= kFarTail) return -0.5 * x * x - kLogSqrt2Pi + std::log(mills_continued_fraction(x));
  return std::log(sf(x));
}

double upper_quantile_log(double log_tail) {
  const double target = -log_tail;
  if (!(target >= std::log(2.0) - 1e-15)) throw InvalidArgument("normal::upper_quantile_log: tail mass must be <= 1/2");
  if (target <= std::log(2.0)) return 0.0;
  // Abramowitz-Stegun 26.2.23 as the starting point.
  const double y = std::sqrt(2.0 * target);
  const double x0 = y - (2.515517 + y * (0.802853 + y * 0.010328)) /
                            (1.0 + y * (1.432788 + y * (0.189269 + y * 0.001308)));
  // h(x) = -log sf(x) - target is increasing with h'(x) = 1 / mills(x).
  auto h = [target](double x) { return -log_sf(x) - target; };
  auto dh = [](double x) { return 1.0 / mills_ratio(x); };
  return numerics::newton_bracketed(h, dh, 0.0, y + 1.0, x0, 1e-15 * std::max(1.0, y));
}

double quantile(double v) {
  if (!(v > 0.0 && v < 1.0)) throw InvalidArgument("normal::quantile: v must lie in (0, 1)");
  if (v == 0.5) return 0.0;
  if (v < 0.5) return -upper_quantile_log(std::log(v));
  return upper_quantile_log(std::log1p(-v));
}

}  // namespace isoprofile::normal
