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

#pragma once

#include <functional>

// Scalar quadrature and root-finding shared by the profile modules.

namespace isoprofile::numerics {

using ScalarFn = std::function<double(double)>;

// Adaptive Simpson on [a, b]. Panels are split until the Richardson
// estimate is below tol (absolute, scaled down by half at each split).
double adaptive_simpson(const ScalarFn& f, double a, double b, double tol, int max_depth = 50);

// Adaptive 7/15-point Gauss-Kronrod on [a, b]; stops a panel when the
// Kronrod-Gauss difference is below max(abs_tol, rel_tol * |panel|).
double gauss_kronrod(const ScalarFn& f, double a, double b, double abs_tol, double rel_tol,
                     int max_depth = 40);

// Root of a monotone function on [lo, hi] where f(lo) and f(hi) have opposite
// signs (or one is zero). Bisection with secant acceleration (Illinois);
// stops when the bracket width is below x_tol.
double solve_bracketed(const ScalarFn& f, double lo, double hi, double x_tol, int max_iter = 400);

// Newton iteration safeguarded by a bracket [lo, hi] with f(lo) <= 0 <= f(hi)
// for an increasing f. Falls back to bisection whenever a step leaves the
// bracket.
double newton_bracketed(const ScalarFn& f, const ScalarFn& df, double lo, double hi, double x0,
                        double x_tol, int max_iter = 200);

}  // namespace isoprofile::numerics

namespace isoprofile::normal {

double pdf(double x);
double cdf(double x);
// 1 - cdf(x), accurate in the upper tail.
double sf(double x);
// log(sf(x)), finite for every finite x (no underflow in the far tail).
double log_sf(double x);
// sf(x) / pdf(x).
double mills_ratio(double x);
// x with log(sf(x)) = log_tail; requires log_tail <= log(1/2), so x >= 0.
double upper_quantile_log(double log_tail);
// x with cdf(x) = v for v in (0, 1); tails are solved in log space.
double quantile(double v);

}  // namespace isoprofile::normal
