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
#include <span>
#include <string>
#include <vector>

#include "isoprofile/ext_real.hpp"
#include "isoprofile/monotone_fn.hpp"
#include "isoprofile/profile_core.hpp"

// Concentration -> isoperimetry bounds and the reverse integration.

namespace isoprofile {

// The unique y > 0 with y + log y = t. Requires finite t.
double solve_f_logf(double t);

// b(delta): equality case of y + log y >= log(1/(2 delta) - 1), delta in (0, 1/2).
double b_of_delta(double delta);

// inf over delta in (0, lambda] of b(delta) / log(1/delta), lambda in (0, 1/2).
double c_lambda(double lambda);

struct Thm1Constants {
  double lambda = 0.0;
  double c_lambda = 0.0;

  static Thm1Constants compute(double lambda);
};

struct Thm2Constants {
  // +inf stands for the kappa = 0 default where the growth condition is
  // vacuous and every delta0 is admissible; the factor 1 - 1/(2 delta0) is 1.
  double delta0 = 0.0;
  double alpha_r0 = 0.0;
  double lambda0 = 0.0;
  double c_delta0 = 0.0;
  ExtReal R0;

  static Thm2Constants compute(const MonotoneFn& alpha, double delta0, double r0);
};

enum class Thm1Variant {
  // Uses concavity of the profile, which is not verified here. Opt-in.
  strong,
  weak,
};

// 64 geometric points in (1e-4, 1/2 - 1e-4).
std::vector<double> default_lambda_grid();

// v -> c_lambda * min(v gamma(log 1/v), m * lambda gamma(log 1/lambda)) with
// m = 1 (strong) or lambda / (1 - lambda) (weak). Requires spec.kappa == 0.
IsoProfile thm1_bound(const ConcProfileSpec& spec, double lambda, Thm1Variant variant = Thm1Variant::weak);

// Pointwise maximum of thm1_bound over lambda_grid.
IsoProfile thm1_bound_sup(const ConcProfileSpec& spec, Thm1Variant variant = Thm1Variant::weak,
                          std::span<const double> lambda_grid = {});

// Three-term minimum with Thm2Constants. When spec.kappa == 0 and delta0 is
// unset, delta0 = +inf and r0 = 0 are used.
IsoProfile thm2_bound(const ConcProfileSpec& spec);
Thm2Constants thm2_constants(const ConcProfileSpec& spec);

// Bound from an integrability profile beta around a point.
struct GenBobkovResult {
  double R = 0.0;           // beta^{-1}(log 2)
  double delta0_prime = 0;  // 1/4 + delta0/2, or +inf when kappa == 0 without delta0
  double b_delta0 = 0.0;    // q / (1 - q), q = sqrt(delta0' / delta0)
  double r0_prime = 0.0;    // max(r0, b R) + R
  ConcProfileSpec alpha_spec;
  IsoProfile bound;
};

// alpha(r) = 0 on [0, R], beta(r - R) beyond; then thm2_bound (or the weak
// thm1 sup when kappa == 0) with alpha^{-1}(log 1/v) replaced by its upper
// bound 2 beta^{-1}(log 1/v). Throws HypothesisViolated if beta never
// exceeds log 2.
GenBobkovResult gen_bobkov_bound(const MonotoneFn& beta, double kappa, std::optional<double> delta0,
                                 double r0);

// k_{lambda0} / r0 with k = 2 c_{lambda0} (lambda0 / (1 - lambda0)) lambda0 log(1/lambda0).
double linear_iso_bound(double lambda0, double r0);

// The rate gamma in I(v) >= v gamma(log 1/v), given on [log 2, inf).
struct RateFn {
  std::string name;
  std::function<double(double)> gamma;
  // x -> integral_{log 2}^x dy / gamma(y). Required when gamma(log 2) == 0.
  std::function<double(double)> antiderivative;

  // y^{1 - 1/p}.
  static RateFn power(double p);
  // gamma(y) = y.
  static RateFn identity();
  static RateFn constant(double c);
};

struct IsoToConcOptions {
  // alpha is tabulated for values in [log 2, x_max]; constant beyond.
  double x_max = 1e5;
  // Per-panel quadrature tolerance.
  double panel_tol = 1e-10;
  // Relative linear-interpolation error allowed in the table.
  double interp_rel_tol = 1e-8;
};

// alpha = generalized inverse of x -> integral_{log 2}^x dy / gamma(y).
// Throws InvalidArgument if gamma <= 0 (or non-finite) at a sampled point.
ConcProfileSpec iso_to_conc(const RateFn& rate, const IsoToConcOptions& options = {});

}  // namespace isoprofile
