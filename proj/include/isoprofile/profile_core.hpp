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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isoprofile/ext_real.hpp"
#include "isoprofile/monotone_fn.hpp"

namespace isoprofile {

// A concentration lower bound K >= alpha together with the curvature data
// needed when the space is only kappa-semi-convex.
struct ConcProfileSpec {
  MonotoneFn alpha;
  double kappa = 0.0;
  // Required when kappa > 0: alpha(r) >= delta0 * kappa * r^2 for r >= r0.
  std::optional<double> delta0;
  std::optional<double> r0;
};

// Throws GrowthConditionViolated when kappa > 0 and either delta0 <= 1/2 or
// alpha(r) < delta0 * kappa * r^2 at some sampled r >= r0 (dense grid plus
// breakpoints), or when the tail grows too slowly to keep the inequality.
// Throws InvalidArgument for negative kappa or missing delta0/r0.
// A no-op when kappa == 0.
void check_growth_condition(const ConcProfileSpec& spec);

// Same check for a bare function, used by the integrability route.
void check_growth_condition(const MonotoneFn& alpha, double kappa, double delta0, double r0);

// alpha^{-1}(log 2): distances below it carry no concentration information.
ExtReal r_alpha(const MonotoneFn& alpha);

// R_alpha is +inf: alpha never exceeds log 2.
bool trivially_concentrated(const ConcProfileSpec& spec);

// gamma(x) = x / alpha^{-1}(x) for x > 0; 0 when the inverse is +inf and
// +inf when the inverse is 0.
ExtReal gamma(const MonotoneFn& alpha, double x);
inline ExtReal gamma(const ConcProfileSpec& spec, double x) { return gamma(spec.alpha, x); }

// Which formula produced an isoperimetric lower bound (or exact profile).
enum class Provenance {
  thm1_strong,
  thm1_weak,
  thm2,
  gen_bobkov,
  linear_iso,
  exact_model,
  oracle,
  tabulated,
  zero,
};

std::string to_string(Provenance p);

// A function on (0, 1/2] giving a lower bound for (or the exact value of)
// the symmetrized isoperimetric profile.
class IsoProfile {
 public:
  using Evaluator = std::function<ExtReal(double)>;

  // convexity_setting asserts that v -> value(v) / v is non-increasing.
  IsoProfile(Evaluator eval, Provenance provenance, bool convexity_setting = false);

  static IsoProfile zero();
  // Linear interpolation through (v, value) points sorted by v; constant
  // extrapolation outside the sampled range.
  static IsoProfile tabulated(std::vector<std::pair<double, double>> points,
                              Provenance provenance = Provenance::tabulated);

  // Requires 0 < v <= 1/2.
  ExtReal operator()(double v) const;
  std::vector<ExtReal> sample(std::span<const double> v_grid) const;

  Provenance provenance() const { return provenance_; }
  bool convexity_setting() const { return convexity_setting_; }

 private:
  Evaluator eval_;
  Provenance provenance_;
  bool convexity_setting_;
};

// Named closed forms shared with the JSON format and the CLI.
namespace closed_forms {

// K(r) = -log(1 - Phi(r)), the exact log-concentration profile of the
// standard Gaussian measure.
MonotoneFn gaussian_concentration();
// (r / p + (log 2)^{1/p})^p.
MonotoneFn power_shifted(double p);
// (log 2) * exp(r).
MonotoneFn log2_exp();

// Resolves "gaussian-conc", "log2-exp" or "power-shifted(p=<p>)".
// Throws InvalidArgument for unknown names.
MonotoneFn by_name(const std::string& name);

}  // namespace closed_forms

}  // namespace isoprofile
