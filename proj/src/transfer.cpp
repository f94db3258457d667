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

#include "isoprofile/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "isoprofile/errors.hpp"
#include "isoprofile/numerics.hpp"

namespace isoprofile {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;

// Smallest delta the c_lambda scan reaches; b(delta) / log(1/delta) keeps
// increasing towards 1 below it.
constexpr double kLogDeltaFloor = -690.0;
constexpr int kCLambdaGrid = 400;

void require_lambda(double lambda, const char* what) {
  if (!(lambda > 0.0 && lambda < 0.5)) {
    std::ostringstream msg;
    msg << what << ": lambda must lie in (0, 1/2), got " << lambda;
    throw InvalidArgument(msg.str());
  }
}

double c_lambda_ratio(double log_delta) {
  return b_of_delta(std::exp(log_delta)) / -log_delta;
}

// Third term of the small/large-set minimum: exp(-kappa R0^2 / 2) / (4 R0).
ExtReal large_set_term(double kappa, const ExtReal& R0) {
  if (R0.is_infinite()) return 0.0;
  const double r = R0.value();
  return divide(std::exp(-0.5 * kappa * r * r) / 4.0, r);
}

struct LambdaTerm {
  double c = 0.0;
  ExtReal cap;  // c_lambda * m * lambda * gamma(log 1/lambda)
};

LambdaTerm lambda_term(const MonotoneFn& alpha, double lambda, Thm1Variant variant) {
  const double c = c_lambda(lambda);
  const double m = variant == Thm1Variant::weak ? lambda / (1.0 - lambda) : 1.0;
  return {c, c * (m * lambda * gamma(alpha, std::log(1.0 / lambda)))};
}

void require_kappa_zero(const ConcProfileSpec& spec) {
  if (spec.kappa != 0.0) {
    throw InvalidArgument("the kappa = 0 bound requires kappa == 0; use the curvature-aware bound for kappa > 0");
  }
}

// Evaluates max over lambda of min(c_lambda * vterm(v), cap_lambda).
IsoProfile lambda_sup(std::vector<LambdaTerm> terms, std::function<ExtReal(double)> vterm,
                      Provenance provenance) {
  auto eval = [terms = std::move(terms), vterm = std::move(vterm)](double v) -> ExtReal {
    const ExtReal shape = vterm(v);
    ExtReal best = 0.0;
    for (const auto& t : terms) best = max(best, min(t.c * shape, t.cap));
    return best;
  };
  return IsoProfile(std::move(eval), provenance);
}

}  // namespace

double solve_f_logf(double t) {
  if (!std::isfinite(t)) throw InvalidArgument("solve_f_logf: t must be finite");
  // Solve in u = log y, where u + e^u = t is increasing and convex.
  double lo, hi, u0;
  if (t <= 1.0) {
    lo = t - 1.0;
    hi = std::min(t, 0.0);
    u0 = t - std::exp(t);
  } else {
    lo = 0.0;
    hi = std::log(t);
    u0 = std::log(t - std::log(t));
  }
  const double u = numerics::newton_bracketed([t](double x) { return std::exp(x) + x - t; },
                                              [](double x) { return std::exp(x) + 1.0; }, lo, hi, u0,
                                              1e-15 * std::max(1.0, std::abs(t)));
  // Polish in y: an error du in u is an error y du in y, which matters for large t.
  double y = std::exp(u);
  for (int i = 0; i < 3; ++i) {
    const double step = (y + std::log(y) - t) / (1.0 + 1.0 / y);
    if (!(y - step > 0.0)) break;
    y -= step;
    if (std::abs(step) <= 1e-17 * y) break;
  }
  return y;
}

double b_of_delta(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) throw InvalidArgument("b_of_delta: delta must lie in (0, 1/2)");
  return solve_f_logf(std::log1p(-2.0 * delta) - std::log(2.0 * delta));
}

double c_lambda(double lambda) {
  require_lambda(lambda, "c_lambda");
  const double top = std::log(lambda);
  if (top <= kLogDeltaFloor) return c_lambda_ratio(top);
  std::vector<double> grid(kCLambdaGrid + 1);
  std::size_t best = 0;
  double best_value = kInf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = top + (kLogDeltaFloor - top) * static_cast<double>(i) / kCLambdaGrid;
    const double value = c_lambda_ratio(grid[i]);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  // Golden-section refinement between the neighbours of the grid minimum.
  double a = grid[std::min(best + 1, grid.size() - 1)];
  double b = grid[best == 0 ? 0 : best - 1];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = c_lambda_ratio(x1);
  double f2 = c_lambda_ratio(x2);
  for (int it = 0; it < 200 && b - a > 1e-12 * std::max(1.0, std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = c_lambda_ratio(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = c_lambda_ratio(x2);
    }
  }
  return std::min({best_value, f1, f2});
}

Thm1Constants Thm1Constants::compute(double lambda) { return {lambda, isoprofile::c_lambda(lambda)}; }

Thm2Constants Thm2Constants::compute(const MonotoneFn& alpha, double delta0, double r0) {
  if (!(delta0 > 0.5)) {
    std::ostringstream msg;
    msg << "delta0 must exceed 1/2 (got " << delta0 << ")";
    throw GrowthConditionViolated(msg.str());
  }
  if (!(r0 >= 0.0) || !std::isfinite(r0)) throw InvalidArgument("r0 must be finite and >= 0");
  const ExtReal a_r0 = alpha(r0);
  if (a_r0.is_infinite()) throw InvalidArgument("alpha(r0) must be finite; choose a smaller r0");
  Thm2Constants k;
  k.delta0 = delta0;
  k.alpha_r0 = a_r0.value();
  const double factor = std::isinf(delta0) ? 1.0 : 1.0 - 1.0 / (2.0 * delta0);
  k.lambda0 = std::min(std::exp(-k.alpha_r0), std::exp(-std::log(16.0) / factor));
  k.c_delta0 = std::numbers::e / (16.0 * std::numbers::e + 2.0) * factor;
  k.R0 = alpha.inverse(std::log(1.0 / k.lambda0)) + alpha.inverse(std::log(4.0));
  return k;
}

std::vector<double> default_lambda_grid() {
  constexpr int n = 64;
  const double lo = 1e-4;
  const double hi = 0.5 - 1e-4;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return grid;
}

IsoProfile thm1_bound(const ConcProfileSpec& spec, double lambda, Thm1Variant variant) {
  require_kappa_zero(spec);
  require_lambda(lambda, "thm1_bound");
  const double grid[] = {lambda};
  return thm1_bound_sup(spec, variant, grid);
}

IsoProfile thm1_bound_sup(const ConcProfileSpec& spec, Thm1Variant variant, std::span<const double> lambda_grid) {
  require_kappa_zero(spec);
  std::vector<double> lambdas(lambda_grid.begin(), lambda_grid.end());
  if (lambdas.empty()) lambdas = default_lambda_grid();
  std::vector<LambdaTerm> terms;
  terms.reserve(lambdas.size());
  for (double lambda : lambdas) {
    require_lambda(lambda, "thm1_bound");
    terms.push_back(lambda_term(spec.alpha, lambda, variant));
  }
  auto vterm = [alpha = spec.alpha](double v) { return v * gamma(alpha, std::log(1.0 / v)); };
  return lambda_sup(std::move(terms), std::move(vterm),
                    variant == Thm1Variant::weak ? Provenance::thm1_weak : Provenance::thm1_strong);
}

Thm2Constants thm2_constants(const ConcProfileSpec& spec) {
  check_growth_condition(spec);
  const double delta0 = spec.delta0.value_or(kInf);
  const double r0 = spec.r0.value_or(0.0);
  return Thm2Constants::compute(spec.alpha, delta0, r0);
}

IsoProfile thm2_bound(const ConcProfileSpec& spec) {
  const Thm2Constants k = thm2_constants(spec);
  const ExtReal small_cap = k.c_delta0 * (k.lambda0 * gamma(spec.alpha, std::log(1.0 / k.lambda0)));
  const ExtReal cap = min(small_cap, large_set_term(spec.kappa, k.R0));
  auto eval = [alpha = spec.alpha, c = k.c_delta0, cap](double v) -> ExtReal {
    return min(c * (v * gamma(alpha, std::log(1.0 / v))), cap);
  };
  return IsoProfile(std::move(eval), Provenance::thm2);
}

GenBobkovResult gen_bobkov_bound(const MonotoneFn& beta, double kappa, std::optional<double> delta0, double r0) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw InvalidArgument("kappa must be finite and >= 0");
  if (!(r0 >= 0.0) || !std::isfinite(r0)) throw InvalidArgument("r0 must be finite and >= 0");
  if (kappa > 0.0) {
    if (!delta0) throw InvalidArgument("kappa > 0 requires delta0");
    check_growth_condition(beta, kappa, *delta0, r0);
  } else if (delta0 && !(*delta0 > 0.5)) {
    throw GrowthConditionViolated("delta0 must exceed 1/2");
  }
  const ExtReal R_ext = beta.inverse(kLn2);
  if (R_ext.is_infinite()) {
    throw HypothesisViolated("integrability profile beta never exceeds log 2, so the median radius is infinite");
  }
  const double R = R_ext.value();

  ClosedForm form;
  form.name = "shifted(" + (beta.closed_form() ? beta.closed_form()->name : std::string("table")) + ")";
  form.eval = [beta, R](double r) -> ExtReal { return r <= R ? ExtReal(0.0) : beta(r - R); };
  form.inverse = [beta, R](double s) -> ExtReal { return s < 0.0 ? ExtReal(0.0) : R + beta.inverse(s); };
  std::vector<double> samples{0.0};
  if (R > 0.0) samples.push_back(R);
  for (const auto& bp : beta.breakpoints()) {
    if (bp.r > 0.0) samples.push_back(R + bp.r);
  }
  GenBobkovResult out{R, kInf, 0.0, r0 + R,
                      ConcProfileSpec{MonotoneFn::from_closed_form(form, samples, beta.tail()), kappa, delta0,
                                      r0 + R},
                      IsoProfile::zero()};
  const MonotoneFn& alpha = out.alpha_spec.alpha;

  // v log(1/v) / (2 beta^{-1}(log 1/v)) <= v gamma_alpha(log 1/v).
  auto vterm = [beta](double v) -> ExtReal {
    const double x = std::log(1.0 / v);
    return v * divide(x, 2.0 * beta.inverse(x));
  };

  if (kappa == 0.0) {
    out.alpha_spec.delta0.reset();
    out.alpha_spec.r0.reset();
    std::vector<LambdaTerm> terms;
    for (double lambda : default_lambda_grid()) terms.push_back(lambda_term(alpha, lambda, Thm1Variant::weak));
    out.bound = lambda_sup(std::move(terms), std::move(vterm), Provenance::gen_bobkov);
    return out;
  }

  out.delta0_prime = 0.25 + *delta0 / 2.0;
  const double q = std::sqrt(out.delta0_prime / *delta0);
  out.b_delta0 = q / (1.0 - q);
  out.r0_prime = std::max(r0, out.b_delta0 * R) + R;
  out.alpha_spec.delta0 = out.delta0_prime;
  out.alpha_spec.r0 = out.r0_prime;
  const Thm2Constants k = thm2_constants(out.alpha_spec);
  const ExtReal cap = min(k.c_delta0 * (k.lambda0 * gamma(alpha, std::log(1.0 / k.lambda0))),
                          large_set_term(kappa, k.R0));
  out.bound = IsoProfile(
      [vterm, c = k.c_delta0, cap](double v) -> ExtReal { return min(c * vterm(v), cap); },
      Provenance::gen_bobkov);
  return out;
}

double linear_iso_bound(double lambda0, double r0) {
  require_lambda(lambda0, "linear_iso_bound");
  if (!(r0 > 0.0) || !std::isfinite(r0)) throw InvalidArgument("linear_iso_bound: r0 must be finite and > 0");
  const double k = 2.0 * c_lambda(lambda0) * (lambda0 / (1.0 - lambda0)) * lambda0 * std::log(1.0 / lambda0);
  return k / r0;
}

RateFn RateFn::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidArgument("RateFn::power: p must be finite and >= 1");
  std::ostringstream name;
  name.precision(17);
  name << "power(p=" << p << ")";
  const double base = std::pow(kLn2, 1.0 / p);
  return {name.str(), [p](double y) { return std::pow(y, 1.0 - 1.0 / p); },
          [p, base](double x) { return p * (std::pow(x, 1.0 / p) - base); }};
}

RateFn RateFn::identity() {
  return {"identity", [](double y) { return y; }, [](double x) { return std::log(x / kLn2); }};
}

RateFn RateFn::constant(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("RateFn::constant: c must be finite and > 0");
  return {"constant", [c](double) { return c; }, [c](double x) { return (x - kLn2) / c; }};
}

namespace {

class RateTabulator {
 public:
  RateTabulator(const RateFn& rate, const IsoToConcOptions& opt) : rate_(rate), opt_(opt) {
    const double g0 = rate_.gamma(kLn2);
    if (std::isnan(g0) || g0 < 0.0 || std::isinf(g0)) throw InvalidArgument(bad_rate(kLn2, g0));
    singular_ = g0 == 0.0;
    if (singular_ && !rate_.antiderivative) {
      throw InvalidArgument("rate gamma vanishes at log 2 and no antiderivative was supplied");
    }
  }

  std::vector<Breakpoint> run() {
    points_.push_back({0.0, kLn2});
    double a = kLn2;
    double r = 0.0;
    while (a < opt_.x_max) {
      const double b = std::min(2.0 * a, opt_.x_max);
      r = refine(a, r, b, 60);
      a = b;
    }
    return std::move(points_);
  }

 private:
  static std::string bad_rate(double y, double g) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "rate gamma must be positive and finite on [log 2, inf); gamma(" << y << ") = " << g;
    return msg.str();
  }

  double inv_gamma(double y) const {
    const double g = rate_.gamma(y);
    if (!(g > 0.0) || !std::isfinite(g)) throw InvalidArgument(bad_rate(y, g));
    return 1.0 / g;
  }

  double integral(double a, double b) const {
    if (singular_) {
      inv_gamma(b);
      return rate_.antiderivative(b) - rate_.antiderivative(a);
    }
    return numerics::adaptive_simpson([this](double y) { return inv_gamma(y); }, a, b, opt_.panel_tol);
  }

  void push(double r, double x) {
    // Equal radii: the generalized inverse keeps the largest value.
    if (r <= points_.back().r) {
      points_.back().value = x;
      return;
    }
    points_.push_back({r, x});
  }

  // Tabulates (r, x) on (a, b]; returns r(b).
  double refine(double a, double r_a, double b, int depth) {
    const double m = 0.5 * (a + b);
    const double r_m = r_a + integral(a, m);
    const double r_b = r_m + integral(m, b);
    const double span = r_b - r_a;
    const double x_lin = span > 0.0 ? a + (b - a) * (r_m - r_a) / span : b;
    if (depth == 0 || std::abs(x_lin - m) <= opt_.interp_rel_tol * m) {
      push(r_m, m);
      push(r_b, b);
      return r_b;
    }
    const double r_mid = refine(a, r_a, m, depth - 1);
    return refine(m, r_mid, b, depth - 1);
  }

  const RateFn& rate_;
  IsoToConcOptions opt_;
  bool singular_ = false;
  std::vector<Breakpoint> points_;
};

}  // namespace

ConcProfileSpec iso_to_conc(const RateFn& rate, const IsoToConcOptions& options) {
  if (!rate.gamma) throw InvalidArgument("iso_to_conc: rate has no gamma");
  if (!(options.x_max > 2.0 * kLn2) || !std::isfinite(options.x_max)) {
    throw InvalidArgument("iso_to_conc: x_max must be finite and > 2 log 2");
  }
  RateTabulator tab(rate, options);
  ConcProfileSpec spec{MonotoneFn(tab.run(), Tail::constant()), 0.0, std::nullopt, std::nullopt};
  return spec;
}

}  // namespace isoprofile
