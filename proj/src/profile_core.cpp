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

#include "isoprofile/profile_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "isoprofile/errors.hpp"
#include "isoprofile/numerics.hpp"

namespace isoprofile {
namespace {

constexpr int kGrowthGridPoints = 4001;
constexpr double kGrowthRelTol = 1e-12;

[[noreturn]] void growth_failure(double r, const ExtReal& value, double required) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "growth condition alpha(r) >= delta0*kappa*r^2 fails at r = " << r << ": alpha(r) = " << value
      << " < " << required;
  throw GrowthConditionViolated(msg.str());
}

void check_point(const MonotoneFn& alpha, double coeff, double r) {
  const double required = coeff * r * r;
  const ExtReal value = alpha(r);
  if (value.is_infinite()) return;
  if (value.value() < required * (1.0 - kGrowthRelTol)) growth_failure(r, value, required);
}

void check_tail(const MonotoneFn& alpha, double coeff) {
  const Tail& t = alpha.tail();
  if (alpha.breakpoints().back().value.is_infinite()) return;
  std::ostringstream msg;
  msg << "growth condition alpha(r) >= delta0*kappa*r^2 fails asymptotically: " << to_string(t.kind)
      << " tail";
  switch (t.kind) {
    case Tail::Kind::infinite: return;
    case Tail::Kind::constant:
    case Tail::Kind::linear: throw GrowthConditionViolated(msg.str() + " grows sub-quadratically");
    case Tail::Kind::power:
      if (t.b > 2.0) return;
      if (t.b == 2.0 && t.a >= coeff * (1.0 - kGrowthRelTol)) return;
      msg << " c*r^p with c = " << t.a << ", p = " << t.b << " is below " << coeff << "*r^2";
      throw GrowthConditionViolated(msg.str());
    case Tail::Kind::quadratic_plus:
      if (t.a * t.b >= coeff * (1.0 - kGrowthRelTol)) return;
      msg << " coefficient " << t.a * t.b << " is below " << coeff;
      throw GrowthConditionViolated(msg.str());
  }
}

}  // namespace

void check_growth_condition(const MonotoneFn& alpha, double kappa, double delta0, double r0) {
  if (!(kappa >= 0) || !std::isfinite(kappa)) throw InvalidArgument("kappa must be finite and >= 0");
  if (kappa == 0) return;
  if (!(delta0 > 0.5)) {
    std::ostringstream msg;
    msg << "growth condition requires delta0 > 1/2 when kappa > 0 (got delta0 = " << delta0 << ")";
    throw GrowthConditionViolated(msg.str());
  }
  if (!(r0 >= 0) || !std::isfinite(r0)) throw InvalidArgument("r0 must be finite and >= 0");
  const double coeff = delta0 * kappa;
  const double r_hi = 8.0 * std::max({alpha.last_radius(), r0, 1.0}) + 20.0;
  for (int i = 0; i < kGrowthGridPoints; ++i) {
    check_point(alpha, coeff, r0 + (r_hi - r0) * i / (kGrowthGridPoints - 1));
  }
  for (const auto& bp : alpha.breakpoints()) {
    if (bp.r >= r0) check_point(alpha, coeff, bp.r);
  }
  check_tail(alpha, coeff);
}

void check_growth_condition(const ConcProfileSpec& spec) {
  if (!(spec.kappa >= 0) || !std::isfinite(spec.kappa)) throw InvalidArgument("kappa must be finite and >= 0");
  if (spec.kappa == 0) return;
  if (!spec.delta0 || !spec.r0) throw InvalidArgument("kappa > 0 requires both delta0 and r0");
  check_growth_condition(spec.alpha, spec.kappa, *spec.delta0, *spec.r0);
}

ExtReal r_alpha(const MonotoneFn& alpha) { return alpha.inverse(std::numbers::ln2); }

bool trivially_concentrated(const ConcProfileSpec& spec) { return r_alpha(spec.alpha).is_infinite(); }

ExtReal gamma(const MonotoneFn& alpha, double x) {
  if (!(x > 0)) throw InvalidArgument("gamma: x must be positive");
  return divide(x, alpha.inverse(x));
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::thm1_strong: return "thm1-strong";
    case Provenance::thm1_weak: return "thm1-weak";
    case Provenance::thm2: return "thm2";
    case Provenance::gen_bobkov: return "gen-bobkov";
    case Provenance::linear_iso: return "linear-iso";
    case Provenance::exact_model: return "exact-model";
    case Provenance::oracle: return "oracle";
    case Provenance::tabulated: return "tabulated";
    case Provenance::zero: return "zero";
  }
  return "unknown";
}

IsoProfile::IsoProfile(Evaluator eval, Provenance provenance, bool convexity_setting)
    : eval_(std::move(eval)), provenance_(provenance), convexity_setting_(convexity_setting) {
  if (!eval_) throw InvalidArgument("IsoProfile: evaluator must be callable");
}

IsoProfile IsoProfile::zero() {
  return IsoProfile([](double) { return ExtReal(0.0); }, Provenance::zero);
}

IsoProfile IsoProfile::tabulated(std::vector<std::pair<double, double>> points, Provenance provenance) {
  if (points.empty()) throw InvalidArgument("IsoProfile::tabulated: no points");
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].second >= 0)) throw InvalidArgument("IsoProfile::tabulated: values must be >= 0");
    if (i > 0 && points[i].first == points[i - 1].first)
      throw InvalidArgument("IsoProfile::tabulated: duplicate v");
  }
  auto eval = [pts = std::move(points)](double v) -> ExtReal {
    if (v <= pts.front().first) return pts.front().second;
    if (v >= pts.back().first) return pts.back().second;
    const auto it = std::upper_bound(pts.begin(), pts.end(), v,
                                     [](double x, const auto& p) { return x < p.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (v - lo.first) / (hi.first - lo.first);
    return lo.second + t * (hi.second - lo.second);
  };
  return IsoProfile(std::move(eval), provenance);
}

ExtReal IsoProfile::operator()(double v) const {
  if (!(v > 0.0 && v <= 0.5)) throw InvalidArgument("IsoProfile: v must lie in (0, 1/2]");
  return eval_(v);
}

std::vector<ExtReal> IsoProfile::sample(std::span<const double> v_grid) const {
  std::vector<ExtReal> out;
  out.reserve(v_grid.size());
  for (double v : v_grid) out.push_back((*this)(v));
  return out;
}

namespace closed_forms {
namespace {

std::vector<double> default_samples(double r_max, int n) {
  std::vector<double> r(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) r[static_cast<std::size_t>(i)] = r_max * i / n;
  return r;
}

}  // namespace

MonotoneFn gaussian_concentration() {
  ClosedForm form;
  form.name = "gaussian-conc";
  form.eval = [](double r) -> ExtReal { return -normal::log_sf(r); };
  form.inverse = [](double s) -> ExtReal {
    if (s <= std::numbers::ln2) return 0.0;
    return normal::upper_quantile_log(-s);
  };
  // K(r) = r^2/2 + log r + O(1) >= r^2/2 asymptotically.
  return MonotoneFn::from_closed_form(form, default_samples(8.0, 32), Tail::power(0.5, 2.0));
}

MonotoneFn power_shifted(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidArgument("power_shifted: p must be >= 1");
  const double base = std::pow(std::numbers::ln2, 1.0 / p);
  ClosedForm form;
  std::ostringstream name;
  name.precision(17);
  name << "power-shifted(p=" << p << ")";
  form.name = name.str();
  form.eval = [p, base](double r) -> ExtReal { return std::pow(r / p + base, p); };
  form.inverse = [p, base](double s) -> ExtReal {
    if (s <= std::numbers::ln2) return 0.0;
    return p * (std::pow(s, 1.0 / p) - base);
  };
  return MonotoneFn::from_closed_form(form, default_samples(20.0, 40), Tail::power(std::pow(p, -p), p));
}

MonotoneFn log2_exp() {
  ClosedForm form;
  form.name = "log2-exp";
  form.eval = [](double r) -> ExtReal { return std::numbers::ln2 * std::exp(r); };
  form.inverse = [](double s) -> ExtReal {
    if (s <= std::numbers::ln2) return 0.0;
    return std::log(s / std::numbers::ln2);
  };
  // Faster than any power; recorded as a cubic for the asymptotic check.
  return MonotoneFn::from_closed_form(form, default_samples(20.0, 40), Tail::power(std::numbers::ln2 / 6.0, 3.0));
}

MonotoneFn by_name(const std::string& name) {
  if (name == "gaussian-conc") return gaussian_concentration();
  if (name == "log2-exp") return log2_exp();
  const std::string prefix = "power-shifted(p=";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
    const std::string num = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    return power_shifted(parse_ext_real(num).value());
  }
  throw InvalidArgument("unknown closed form '" + name + "'");
}

}  // namespace closed_forms

}  // namespace isoprofile
