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

#include "isoprofile/model1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "isoprofile/errors.hpp"
#include "isoprofile/numerics.hpp"

namespace isoprofile {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Density below exp(-kTruncation) times its peak is dropped.
constexpr double kTruncation = 720.0;
// -log of the smallest positive double: every finite -log(mass) is below it.
constexpr double kLogMassCap = 745.2;
constexpr int kPanels = 4096;
constexpr int kScanPoints = 8192;
constexpr int kConvexityPoints = 4001;
constexpr double kPanelRelTol = 1e-13;

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_open_unit(double v, const char* what) {
  if (!(v > 0.0 && v < 1.0)) throw InvalidArgument(std::string(what) + ": v must lie in (0, 1), got " + describe(v));
}

}  // namespace

// ---------------------------------------------------------------------------
// CdfTable

CdfTable::CdfTable(std::function<double(double)> density, double lo, double hi, int panels)
    : density_(std::move(density)) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument("CdfTable: need finite lo < hi");
  if (panels < 1) throw InvalidArgument("CdfTable: need at least one panel");
  const auto n = static_cast<std::size_t>(panels);
  nodes_.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) nodes_[i] = lo + (hi - lo) * static_cast<double>(i) / panels;
  nodes_.back() = hi;
  std::vector<double> mass(n);
  for (std::size_t i = 0; i < n; ++i) mass[i] = partial(nodes_[i], nodes_[i + 1]);
  left_.assign(n + 1, 0.0);
  right_.assign(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) left_[i + 1] = left_[i] + mass[i];
  for (std::size_t i = n; i-- > 0;) right_[i] = right_[i + 1] + mass[i];
  total_ = 0.5 * (left_.back() + right_.front());
  if (!(total_ > 0.0) || !std::isfinite(total_)) throw InvalidArgument("CdfTable: density has no finite positive mass");
  for (auto& x : left_) x /= total_;
  for (auto& x : right_) x /= total_;
}

double CdfTable::partial(double a, double b) const {
  if (a >= b) return 0.0;
  return numerics::gauss_kronrod(density_, a, b, 0.0, kPanelRelTol);
}

std::size_t CdfTable::panel_of(double x) const {
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const auto i = static_cast<std::size_t>(it - nodes_.begin());
  return std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, nodes_.size() - 2);
}

double CdfTable::cdf(double x) const {
  if (x <= nodes_.front()) return 0.0;
  if (x >= nodes_.back()) return 1.0;
  const std::size_t i = panel_of(x);
  return std::min(1.0, left_[i] + partial(nodes_[i], x) / total_);
}

double CdfTable::sf(double x) const {
  if (x <= nodes_.front()) return 1.0;
  if (x >= nodes_.back()) return 0.0;
  const std::size_t i = panel_of(x);
  return std::min(1.0, right_[i + 1] + partial(x, nodes_[i + 1]) / total_);
}

double CdfTable::quantile(double v) const {
  require_open_unit(v, "quantile");
  if (v > 0.5) return upper_quantile(1.0 - v);
  // Last node with left mass <= v.
  const auto it = std::upper_bound(left_.begin(), left_.end(), v);
  const std::size_t i = std::min(static_cast<std::size_t>(it - left_.begin()) - 1, nodes_.size() - 2);
  const double a = nodes_[i];
  const double b = nodes_[i + 1];
  const double base = left_[i];
  auto f = [&](double x) { return base + partial(a, x) / total_ - v; };
  auto df = [&](double x) { return density_(x) / total_; };
  return numerics::newton_bracketed(f, df, a, b, 0.5 * (a + b), 1e-15 * std::max(1.0, std::abs(b)));
}

double CdfTable::upper_quantile(double s) const {
  require_open_unit(s, "upper_quantile");
  if (s > 0.5) return quantile(1.0 - s);
  // right_ is non-increasing: first node with right mass < s, minus one.
  const auto it = std::upper_bound(right_.begin(), right_.end(), s, [](double x, double r) { return x > r; });
  const std::size_t j = static_cast<std::size_t>(it - right_.begin());
  const std::size_t i = std::min(j == 0 ? 0 : j - 1, nodes_.size() - 2);
  const double a = nodes_[i];
  const double b = nodes_[i + 1];
  const double base = right_[i + 1];
  auto f = [&](double x) { return s - base - partial(x, b) / total_; };
  auto df = [&](double x) { return density_(x) / total_; };
  return numerics::newton_bracketed(f, df, a, b, 0.5 * (a + b), 1e-15 * std::max(1.0, std::abs(b)));
}

// ---------------------------------------------------------------------------
// Density1D

Density1D Density1D::gaussian() {
  Impl impl;
  impl.family = Family::gaussian;
  impl.name = "gaussian";
  impl.psi_raw = [](double x) { return 0.5 * x * x; };
  impl.log_partition = 0.5 * std::log(2.0 * std::numbers::pi);
  impl.psi_shift = -impl.log_partition;
  impl.min_psi2 = 1.0;
  impl.log_concave = true;
  impl.symmetric = true;
  return Density1D(std::make_shared<const Impl>(std::move(impl)));
}

Density1D Density1D::p_exponential(double p, double s_p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidArgument("p_exponential: p must be finite and > 0");
  if (!(s_p > 0.0) || !std::isfinite(s_p)) throw InvalidArgument("p_exponential: s_p must be finite and > 0");
  Impl impl;
  impl.family = Family::p_exponential;
  impl.name = "p_exponential(p=" + describe(p) + ",s_p=" + describe(s_p) + ")";
  impl.psi_raw = [p, s_p](double x) { return std::pow(std::abs(x / s_p), p); };
  impl.support = Support::real_line();
  impl.p = p;
  impl.s_p = s_p;
  impl.symmetric = true;
  return build(std::move(impl));
}

double Density1D::unit_mass_scale(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidArgument("unit_mass_scale: p must be finite and > 0");
  return 1.0 / (2.0 * std::tgamma(1.0 + 1.0 / p));
}

Density1D Density1D::custom(std::string name, std::function<double(double)> psi, Support support, double kappa) {
  if (!psi) throw InvalidArgument("custom density: psi must be callable");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw InvalidArgument("custom density: kappa must be finite and >= 0");
  if (!(support.lo < support.hi)) throw InvalidArgument("custom density: empty support");
  Impl impl;
  impl.family = Family::custom;
  impl.name = std::move(name);
  impl.psi_raw = std::move(psi);
  impl.support = support;
  impl.kappa = kappa;
  return build(std::move(impl));
}

Density1D Density1D::from_psi_table(std::vector<std::pair<double, double>> table, double kappa) {
  if (table.size() < 2) throw InvalidArgument("psi_table: need at least two rows");
  std::sort(table.begin(), table.end());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!std::isfinite(table[i].first) || !std::isfinite(table[i].second))
      throw InvalidArgument("psi_table: entries must be finite");
    if (i > 0 && table[i].first == table[i - 1].first) throw InvalidArgument("psi_table: duplicate x");
  }
  // psi'' of the interpolant, smeared over neighbouring cells.
  double min_d2 = kInf;
  for (std::size_t i = 1; i + 1 < table.size(); ++i) {
    const auto& [x0, y0] = table[i - 1];
    const auto& [x1, y1] = table[i];
    const auto& [x2, y2] = table[i + 1];
    const double d2 = 2.0 * ((y2 - y1) / (x2 - x1) - (y1 - y0) / (x1 - x0)) / (x2 - x0);
    min_d2 = std::min(min_d2, d2);
  }
  if (table.size() == 2) min_d2 = 0.0;
  if (min_d2 < -kappa - 1e-8) {
    throw InvalidArgument("psi_table: second differences reach " + describe(min_d2) + " < -kappa = " +
                          describe(-kappa));
  }
  auto psi = [table](double x) {
    const auto it = std::upper_bound(table.begin(), table.end(), x,
                                     [](double v, const auto& row) { return v < row.first; });
    if (it == table.begin()) return table.front().second;
    if (it == table.end()) return table.back().second;
    const auto& [xa, ya] = *(it - 1);
    const auto& [xb, yb] = *it;
    return ya + (yb - ya) * (x - xa) / (xb - xa);
  };
  Impl impl;
  impl.family = Family::custom;
  impl.name = "psi_table";
  impl.psi_raw = psi;
  impl.support = Support::interval(table.front().first, table.back().first);
  impl.kappa = kappa;
  impl.min_psi2 = min_d2;
  impl.log_concave = min_d2 >= -1e-8;
  impl.curvature_checked = true;
  return build(std::move(impl));
}

Density1D Density1D::oscillating_quadratic(double delta, double kappa, double a, double omega, Support support) {
  if (!(delta > 0.0) || !(kappa > 0.0)) throw InvalidArgument("oscillating_quadratic: delta and kappa must be > 0");
  if (!(a >= 0.0) || !(omega >= 0.0)) throw InvalidArgument("oscillating_quadratic: a and omega must be >= 0");
  if (a * omega * omega > kappa * (1.0 + 2.0 * delta) * (1.0 + 1e-12)) {
    throw InvalidArgument("oscillating_quadratic: a * omega^2 must not exceed kappa * (1 + 2 delta)");
  }
  const double c = delta * kappa;
  Impl impl;
  impl.family = Family::custom;
  impl.name = "oscillating_quadratic(delta=" + describe(delta) + ",kappa=" + describe(kappa) + ")";
  impl.psi_raw = [c, a, omega](double x) { return c * x * x + a * std::cos(omega * x); };
  impl.support = support;
  impl.kappa = kappa;
  impl.symmetric = !support.bounded_below() && !support.bounded_above();
  return build(std::move(impl));
}

Density1D Density1D::build(Impl impl) {
  const auto& psi = impl.psi_raw;
  const Support sup = impl.support;
  const double start = std::clamp(0.0, sup.lo, sup.hi);
  const double psi_start = psi(start);
  if (!std::isfinite(psi_start)) throw InvalidArgument("density: psi must be finite on the support");

  // Walk outwards by doubling until the density is negligible.
  double psi_min = psi_start;
  auto march = [&](double direction, double bound) {
    double step = 1.0;
    double x = start;
    for (int k = 0; k < 1100; ++k) {
      const double next = start + direction * step;
      if (direction > 0 ? next >= bound : next <= bound) return bound;
      const double value = psi(next);
      if (!std::isfinite(value)) throw InvalidArgument("density: psi must be finite on the support");
      psi_min = std::min(psi_min, value);
      x = next;
      if (value - psi_min >= kTruncation) return x;
      step *= 2.0;
    }
    throw InvalidArgument("density: psi does not grow enough for the measure to be finite");
  };
  double lo = march(-1.0, sup.lo);
  double hi = march(1.0, sup.hi);

  // Dense scan: locate the minimum and trim the effective range.
  std::vector<double> xs(kScanPoints + 1);
  std::vector<double> ps(kScanPoints + 1);
  for (int i = 0; i <= kScanPoints; ++i) {
    xs[i] = lo + (hi - lo) * i / kScanPoints;
    ps[i] = psi(xs[i]);
    psi_min = std::min(psi_min, ps[i]);
  }
  int first = 0;
  int last = kScanPoints;
  if (!sup.bounded_below()) {
    while (first < kScanPoints && ps[first + 1] - psi_min >= kTruncation) ++first;
  }
  if (!sup.bounded_above()) {
    while (last > 0 && ps[last - 1] - psi_min >= kTruncation) --last;
  }
  lo = xs[first];
  hi = xs[last];

  impl.table = std::make_unique<CdfTable>([psi, psi_min](double x) { return std::exp(-(psi(x) - psi_min)); }, lo,
                                          hi, kPanels);
  impl.log_partition = std::log(impl.table->total()) - psi_min;
  impl.psi_shift = -impl.log_partition;

  // Finite-difference psi'' with an allowance for cancellation in psi.
  if (!impl.curvature_checked) {
    const double h = 1e-3 * std::max(1.0, (hi - lo) / 100.0);
    const double a = lo + 2.0 * h;
    const double b = hi - 2.0 * h;
    double min_d2 = kInf;
    bool convex = true;
    for (int i = 0; i < kConvexityPoints && a < b; ++i) {
      const double x = a + (b - a) * i / (kConvexityPoints - 1);
      const double pm = psi(x - h);
      const double p0 = psi(x);
      const double pp = psi(x + h);
      const double d2 = (pp - 2.0 * p0 + pm) / (h * h);
      const double slack = 1e-8 + 16.0 * std::numeric_limits<double>::epsilon() *
                                      (std::abs(pm) + 2.0 * std::abs(p0) + std::abs(pp)) / (h * h);
      min_d2 = std::min(min_d2, d2);
      if (d2 < -slack) convex = false;
      if (d2 < -impl.kappa - slack) {
        throw InvalidArgument("density: sampled psi'' = " + describe(d2) + " at x = " + describe(x) +
                              " is below -kappa = " + describe(-impl.kappa));
      }
    }
    impl.min_psi2 = min_d2;
    impl.log_concave = convex;
  }
  impl.median = impl.table->quantile(0.5);
  return Density1D(std::make_shared<const Impl>(std::move(impl)));
}

double Density1D::psi(double x) const {
  if (!impl_->support.contains(x)) return kInf;
  return impl_->psi_raw(x) - impl_->psi_shift;
}

double Density1D::density(double x) const {
  if (!impl_->support.contains(x)) return 0.0;
  return std::exp(-psi(x));
}

double Density1D::cdf(double x) const {
  if (impl_->family == Family::gaussian) return normal::cdf(x);
  return impl_->table->cdf(x);
}

double Density1D::sf(double x) const {
  if (impl_->family == Family::gaussian) return normal::sf(x);
  return impl_->table->sf(x);
}

double Density1D::quantile(double v) const {
  require_open_unit(v, "quantile");
  if (impl_->family == Family::gaussian) return normal::quantile(v);
  return impl_->table->quantile(v);
}

double Density1D::upper_quantile(double s) const {
  require_open_unit(s, "upper_quantile");
  if (impl_->family == Family::gaussian) return -normal::quantile(s);
  return impl_->table->upper_quantile(s);
}

double Density1D::effective_lo() const {
  if (impl_->family == Family::gaussian) return -std::sqrt(2.0 * kTruncation);
  return impl_->table->lo();
}

double Density1D::effective_hi() const {
  if (impl_->family == Family::gaussian) return std::sqrt(2.0 * kTruncation);
  return impl_->table->hi();
}

// ---------------------------------------------------------------------------
// Profiles

double cdf(const Density1D& d, double x) { return d.cdf(x); }

double quantile(const Density1D& d, double v) { return d.quantile(v); }

namespace {

void require_log_concave(const Density1D& d) {
  if (!d.log_concave()) {
    throw LogConcavityRequired("density '" + d.name() + "' is not log-concave (sampled psi'' reaches " +
                               describe(d.min_psi_second_derivative()) +
                               "), so half-lines need not be isoperimetric; use the brute-force oracle");
  }
}

// -log of the larger tail at distance r from the median, with the far range
// handled by the support and family.
ExtReal conc_value(const Density1D& d, double r) {
  if (d.family() == Density1D::Family::gaussian) return -normal::log_sf(r);
  const double m = d.median();
  const double mass = std::max(d.sf(m + r), d.cdf(m - r));
  if (mass > 0.0) return -std::log(mass);
  const Support& sup = d.support();
  const bool right_done = sup.bounded_above() && m + r >= sup.hi;
  const bool left_done = sup.bounded_below() && m - r <= sup.lo;
  if (right_done && left_done) return ExtReal::infinity();
  double value = kLogMassCap;
  if (d.family() == Density1D::Family::p_exponential) value = std::max(value, std::pow(r / d.s_p(), d.p()));
  return value;
}

}  // namespace

double iso_profile_halfline(const Density1D& d, double v) {
  require_open_unit(v, "iso_profile_halfline");
  require_log_concave(d);
  const double w = std::min(v, 1.0 - v);
  if (d.family() == Density1D::Family::gaussian) return normal::pdf(normal::quantile(w));
  return std::min(d.density(d.quantile(w)), d.density(d.upper_quantile(w)));
}

ExtReal conc_profile_1d(const Density1D& d, double r) {
  if (!(r >= 0.0)) throw InvalidArgument("conc_profile_1d: r must be >= 0");
  require_log_concave(d);
  return conc_value(d, r);
}

IsoProfile iso_profile(const Density1D& d) {
  require_log_concave(d);
  return IsoProfile([d](double v) -> ExtReal { return iso_profile_halfline(d, v); }, Provenance::exact_model, true);
}

MonotoneFn conc_profile_fn(const Density1D& d) {
  require_log_concave(d);
  if (d.family() == Density1D::Family::gaussian) return closed_forms::gaussian_concentration();
  const double m = d.median();
  const Support& sup = d.support();
  const bool bounded = sup.bounded_below() && sup.bounded_above();
  const double reach = std::max(d.effective_hi() - m, m - d.effective_lo());

  ClosedForm form;
  form.name = "model-conc(" + d.name() + ")";
  form.eval = [d](double r) { return conc_value(d, r); };
  form.inverse = [d, m, bounded, reach](double s) -> ExtReal {
    if (s < std::numbers::ln2) return 0.0;
    const double t = std::exp(-s);
    if (s >= kLogMassCap || t == 0.0) {
      if (bounded) return reach;
      if (d.family() == Density1D::Family::p_exponential) return d.s_p() * std::pow(s, 1.0 / d.p());
      return ExtReal::infinity();
    }
    if (t >= 0.5) return 0.0;
    return std::max({0.0, d.upper_quantile(t) - m, m - d.quantile(t)});
  };
  std::vector<double> samples;
  const int n = 64;
  for (int i = 0; i <= n; ++i) samples.push_back(reach * i / n);
  Tail tail = Tail::constant();
  if (bounded) {
    samples.push_back(reach * 1.0001 + 1e-9);
    tail = Tail::infinite();
  } else if (d.family() == Density1D::Family::p_exponential) {
    tail = Tail::power(std::pow(d.s_p(), -d.p()), d.p());
  }
  return MonotoneFn::from_closed_form(form, samples, tail);
}

MonotoneFn integrability_profile(const Density1D& d, double x0) {
  if (!std::isfinite(x0)) throw InvalidArgument("integrability_profile: x0 must be finite");
  const Support& sup = d.support();
  const bool bounded = sup.bounded_below() && sup.bounded_above();
  const double reach = std::max(d.effective_hi() - x0, x0 - d.effective_lo());
  ClosedForm form;
  form.name = "model-integrability(" + d.name() + ")";
  form.eval = [d, x0](double r) -> ExtReal {
    if (r == 0.0) return 0.0;
    const double mass = std::min(1.0, d.cdf(x0 - r) + d.sf(x0 + r));
    if (mass > 0.0) return -std::log(mass);
    const Support& s = d.support();
    if (s.bounded_above() && s.bounded_below() && x0 + r >= s.hi && x0 - r <= s.lo) return ExtReal::infinity();
    return kLogMassCap;
  };
  std::vector<double> samples;
  const int n = 64;
  for (int i = 0; i <= n; ++i) samples.push_back(reach * i / n);
  Tail tail = Tail::constant();
  if (bounded) {
    samples.push_back(reach * 1.0001 + 1e-9);
    tail = Tail::infinite();
  }
  return MonotoneFn::from_closed_form(form, samples, tail);
}

std::pair<double, double> gaussian_ratio_check(std::span<const double> v_grid) {
  if (v_grid.empty()) throw InvalidArgument("gaussian_ratio_check: empty grid");
  double lo = kInf;
  double hi = 0.0;
  for (double v : v_grid) {
    if (!(v > 0.0 && v <= 0.5)) throw InvalidArgument("gaussian_ratio_check: v must lie in (0, 1/2]");
    const double ratio = normal::pdf(normal::quantile(v)) / (v * std::sqrt(std::log(1.0 / v)));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo, hi};
}

}  // namespace isoprofile
