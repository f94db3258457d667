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
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isoprofile/ext_real.hpp"
#include "isoprofile/monotone_fn.hpp"
#include "isoprofile/profile_core.hpp"

// One-dimensional model measures exp(-psi(x)) dx and their exact profiles.

namespace isoprofile {

struct Support {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  static Support real_line() { return {}; }
  static Support half_line() { return {0.0, std::numeric_limits<double>::infinity()}; }
  static Support interval(double a, double b) { return {a, b}; }
  bool contains(double x) const { return x >= lo && x <= hi; }
  bool bounded_below() const { return lo > -std::numeric_limits<double>::infinity(); }
  bool bounded_above() const { return hi < std::numeric_limits<double>::infinity(); }
};

// Cumulative mass of an unnormalized density on [lo, hi] split into panels.
// Each panel is integrated by adaptive Gauss-Kronrod; masses are accumulated
// from the left for F and from the right for 1 - F, so both tails keep
// relative accuracy.
class CdfTable {
 public:
  CdfTable(std::function<double(double)> density, double lo, double hi, int panels);

  // Integral of the unnormalized density over [lo, hi].
  double total() const { return total_; }
  double lo() const { return nodes_.front(); }
  double hi() const { return nodes_.back(); }
  const std::vector<double>& nodes() const { return nodes_; }

  double cdf(double x) const;
  double sf(double x) const;
  // x with cdf(x) = v, v in (0, 1).
  double quantile(double v) const;
  // x with sf(x) = s, s in (0, 1).
  double upper_quantile(double s) const;

 private:
  std::size_t panel_of(double x) const;
  double partial(double a, double b) const;

  std::function<double(double)> density_;
  std::vector<double> nodes_;
  std::vector<double> left_;   // normalized mass of [lo, nodes_[i]]
  std::vector<double> right_;  // normalized mass of [nodes_[i], hi]
  double total_ = 0.0;
};

class Density1D {
 public:
  enum class Family { gaussian, p_exponential, custom };

  // psi(x) = x^2 / 2 + log sqrt(2 pi), kappa = 0.
  static Density1D gaussian();
  // Proportional to exp(-|x / s_p|^p); the normalizing constant is computed
  // by quadrature. Requires p > 0 and s_p > 0.
  static Density1D p_exponential(double p, double s_p = 1.0);
  // s_p making exp(-|x / s_p|^p) dx a probability measure as written.
  static double unit_mass_scale(double p);
  // Arbitrary psi (up to an additive constant) on the given support.
  // Throws InvalidArgument when the sampled psi'' falls below -kappa.
  static Density1D custom(std::string name, std::function<double(double)> psi, Support support, double kappa);
  // psi linearly interpolated through (x, psi) rows; support is the table range.
  static Density1D from_psi_table(std::vector<std::pair<double, double>> table, double kappa);
  // psi(x) = delta * kappa * x^2 + a * cos(omega x), which has psi'' >= -kappa
  // when a omega^2 <= kappa (1 + 2 delta). Its concentration grows like
  // delta * kappa * r^2, so delta < 1/2 gives semi-convex measures that miss
  // the quadratic growth condition.
  static Density1D oscillating_quadratic(double delta, double kappa, double a, double omega,
                                         Support support = Support::half_line());

  Family family() const { return impl_->family; }
  const std::string& name() const { return impl_->name; }
  double kappa() const { return impl_->kappa; }
  const Support& support() const { return impl_->support; }
  double p() const { return impl_->p; }
  double s_p() const { return impl_->s_p; }
  // log of the integral of exp(-psi_raw).
  double log_partition() const { return impl_->log_partition; }
  // True when sampled psi'' >= -1e-8 (with roundoff allowance).
  bool log_concave() const { return impl_->log_concave; }
  bool symmetric() const { return impl_->symmetric; }

  // Normalized potential; +inf outside the support.
  double psi(double x) const;
  double density(double x) const;
  double cdf(double x) const;
  double sf(double x) const;
  double quantile(double v) const;
  double upper_quantile(double s) const;
  double median() const { return impl_->median; }
  // Range outside of which the density is below exp(-720) times its peak.
  double effective_lo() const;
  double effective_hi() const;
  // Smallest sampled psi'' on the effective range.
  double min_psi_second_derivative() const { return impl_->min_psi2; }

 private:
  struct Impl {
    Family family = Family::custom;
    std::string name;
    std::function<double(double)> psi_raw;
    Support support;
    double kappa = 0.0;
    double p = 0.0;
    double s_p = 0.0;
    double psi_shift = 0.0;  // psi = psi_raw - psi_shift
    double log_partition = 0.0;
    double median = 0.0;
    double min_psi2 = 0.0;
    bool log_concave = false;
    bool symmetric = false;
    bool curvature_checked = false;
    std::unique_ptr<CdfTable> table;
  };

  static Density1D build(Impl impl);
  explicit Density1D(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

double cdf(const Density1D& d, double x);
// Throws InvalidArgument unless 0 < v < 1.
double quantile(const Density1D& d, double v);

// Boundary density of the better half-line of mass v:
// min(density(quantile(v)), density(quantile(1 - v))).
// Throws LogConcavityRequired when the density is not log-concave.
double iso_profile_halfline(const Density1D& d, double v);

// -log max(1 - F(m + r), F(m - r)), m the median. +inf once both tails are
// empty on a bounded support. Throws LogConcavityRequired.
ExtReal conc_profile_1d(const Density1D& d, double r);

// Exact isoperimetric profile as an IsoProfile (convexity setting).
IsoProfile iso_profile(const Density1D& d);
// Exact log-concentration profile as a MonotoneFn with an analytic inverse
// through the quantiles.
MonotoneFn conc_profile_fn(const Density1D& d);

// beta(r) = -log mu{|x - x0| >= r}; no convexity needed.
MonotoneFn integrability_profile(const Density1D& d, double x0);

// min and max of phi(Phi^{-1}(v)) / (v sqrt(log 1/v)) over the grid.
std::pair<double, double> gaussian_ratio_check(std::span<const double> v_grid);

}  // namespace isoprofile
