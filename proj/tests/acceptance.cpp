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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Tolerances and regression constants are pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "isoprofile/bound_report.hpp"
#include "isoprofile/errors.hpp"
#include "isoprofile/model1d.hpp"
#include "isoprofile/oracle1d.hpp"
#include "isoprofile/profile_core.hpp"
#include "isoprofile/transfer.hpp"
#include "support/random_monotone.hpp"

namespace {

using namespace isoprofile;

// Criterion 3: max truth/bound over the v-grid, per model.
constexpr double kRatioGaussian = 2.7;
constexpr double kRatioPExp[] = {1.85, 2.25, 2.7, 4.75};  // p = 1, 1.5, 2, 4
// Criterion 4: bound >= (c/p) v (log 1/v)^{1-1/p} on (0, 1/4].
constexpr double kExtraPConstant = 0.57;
// Criterion 5: bound(v) log log(2/v) / (v log 1/v) in [lo, hi].
constexpr double kLogLogLo = 0.45;
constexpr double kLogLogHi = 0.65;

const double kLog2 = std::log(2.0);

std::vector<double> log_grid(int n, double lo, double hi) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(int n, double lo, double hi) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  g.back() = hi;
  return g;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > time_limit_s) {
    out.pass = false;
    out.detail += "; runtime over " + std::to_string(time_limit_s) + " s";
  }
  if (!out.pass) ++failures;
  std::printf("%s criterion %d: %s: %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(),
              secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome inverse_properties() {
  testing::MonotoneGen gen(1);
  int violations = 0;
  int checks = 0;
  for (int i = 0; i < 200; ++i) {
    const MonotoneFn f = gen.next();
    const auto v = testing::check_inverse_properties(f, gen.radii(f, 100), gen.levels(f, 100), gen, 1e-10);
    violations += v.total;
    checks += v.checks;
  }
  return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(checks) + " checks"};
}

Outcome gaussian_exactness() {
  const Density1D g = Density1D::gaussian();
  const boost::math::normal_distribution<double> n01;
  double iso_err = 0.0;
  for (double v : log_grid(50, 1e-6, 0.5)) {
    const double expect = boost::math::pdf(n01, boost::math::quantile(n01, v));
    iso_err = std::max(iso_err, std::abs(iso_profile_halfline(g, v) / expect - 1.0));
  }
  double conc_err = 0.0;
  for (double r : linear_grid(81, 0.0, 8.0)) {
    const double expect = -std::log(boost::math::cdf(boost::math::complement(n01, r)));
    conc_err = std::max(conc_err, std::abs(conc_profile_1d(g, r).value() - expect) / std::max(1.0, expect));
  }
  return {iso_err <= 1e-8 && conc_err <= 1e-8,
          "iso rel err " + fmt("%.3g", iso_err) + ", conc err " + fmt("%.3g", conc_err) + " (tol 1e-8)"};
}

Outcome thm1_soundness() {
  const auto grid = log_grid(50, 1e-6, 0.5);
  struct Model {
    Density1D d;
    double pinned;
  };
  std::vector<Model> models = {{Density1D::gaussian(), kRatioGaussian}};
  const double ps[] = {1.0, 1.5, 2.0, 4.0};
  for (int i = 0; i < 4; ++i) models.push_back({Density1D::p_exponential(ps[i]), kRatioPExp[i]});
  bool ok = true;
  std::string detail;
  for (const auto& m : models) {
    const ConcProfileSpec spec{conc_profile_fn(m.d), 0.0, std::nullopt, std::nullopt};
    const BoundReport rep = verify_bound(thm1_bound_sup(spec, Thm1Variant::weak), iso_profile(m.d), grid);
    bool positive = true;
    for (const auto& row : rep.rows) positive = positive && row.bound.is_finite() && row.bound.value() > 0.0;
    const double ratio = rep.max_ratio();
    ok = ok && rep.dominated && positive && ratio <= m.pinned;
    detail += (detail.empty() ? "" : ", ") + m.d.name() + " max ratio " + fmt("%.4f", ratio) + "/" +
              fmt("%.2f", m.pinned) + (rep.dominated ? "" : " NOT DOMINATED") + (positive ? "" : " NONPOSITIVE");
  }
  return {ok, detail};
}

Outcome extra_p_round_trip() {
  const auto rs = linear_grid(201, 0.0, 20.0);
  const auto vs = log_grid(60, 1e-12, 0.25);
  double alpha_err = 0.0;
  double c_min = 1e300;
  for (double p : {1.0, 2.0, 4.0, 8.0}) {
    const ConcProfileSpec spec = iso_to_conc(RateFn::power(p));
    for (double r : rs) {
      const double expect = std::pow(r / p + std::pow(kLog2, 1.0 / p), p);
      alpha_err = std::max(alpha_err, std::abs(spec.alpha(r).value() / expect - 1.0));
    }
    const IsoProfile bound = thm1_bound_sup(spec, Thm1Variant::weak);
    for (double v : vs) {
      const double shape = v * std::pow(std::log(1.0 / v), 1.0 - 1.0 / p);
      c_min = std::min(c_min, p * bound(v).value() / shape);
    }
  }
  return {alpha_err <= 1e-6 && c_min >= kExtraPConstant && kExtraPConstant > 0.0,
          "alpha rel err " + fmt("%.3g", alpha_err) + " (tol 1e-6), min c " + fmt("%.6f", c_min) + " >= pinned " +
              fmt("%.4f", kExtraPConstant)};
}

Outcome loglog_gap() {
  const ConcProfileSpec spec = iso_to_conc(RateFn::identity());
  const IsoProfile bound = thm1_bound_sup(spec, Thm1Variant::weak);
  double lo = 1e300;
  double hi = 0.0;
  for (double v : log_grid(60, 1e-8, 1e-2)) {
    const double ratio = bound(v).value() * std::log(std::log(2.0 / v)) / (v * std::log(1.0 / v));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {kLogLogLo > 0.0 && lo >= kLogLogLo && hi <= kLogLogHi,
          "ratio range [" + fmt("%.6f", lo) + ", " + fmt("%.6f", hi) + "] inside pinned [" + fmt("%.4f", kLogLogLo) +
              ", " + fmt("%.4f", kLogLogHi) + "]"};
}

Outcome thm2_necessity() {
  int triggered = 0;
  int cases = 0;
  for (double kappa : {0.25, 1.0, 4.0}) {
    for (double delta : {0.05, 0.25, 0.4, 0.49, 0.4999}) {
      const MonotoneFn alpha = MonotoneFn::power(delta * kappa, 2.0);
      // Claimed at its own coefficient, and claimed as some delta0 > 1/2.
      for (double claimed : {delta, 0.75, 1.0}) {
        ++cases;
        try {
          thm2_bound(ConcProfileSpec{alpha, kappa, claimed, 0.0});
        } catch (const GrowthConditionViolated&) {
          ++triggered;
        }
      }
    }
  }
  const Thm2Constants c = thm2_constants(ConcProfileSpec{MonotoneFn::power(1.0, 2.0), 1.0, 1.0, 0.0});
  const double e = std::exp(1.0);
  const double lambda0 = 1.0 / 256.0;
  const double c0 = e / (16.0 * e + 2.0) * 0.5;
  const double R0 = std::sqrt(std::log(256.0)) + std::sqrt(std::log(4.0));
  const double err = std::max({std::abs(c.lambda0 - lambda0) / lambda0, std::abs(c.c_delta0 - c0) / c0,
                               std::abs(c.R0.value() - R0) / R0});
  return {triggered == cases && err <= 1e-12, std::to_string(triggered) + "/" + std::to_string(cases) +
                                                  " violations raised; constants rel err " + fmt("%.3g", err) +
                                                  " (tol 1e-12)"};
}

Outcome oracle_extremality() {
  const auto grid = linear_grid(9, 0.05, 0.5);
  bool ok = true;
  std::string detail;
  for (const Density1D& d : {Density1D::gaussian(), Density1D::p_exponential(1.0)}) {
    const OracleComparison cmp = oracle_vs_halfline(d, grid, 4000, 2);
    ok = ok && cmp.max_rel_discrepancy < 5e-3 && cmp.all_half_lines;
    detail += (detail.empty() ? "" : ", ") + d.name() + " max discrepancy " + fmt("%.3g", cmp.max_rel_discrepancy) +
              (cmp.all_half_lines ? " half-lines" : " NON-HALF-LINE WITNESS");
  }
  return {ok, detail + " (tol 5e-3)"};
}

Outcome profile_monotonicity() {
  std::vector<Density1D> models = {Density1D::gaussian()};
  for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) models.push_back(Density1D::p_exponential(p));
  models.push_back(Density1D::custom(
      "logistic", [](double x) { return std::abs(x) + 2.0 * std::log1p(std::exp(-std::abs(x))); },
      Support::real_line(), 0.0));
  models.push_back(Density1D::custom("shifted-gamma", [](double x) { return x - 2.0 * std::log1p(x); },
                                     Support::half_line(), 0.0));
  const auto grid = log_grid(200, 1e-6, 0.5);
  double worst_increase = 0.0;
  double worst_min = 0.0;
  for (const auto& d : models) {
    double prev = 1e300;
    double min_ratio = 1e300;
    for (double v : grid) {
      const double q = iso_profile_halfline(d, v) / v;
      worst_increase = std::max(worst_increase, (q - prev) / prev);
      prev = q;
      min_ratio = std::min(min_ratio, q);
    }
    const double target = 2.0 * iso_profile_halfline(d, 0.5);
    worst_min = std::max(worst_min, std::abs(min_ratio / target - 1.0));
  }
  return {worst_increase <= 1e-9 && worst_min <= 1e-6,
          std::to_string(models.size()) + " models, max relative increase " + fmt("%.3g", worst_increase) +
              " (tol 1e-9), min vs 2I(1/2) rel err " + fmt("%.3g", worst_min) + " (tol 1e-6)"};
}

Outcome gaussian_ratio() {
  const auto [c1, c2] = gaussian_ratio_check(log_grid(200, 1e-12, 0.5));
  const bool ok = std::isfinite(c1) && std::isfinite(c2) && c1 > 0 && c2 / c1 < 3.0;
  return {ok, "c1 " + fmt("%.6f", c1) + ", c2 " + fmt("%.6f", c2) + ", c2/c1 " + fmt("%.4f", c2 / c1) + " (< 3)"};
}

}  // namespace

int main() {
  criterion(1, "generalized-inverse properties", 5, inverse_properties);
  criterion(2, "Gaussian exactness", 5, gaussian_exactness);
  criterion(3, "kappa = 0 transfer soundness", 30, thm1_soundness);
  criterion(4, "power-rate round trip", 30, extra_p_round_trip);
  criterion(5, "log-log gap", 10, loglog_gap);
  criterion(6, "quadratic growth necessity and constants", 5, thm2_necessity);
  criterion(7, "oracle half-line extremality", 60, oracle_extremality);
  criterion(8, "profile monotonicity", 5, profile_monotonicity);
  criterion(9, "Gaussian ratio constants", 5, gaussian_ratio);
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
