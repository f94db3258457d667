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

#include "isoprofile/monotone_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "isoprofile/errors.hpp"

namespace isoprofile {
namespace {

constexpr double kMonotoneSlack = 1e-12;
constexpr double kClosedFormAgreement = 1e-12;
constexpr double kBisectionTol = 1e-12;

double slack_for(double v) { return kMonotoneSlack * std::max(1.0, std::abs(v)); }

void validate_tail(const Tail& tail) {
  auto bad = [](const std::string& what) { throw InvalidArgument("MonotoneFn tail: " + what); };
  switch (tail.kind) {
    case Tail::Kind::linear:
      if (!(tail.a >= 0) || !std::isfinite(tail.a)) bad("slope must be finite and >= 0");
      break;
    case Tail::Kind::power:
      if (!(tail.a >= 0) || !std::isfinite(tail.a)) bad("power coefficient must be >= 0");
      if (!(tail.b > 0) || !std::isfinite(tail.b)) bad("power exponent must be > 0");
      break;
    case Tail::Kind::quadratic_plus:
      if (!(tail.a >= 0) || !(tail.b >= 0) || !std::isfinite(tail.a) || !std::isfinite(tail.b))
        bad("delta and kappa must be finite and >= 0");
      break;
    case Tail::Kind::constant:
    case Tail::Kind::infinite:
      break;
  }
}

bool agrees(const ExtReal& a, const ExtReal& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return std::abs(a.value() - b.value()) <= kClosedFormAgreement * std::max(1.0, std::abs(a.value()));
}

}  // namespace

std::string to_string(Tail::Kind kind) {
  switch (kind) {
    case Tail::Kind::constant: return "constant";
    case Tail::Kind::linear: return "linear";
    case Tail::Kind::power: return "power";
    case Tail::Kind::quadratic_plus: return "quadratic_plus";
    case Tail::Kind::infinite: return "infinite";
  }
  return "unknown";
}

MonotoneFn::MonotoneFn(std::vector<Breakpoint> breakpoints, Tail tail, std::vector<Segment> segments,
                       std::optional<ClosedForm> closed_form) {
  if (breakpoints.empty()) throw InvalidArgument("MonotoneFn: at least one breakpoint is required");
  if (breakpoints.front().r != 0.0) throw InvalidArgument("MonotoneFn: first breakpoint must be at r = 0");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i].r)) throw InvalidArgument("MonotoneFn: breakpoint radius must be finite");
    if (i == 0) continue;
    if (!(breakpoints[i].r > breakpoints[i - 1].r))
      throw InvalidArgument("MonotoneFn: breakpoint radii must be strictly increasing");
    const ExtReal& prev = breakpoints[i - 1].value;
    ExtReal& cur = breakpoints[i].value;
    if (prev.is_infinite()) {
      if (cur.is_finite()) {
        std::ostringstream msg;
        msg << "MonotoneFn: value drops from +inf at r = " << breakpoints[i].r;
        throw InvalidArgument(msg.str());
      }
      continue;
    }
    if (cur.is_finite() && cur.value() < prev.value()) {
      if (prev.value() - cur.value() > slack_for(prev.value())) {
        std::ostringstream msg;
        msg << "MonotoneFn: values decrease at r = " << breakpoints[i].r << " (" << prev << " -> " << cur
            << ")";
        throw InvalidArgument(msg.str());
      }
      cur = prev;
    }
  }
  if (segments.empty()) {
    segments.assign(breakpoints.size() - 1, Segment::linear);
  } else if (segments.size() != breakpoints.size() - 1) {
    throw InvalidArgument("MonotoneFn: need exactly one segment kind per gap between breakpoints");
  }
  validate_tail(tail);
  if (closed_form) {
    if (!closed_form->eval) throw InvalidArgument("MonotoneFn: closed form needs an evaluator");
    for (const auto& bp : breakpoints) {
      if (!agrees(closed_form->eval(bp.r), bp.value)) {
        std::ostringstream msg;
        msg << "MonotoneFn: closed form '" << closed_form->name << "' disagrees with breakpoint at r = "
            << bp.r;
        throw InvalidArgument(msg.str());
      }
    }
  }
  data_ = std::make_shared<const Data>(
      Data{std::move(breakpoints), std::move(segments), tail, std::move(closed_form)});
}

MonotoneFn MonotoneFn::identity() { return linear(1.0, 0.0); }

MonotoneFn MonotoneFn::constant(double c) { return MonotoneFn({{0.0, c}}, Tail::constant()); }

MonotoneFn MonotoneFn::linear(double slope, double offset) {
  return MonotoneFn({{0.0, offset}}, Tail::linear(slope));
}

MonotoneFn MonotoneFn::power(double c, double p) { return MonotoneFn({{0.0, 0.0}}, Tail::power(c, p)); }

MonotoneFn MonotoneFn::step(std::vector<Breakpoint> breakpoints) {
  std::vector<Segment> segments(breakpoints.empty() ? 0 : breakpoints.size() - 1, Segment::step);
  return MonotoneFn(std::move(breakpoints), Tail::constant(), std::move(segments));
}

MonotoneFn MonotoneFn::from_closed_form(ClosedForm form, std::span<const double> sample_r,
                                        Tail asymptotic_tail) {
  std::vector<Breakpoint> bps;
  bps.reserve(sample_r.size() + 1);
  if (sample_r.empty() || sample_r.front() != 0.0) bps.push_back({0.0, form.eval(0.0)});
  for (double r : sample_r) bps.push_back({r, form.eval(r)});
  return MonotoneFn(std::move(bps), asymptotic_tail, {}, std::move(form));
}

ExtReal MonotoneFn::operator()(double r) const {
  if (!(r >= 0)) throw InvalidArgument("MonotoneFn: evaluation requires r >= 0");
  if (data_->closed_form) return data_->closed_form->eval(r);
  return eval_table(r);
}

ExtReal MonotoneFn::eval_table(double r) const {
  const auto& bps = data_->breakpoints;
  const Breakpoint& last = bps.back();
  if (r >= last.r) {
    if (last.value.is_infinite()) return last.value;
    const double vn = last.value.value();
    const Tail& t = data_->tail;
    switch (t.kind) {
      case Tail::Kind::constant: return vn;
      case Tail::Kind::linear: return vn + t.a * (r - last.r);
      case Tail::Kind::power: return std::max(vn, t.a * std::pow(r, t.b));
      case Tail::Kind::quadratic_plus: return std::max(vn, t.a * t.b * r * r);
      case Tail::Kind::infinite: return r > last.r ? ExtReal::infinity() : ExtReal(vn);
    }
  }
  // First breakpoint strictly greater than r; r < last.r so it exists and i >= 1.
  const auto it = std::upper_bound(bps.begin(), bps.end(), r,
                                   [](double x, const Breakpoint& bp) { return x < bp.r; });
  const std::size_t i = static_cast<std::size_t>(it - bps.begin()) - 1;
  const Breakpoint& lo = bps[i];
  const Breakpoint& hi = bps[i + 1];
  if (lo.value.is_infinite()) return lo.value;
  if (hi.value.is_infinite() || data_->segments[i] == Segment::step) return lo.value;
  const double t = (r - lo.r) / (hi.r - lo.r);
  return lo.value.value() + t * (hi.value.value() - lo.value.value());
}

ExtReal MonotoneFn::inverse(double s) const {
  if (std::isnan(s)) throw InvalidArgument("MonotoneFn: cannot invert at NaN");
  if (data_->closed_form) {
    if (data_->closed_form->inverse) return data_->closed_form->inverse(s);
    return inverse_by_bisection(s);
  }
  return inverse_table(s);
}

ExtReal MonotoneFn::inverse_table(double s) const {
  const auto& bps = data_->breakpoints;
  if (bps.front().value > s) return 0.0;
  // First breakpoint whose value exceeds s.
  const auto it = std::upper_bound(bps.begin(), bps.end(), s,
                                   [](double x, const Breakpoint& bp) { return ExtReal(x) < bp.value; });
  if (it != bps.end()) {
    const std::size_t j = static_cast<std::size_t>(it - bps.begin());
    const Breakpoint& lo = bps[j - 1];
    const Breakpoint& hi = bps[j];
    if (hi.value.is_infinite() || data_->segments[j - 1] == Segment::step) return hi.r;
    const double vlo = lo.value.value();
    const double vhi = hi.value.value();
    const double t = (s - vlo) / (vhi - vlo);
    return std::clamp(lo.r + t * (hi.r - lo.r), lo.r, hi.r);
  }
  // f(r_N) <= s: the answer lies in the tail.
  const Breakpoint& last = bps.back();
  const double vn = last.value.value();
  const Tail& t = data_->tail;
  switch (t.kind) {
    case Tail::Kind::constant: return ExtReal::infinity();
    case Tail::Kind::linear:
      if (t.a == 0) return ExtReal::infinity();
      return last.r + (s - vn) / t.a;
    case Tail::Kind::power:
      if (t.a == 0) return ExtReal::infinity();
      return std::max(last.r, std::pow(s / t.a, 1.0 / t.b));
    case Tail::Kind::quadratic_plus: {
      const double coeff = t.a * t.b;
      if (coeff == 0) return ExtReal::infinity();
      return std::max(last.r, std::sqrt(s / coeff));
    }
    case Tail::Kind::infinite: return last.r;
  }
  return ExtReal::infinity();
}

ExtReal MonotoneFn::inverse_by_bisection(double s) const {
  const auto& f = data_->closed_form->eval;
  if (f(0.0) > s) return 0.0;
  double lo = 0.0;
  double hi = std::max(1.0, data_->breakpoints.back().r);
  while (f(hi) <= s) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) return ExtReal::infinity();
  }
  // Invariant: f(lo) <= s < f(hi).
  while (hi - lo > kBisectionTol * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) <= s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace isoprofile
