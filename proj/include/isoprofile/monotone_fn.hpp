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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoprofile/ext_real.hpp"

namespace isoprofile {

struct Breakpoint {
  double r = 0.0;
  ExtReal value;
};

// Shape of the piece between breakpoint i and i + 1.
enum class Segment {
  linear,  // linear interpolation
  step,    // holds the left value, jumps at the right breakpoint
};

// Behaviour beyond the last breakpoint (r_N, v_N).
struct Tail {
  enum class Kind {
    constant,        // v_N
    linear,          // v_N + slope * (r - r_N)
    power,           // max(v_N, c * r^p)
    quadratic_plus,  // max(v_N, delta * kappa * r^2)
    infinite,        // +inf for r > r_N
  };

  Kind kind = Kind::constant;
  double a = 0.0;  // slope, c, or delta
  double b = 0.0;  // p or kappa

  static Tail constant() { return {Kind::constant, 0, 0}; }
  static Tail linear(double slope) { return {Kind::linear, slope, 0}; }
  static Tail power(double c, double p) { return {Kind::power, c, p}; }
  static Tail quadratic_plus(double delta, double kappa) { return {Kind::quadratic_plus, delta, kappa}; }
  static Tail infinite() { return {Kind::infinite, 0, 0}; }
};

std::string to_string(Tail::Kind kind);

// Analytic override for exact cases. When present it replaces breakpoint
// evaluation; the breakpoints and tail then only describe the function for
// validation, serialization and the asymptotic growth check.
struct ClosedForm {
  std::string name;
  std::function<ExtReal(double)> eval;
  // sup{r >= 0 : f(r) <= s}. Optional: when empty the inverse is computed
  // by bracket doubling and bisection.
  std::function<ExtReal(double)> inverse;
};

// Non-decreasing function R_+ -> R u {+inf}.
//
// Immutable after construction. The first breakpoint must sit at r = 0 and
// breakpoint radii must be strictly increasing. Values must be
// non-decreasing: decreases larger than 1e-12 (relative to max(1, |v|)) are
// rejected, smaller ones are clamped. Once a value is +inf every later value
// must be +inf.
class MonotoneFn {
 public:
  explicit MonotoneFn(std::vector<Breakpoint> breakpoints, Tail tail = Tail::constant(),
                      std::vector<Segment> segments = {},
                      std::optional<ClosedForm> closed_form = std::nullopt);

  // f(r) = r.
  static MonotoneFn identity();
  // f(r) = c.
  static MonotoneFn constant(double c);
  // f(r) = offset + slope * r.
  static MonotoneFn linear(double slope, double offset);
  // f(r) = c * r^p, inverted analytically through the power tail.
  static MonotoneFn power(double c, double p);
  // Right-continuous step function: value_i on [r_i, r_{i+1}), constant tail.
  static MonotoneFn step(std::vector<Breakpoint> breakpoints);
  // Wraps a closed form; breakpoints are sampled from it at sample_r.
  static MonotoneFn from_closed_form(ClosedForm form, std::span<const double> sample_r,
                                     Tail asymptotic_tail);

  // Requires r >= 0.
  ExtReal operator()(double r) const;
  // sup{r >= 0 : f(r) <= s}; 0 when the set is empty, +inf when f <= s everywhere.
  ExtReal inverse(double s) const;

  const std::vector<Breakpoint>& breakpoints() const { return data_->breakpoints; }
  const std::vector<Segment>& segments() const { return data_->segments; }
  const Tail& tail() const { return data_->tail; }
  const std::optional<ClosedForm>& closed_form() const { return data_->closed_form; }
  double last_radius() const { return data_->breakpoints.back().r; }

  // Breakpoint evaluation, ignoring any closed form.
  ExtReal eval_table(double r) const;

 private:
  struct Data {
    std::vector<Breakpoint> breakpoints;
    std::vector<Segment> segments;
    Tail tail;
    std::optional<ClosedForm> closed_form;
  };

  ExtReal inverse_table(double s) const;
  ExtReal inverse_by_bisection(double s) const;

  std::shared_ptr<const Data> data_;
};

inline ExtReal eval(const MonotoneFn& f, double r) { return f(r); }
inline ExtReal gen_inverse(const MonotoneFn& f, double s) { return f.inverse(s); }

}  // namespace isoprofile
