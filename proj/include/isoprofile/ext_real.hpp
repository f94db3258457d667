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

#include <compare>
#include <iosfwd>
#include <string>

namespace isoprofile {

// A real number or +infinity. Infinity is a tag, never a large sentinel float.
//
// Arithmetic follows the extended-real conventions used for concentration
// profiles: x + inf = inf, c * inf = inf for c > 0, 0 * inf = 0, and
// x / inf = 0. Negative infinity is not representable; constructing from a
// NaN or -inf double throws InvalidArgument.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  // Implicit so finite doubles read naturally; +inf doubles become the tag.
  ExtReal(double value);  // NOLINT(google-explicit-constructor)

  static constexpr ExtReal infinity() { return ExtReal(Tag{}); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  // Throws InvalidArgument when infinite.
  double value() const;
  // Finite value, or the IEEE +inf double for plotting and output.
  double to_double() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b);

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator-(const ExtReal& a, double b);
  // Requires c >= 0.
  friend ExtReal operator*(double c, const ExtReal& a);
  friend ExtReal operator*(const ExtReal& a, double c) { return c * a; }

 private:
  struct Tag {};
  explicit constexpr ExtReal(Tag) : infinite_(true) {}

  double value_ = 0.0;
  bool infinite_ = false;
};

// numerator / denominator with x / inf = 0 and x / 0 = inf for x > 0.
// Requires numerator >= 0 and denominator >= 0; 0 / 0 is 0.
ExtReal divide(double numerator, const ExtReal& denominator);

ExtReal min(const ExtReal& a, const ExtReal& b);
ExtReal max(const ExtReal& a, const ExtReal& b);

// "inf" for infinity, otherwise 17 significant digits.
std::string to_string(const ExtReal& x);
// Accepts "inf", "+inf", "infinity" (any case) or a decimal number.
ExtReal parse_ext_real(const std::string& text);

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

}  // namespace isoprofile
