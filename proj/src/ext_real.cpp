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

#include "isoprofile/ext_real.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "isoprofile/errors.hpp"

namespace isoprofile {

ExtReal::ExtReal(double value) {
  if (std::isnan(value)) throw InvalidArgument("ExtReal: NaN is not an extended real");
  if (std::isinf(value)) {
    if (value < 0) throw InvalidArgument("ExtReal: -inf is not representable");
    infinite_ = true;
    return;
  }
  value_ = value;
}

double ExtReal::value() const {
  if (infinite_) throw InvalidArgument("ExtReal: value() called on +inf");
  return value_;
}

double ExtReal::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

bool operator==(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
  if (a.infinite_) return std::partial_ordering::greater;
  if (b.infinite_) return std::partial_ordering::less;
  return a.value_ <=> b.value_;
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.infinite_ || b.infinite_) return ExtReal::infinity();
  return ExtReal(a.value_ + b.value_);
}

ExtReal operator-(const ExtReal& a, double b) {
  if (a.infinite_) return a;
  return ExtReal(a.value_ - b);
}

ExtReal operator*(double c, const ExtReal& a) {
  if (!(c >= 0)) throw InvalidArgument("ExtReal: multiplier must be non-negative");
  if (a.infinite_) return c == 0 ? ExtReal(0.0) : ExtReal::infinity();
  return ExtReal(c * a.value_);
}

ExtReal divide(double numerator, const ExtReal& denominator) {
  if (denominator.is_infinite()) return ExtReal(0.0);
  const double d = denominator.value();
  if (d == 0) return numerator == 0 ? ExtReal(0.0) : ExtReal::infinity();
  return ExtReal(numerator / d);
}

ExtReal min(const ExtReal& a, const ExtReal& b) { return (b < a) ? b : a; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return (a < b) ? b : a; }

std::string to_string(const ExtReal& x) {
  if (x.is_infinite()) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x.value());
  return buf;
}

ExtReal parse_ext_real(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity") return ExtReal::infinity();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse extended real '" + text + "'");
  }
  if (used != text.size()) throw InvalidArgument("trailing characters in '" + text + "'");
  return ExtReal(v);
}

std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << to_string(x); }

}  // namespace isoprofile
