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

#include "isoprofile/bound_report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "isoprofile/errors.hpp"

namespace isoprofile {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double BoundReport::max_rel_discrepancy() const {
  double worst = 0.0;
  for (const auto& row : rows) {
    const double gap = std::abs(row.truth - row.bound.to_double());
    worst = std::max(worst, row.truth > 0 ? gap / row.truth : gap);
  }
  return worst;
}

double BoundReport::max_ratio() const {
  double worst = 0.0;
  for (const auto& row : rows) {
    if (row.ratio.is_finite()) worst = std::max(worst, row.ratio.value());
  }
  return worst;
}

BoundReport verify_bound(const IsoProfile& bound, const IsoProfile& truth, std::span<const double> v_grid) {
  BoundReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  report.rows.reserve(v_grid.size());
  for (double v : v_grid) {
    const ExtReal t = truth(v);
    if (t.is_infinite()) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "verify_bound: truth is not finite at v = " << v;
      throw InvalidArgument(msg.str());
    }
    BoundRow row{v, bound(v), t.value(), 0.0};
    row.ratio = divide(row.truth, row.bound);
    const double slack = row.truth - row.bound.to_double();
    report.min_slack = std::min(report.min_slack, slack);
    if (row.bound > ExtReal(row.truth)) report.dominated = false;
    report.rows.push_back(row);
  }
  return report;
}

void write_csv(std::ostream& os, const BoundReport& report) {
  os << "v,bound,truth,ratio\n";
  for (const auto& row : report.rows) {
    os << format_number(row.v) << ',' << format_number(row.bound.to_double()) << ','
       << format_number(row.truth) << ',' << format_number(row.ratio.to_double()) << '\n';
  }
  os << "minslack," << format_number(report.min_slack) << ",dominated," << (report.dominated ? "true" : "false")
     << '\n';
}

std::string to_csv(const BoundReport& report) {
  std::ostringstream os;
  write_csv(os, report);
  return os.str();
}

namespace {

nlohmann::json number_or_literal(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

}  // namespace

std::string to_json(const BoundReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"v", row.v},
                    {"bound", number_or_literal(row.bound.to_double())},
                    {"truth", row.truth},
                    {"ratio", number_or_literal(row.ratio.to_double())}});
  }
  nlohmann::json out{{"rows", rows}, {"minslack", number_or_literal(report.min_slack)}, {"dominated", report.dominated}};
  return out.dump(2) + "\n";
}

}  // namespace isoprofile
