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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "isoprofile/ext_real.hpp"
#include "isoprofile/profile_core.hpp"

namespace isoprofile {

struct BoundRow {
  double v = 0.0;
  ExtReal bound;
  double truth = 0.0;
  ExtReal ratio;  // truth / bound; +inf where bound == 0
};

struct BoundReport {
  std::vector<BoundRow> rows;
  // min over rows of truth - bound; -inf if some bound is +inf.
  double min_slack = 0.0;
  bool dominated = true;  // bound <= truth at every row

  // max |truth - bound| / truth.
  double max_rel_discrepancy() const;
  // max truth / bound over rows with bound > 0.
  double max_ratio() const;
};

// Throws InvalidArgument if truth is not finite at a grid point.
BoundReport verify_bound(const IsoProfile& bound, const IsoProfile& truth, std::span<const double> v_grid);

// Header v,bound,truth,ratio; one line per row; footer
// minslack,<value>,dominated,<true|false>.
void write_csv(std::ostream& os, const BoundReport& report);
std::string to_csv(const BoundReport& report);
std::string to_json(const BoundReport& report);

// 17 significant digits, "inf" / "-inf" for infinities.
std::string format_number(double x);

}  // namespace isoprofile
