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
#include <optional>
#include <string>
#include <vector>

namespace isoprofile::cli {

enum ExitCode {
  kSuccess = 0,
  kInputError = 1,
  kHypothesisViolated = 2,
  // verify: the bound exceeded the truth somewhere on the grid.
  kNotDominated = 3,
};

struct RunConfig {
  std::string command;
  std::string alpha;
  std::string beta;
  std::string gamma;
  std::string density;  // gaussian | p_exponential | <file>.json
  std::string theorem = "thm1";  // verify: thm1 | thm2 | bobkov
  std::string profile = "iso";   // model-profile: iso | conc
  std::string vgrid = "log:50:1e-6:0.5";
  std::string rgrid = "linear:101:0:20";
  std::string out = "-";
  std::string format;  // csv | json; defaults from the output extension
  std::optional<double> lambda;
  bool lambda_sup = false;
  bool strong = false;
  std::optional<double> delta0;
  std::optional<double> r0;
  std::optional<double> kappa;
  std::optional<double> p;
  std::optional<double> s_p;
  std::optional<int> k;
  std::optional<int> grid_n;
  std::optional<double> x_max;
};

// Reads a JSON object with RunConfig fields; unknown keys are rejected.
RunConfig config_from_json(const std::string& text);

// "log:count:min:max" or "linear:count:min:max" inside (0, 1/2].
std::vector<double> parse_vgrid(const std::string& spec);
// "linear:count:min:max" with min >= 0.
std::vector<double> parse_rgrid(const std::string& spec);

// Executes one command; diagnostics go to err.
int run(const RunConfig& config, std::ostream& err);

// Parses flags (and --config), then runs.
int main_entry(int argc, char** argv);

}  // namespace isoprofile::cli
