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

#include <optional>
#include <string>

#include "isoprofile/model1d.hpp"
#include "isoprofile/monotone_fn.hpp"

// JSON formats shared by the library and the command line.
//
// MonotoneFn:
//   {"breakpoints": [[r, v | "inf"], ...],
//    "tail": {"kind": "constant" | "linear" | "power" | "quadratic_plus" | "infinite", ...},
//    "closed_form": name | null,
//    "segments": ["linear" | "step", ...]}      (optional)
// Tail parameters: linear {"slope"}, power {"c", "p"}, quadratic_plus
// {"delta", "kappa"}.
//
// Density:
//   {"family": "gaussian" | "p_exponential" | "custom", "p": ..., "s_p": ...,
//    "kappa": ..., "psi_table": [[x, psi], ...]}
// plus the oracle keys "grid_n" and "k".

namespace isoprofile {

std::string to_json(const MonotoneFn& f);
// Throws InvalidArgument on malformed input or unknown keys.
MonotoneFn monotone_fn_from_json(const std::string& text);

struct DensityFile {
  Density1D density;
  std::optional<int> grid_n;
  std::optional<int> k;
};

DensityFile density_from_json(const std::string& text);
std::string to_json(const Density1D& d);

}  // namespace isoprofile
