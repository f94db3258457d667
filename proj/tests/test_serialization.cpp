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

#include <cmath>
#include <string>

#include "doctest.h"
#include "isoprofile/errors.hpp"
#include "isoprofile/model1d.hpp"
#include "isoprofile/profile_core.hpp"
#include "isoprofile/serialization.hpp"
#include "support/random_monotone.hpp"

using namespace isoprofile;

TEST_CASE("MonotoneFn JSON round trip") {
  testing::MonotoneGen gen(99);
  for (int i = 0; i < 50; ++i) {
    const MonotoneFn f = gen.next();
    const MonotoneFn g = monotone_fn_from_json(to_json(f));
    CHECK(g.breakpoints().size() == f.breakpoints().size());
    CHECK(g.tail().kind == f.tail().kind);
    for (double r : gen.radii(f, 40)) CHECK(g(r) == f(r));
    for (double s : gen.levels(f, 40)) CHECK(g.inverse(s) == f.inverse(s));
  }
}

TEST_CASE("MonotoneFn JSON input") {
  const MonotoneFn f = monotone_fn_from_json(R"({"breakpoints": [[0, 0], [1, 2], [2, "inf"]], "tail": {"kind": "constant"}})");
  CHECK(f(0.5) == ExtReal(1.0));
  CHECK(f(2.0).is_infinite());

  const MonotoneFn q = monotone_fn_from_json(R"({"breakpoints": [[0, 0], [1, 2]], "tail": {"kind": "quadratic_plus", "delta": 1, "kappa": 2}})");
  CHECK(q(2.0).value() == doctest::Approx(8.0));

  const MonotoneFn s = monotone_fn_from_json(R"({"breakpoints": [[0, 0], [1, 3]], "segments": ["step"]})");
  CHECK(s.inverse(2.0) == ExtReal(1.0));

  const MonotoneFn g = monotone_fn_from_json(
      R"({"breakpoints": [[0, 0.6931471805599453]], "tail": {"kind": "power", "c": 0.5, "p": 2}, "closed_form": "gaussian-conc"})");
  CHECK(g(3.0).value() == doctest::Approx(closed_forms::gaussian_concentration()(3.0).value()).epsilon(1e-15));
  CHECK(to_json(g).find("\"closed_form\": \"gaussian-conc\"") != std::string::npos);

  CHECK_THROWS_AS(monotone_fn_from_json(R"({"breakpoints": [[0, 0]], "extra": 1})"), InvalidArgument);
  CHECK_THROWS_AS(monotone_fn_from_json(R"({"breakpoints": [[0, 0]], "tail": {"kind": "linear", "c": 1}})"),
                  InvalidArgument);
  CHECK_THROWS_AS(monotone_fn_from_json(R"({"breakpoints": [[0, 1], [1, 0]]})"), InvalidArgument);
  CHECK_THROWS_AS(monotone_fn_from_json(R"({"breakpoints": [[0, "lots"]]})"), InvalidArgument);
  CHECK_THROWS_AS(monotone_fn_from_json(R"({"breakpoints": [[0, 0]], "closed_form": "nope"})"), InvalidArgument);
  CHECK_THROWS_AS(monotone_fn_from_json("not json"), InvalidArgument);
}

TEST_CASE("density JSON") {
  const DensityFile g = density_from_json(R"({"family": "gaussian"})");
  CHECK(g.density.family() == Density1D::Family::gaussian);
  CHECK_FALSE(g.grid_n);

  const DensityFile e = density_from_json(R"({"family": "p_exponential", "p": 2, "s_p": 0.5, "grid_n": 3000, "k": 3})");
  CHECK(e.density.p() == 2.0);
  CHECK(e.density.s_p() == 0.5);
  CHECK(*e.grid_n == 3000);
  CHECK(*e.k == 3);

  const DensityFile d = density_from_json(R"({"family": "p_exponential"})");
  CHECK(iso_profile_halfline(d.density, 0.3) == doctest::Approx(0.3).epsilon(1e-10));

  const DensityFile c = density_from_json(
      R"({"family": "custom", "kappa": 0, "psi_table": [[-3, 4.5], [-1, 0.5], [0, 0], [1, 0.5], [3, 4.5]]})");
  CHECK(c.density.family() == Density1D::Family::custom);
  CHECK(c.density.log_concave());

  const Density1D back = density_from_json(to_json(e.density)).density;
  CHECK(back.p() == 2.0);
  CHECK(back.s_p() == 0.5);

  CHECK_THROWS_AS(density_from_json(R"({"family": "gaussian", "p": 2})"), InvalidArgument);
  CHECK_THROWS_AS(density_from_json(R"({"family": "cauchy"})"), InvalidArgument);
  CHECK_THROWS_AS(density_from_json(R"({"family": "custom"})"), InvalidArgument);
  CHECK_THROWS_AS(density_from_json(R"({"family": "gaussian", "colour": "red"})"), InvalidArgument);
  CHECK_THROWS_AS(density_from_json(R"({"family": "gaussian", "grid_n": 2.5})"), InvalidArgument);
}
