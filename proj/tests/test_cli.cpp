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

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "isoprofile/bound_report.hpp"
#include "isoprofile/errors.hpp"
#include "isoprofile/model1d.hpp"
#include "isoprofile/transfer.hpp"
#include "json.hpp"

using namespace isoprofile;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("isoprofile-cli-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "isoprofile");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli::main_entry(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("grid parsing") {
  const auto v = cli::parse_vgrid("log:50:1e-6:0.5");
  CHECK(v.size() == 50);
  CHECK(v.front() == 1e-6);
  CHECK(v.back() == 0.5);
  const auto l = cli::parse_vgrid("linear:5:0.1:0.5");
  CHECK(l[2] == doctest::Approx(0.3));
  CHECK_THROWS_AS(cli::parse_vgrid("log:50:0:0.5"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_vgrid("linear:5:0.1:0.6"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_vgrid("linear:1:0.1:0.5"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_vgrid("cubic:5:0.1:0.5"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_vgrid("log:5:0.5:0.1"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_vgrid("log:5:0.1"), InvalidArgument);
  CHECK(cli::parse_rgrid("linear:3:0:20")[1] == 10.0);
  CHECK_THROWS_AS(cli::parse_rgrid("linear:3:-1:20"), InvalidArgument);
}

TEST_CASE("transfer-thm1 against the Gaussian truth") {
  TempDir dir;
  const std::string out = dir.file("report.csv");
  CHECK(run_args({"transfer-thm1", "--alpha", "gaussian-conc", "--lambda-sup", "--vgrid", "log:50:1e-6:0.5",
                  "--out", out}) == cli::kSuccess);
  const auto rows = csv_rows(slurp(out));
  REQUIRE(rows.size() == 52);
  CHECK(rows.front() == std::vector<std::string>{"v", "bound", "truth", "ratio"});
  CHECK(rows.back() == std::vector<std::string>{"minslack", rows.back()[1], "dominated", "true"});
  // Values re-evaluate identically through the library.
  const IsoProfile bound = thm1_bound_sup(ConcProfileSpec{closed_forms::gaussian_concentration(), 0.0, {}, {}});
  const double v = std::stod(rows[10][0]);
  CHECK(rows[10][1] == format_number(bound(v).value()));
  CHECK(rows[10][2] == format_number(iso_profile_halfline(Density1D::gaussian(), v)));
  // Byte-reproducible.
  const std::string again = dir.file("again.csv");
  run_args({"transfer-thm1", "--alpha", "gaussian-conc", "--lambda-sup", "--vgrid", "log:50:1e-6:0.5", "--out", again});
  CHECK(slurp(out) == slurp(again));
  CHECK_FALSE(fs::exists(out + ".tmp." + std::to_string(::getpid())));
}

TEST_CASE("transfer-thm2 growth violation exits 2") {
  CHECK(run_args({"transfer-thm2", "--alpha", "quad:delta0=0.4,kappa=1", "--vgrid", "log:5:1e-3:0.5"}) ==
        cli::kHypothesisViolated);
  TempDir dir;
  const std::string out = dir.file("thm2.csv");
  CHECK(run_args({"transfer-thm2", "--alpha", "quad:delta0=1,kappa=1", "--vgrid", "log:5:1e-3:0.5", "--out",
                  out}) == cli::kSuccess);
  const auto rows = csv_rows(slurp(out));
  CHECK(rows.front() == std::vector<std::string>{"v", "bound"});
  CHECK(rows.size() == 6);
}

TEST_CASE("model-profile tables") {
  TempDir dir;
  const std::string out = dir.file("iso.csv");
  CHECK(run_args({"model-profile", "--family", "p_exponential", "--p", "1", "--vgrid", "linear:5:0.1:0.5", "--out",
                  out}) == cli::kSuccess);
  const auto rows = csv_rows(slurp(out));
  REQUIRE(rows.size() == 6);
  CHECK(rows.front() == std::vector<std::string>{"v", "iso"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][1]) == doctest::Approx(std::stod(rows[i][0])).epsilon(1e-8));
  }
  const std::string conc = dir.file("conc.json");
  CHECK(run_args({"model-profile", "--density", "gaussian", "--profile", "conc", "--rgrid", "linear:3:0:2", "--out",
                  conc}) == cli::kSuccess);
  const auto j = nlohmann::json::parse(slurp(conc));
  CHECK(j["columns"] == nlohmann::json({"r", "conc"}));
  CHECK(j["rows"][0]["conc"].get<double>() == doctest::Approx(std::log(2.0)));
}

TEST_CASE("other commands") {
  TempDir dir;
  SUBCASE("iso-to-conc") {
    const std::string out = dir.file("a.csv");
    CHECK(run_args({"iso-to-conc", "--gamma", "constant:c=1", "--rgrid", "linear:3:0:2", "--out", out}) ==
          cli::kSuccess);
    const auto rows = csv_rows(slurp(out));
    CHECK(std::stod(rows[3][1]) == doctest::Approx(2.0 + std::log(2.0)).epsilon(1e-8));
  }
  SUBCASE("linear-bound") {
    const std::string out = dir.file("l.csv");
    CHECK(run_args({"linear-bound", "--lambda", "0.25", "--r0", "1", "--out", out}) == cli::kSuccess);
    const auto rows = csv_rows(slurp(out));
    CHECK(rows[1][2] == format_number(linear_iso_bound(0.25, 1.0)));
    CHECK(run_args({"linear-bound", "--lambda", "0.25"}) == cli::kInputError);
  }
  SUBCASE("bobkov") {
    const std::string out = dir.file("b.csv");
    CHECK(run_args({"bobkov", "--beta", "power:c=1,p=2", "--vgrid", "log:5:1e-4:0.5", "--out", out}) ==
          cli::kSuccess);
    CHECK(run_args({"bobkov", "--beta", "linear:slope=0,offset=0.1", "--vgrid", "log:5:1e-4:0.5"}) ==
          cli::kHypothesisViolated);
  }
  SUBCASE("oracle") {
    const std::string density = dir.file("d.json");
    spit(density, R"({"family": "gaussian", "grid_n": 1000, "k": 2})");
    const std::string out = dir.file("o.csv");
    CHECK(run_args({"oracle", "--density", density, "--vgrid", "linear:3:0.1:0.5", "--out", out}) ==
          cli::kSuccess);
    const auto rows = csv_rows(slurp(out));
    CHECK(rows.front() == std::vector<std::string>{"v", "bound", "truth", "ratio"});
    const std::string wiggle = dir.file("w.json");
    spit(wiggle, R"({"family": "custom", "kappa": 5, "psi_table": [[-4, 8], [-1, 0.5], [0, 0.8], [1, 0.5], [4, 8]]})");
    const std::string out2 = dir.file("o2.csv");
    CHECK(run_args({"oracle", "--density", wiggle, "--grid_n", "800", "--vgrid", "linear:3:0.1:0.5", "--out",
                    out2}) == cli::kSuccess);
    CHECK(csv_rows(slurp(out2)).front() == std::vector<std::string>{"v", "oracle", "intervals"});
  }
  SUBCASE("verify") {
    CHECK(run_args({"verify", "--density", "p_exponential", "--p", "2", "--vgrid", "log:5:1e-6:0.5", "--out",
                    dir.file("v.csv")}) == cli::kSuccess);
    // A bound that is too strong is reported, not hidden.
    CHECK(run_args({"verify", "--density", "gaussian", "--alpha", "power:c=100,p=2", "--vgrid", "log:5:1e-6:0.5",
                    "--out", dir.file("v2.csv")}) == cli::kNotDominated);
    CHECK(run_args({"verify", "--density", "gaussian", "--theorem", "bobkov", "--vgrid", "log:5:1e-6:0.5", "--out",
                    dir.file("v3.csv")}) == cli::kSuccess);
    CHECK(run_args({"verify", "--density", "gaussian", "--theorem", "thm9"}) == cli::kInputError);
  }
}

TEST_CASE("input errors") {
  CHECK(run_args({"frobnicate"}) == cli::kInputError);
  CHECK(run_args({"transfer-thm1"}) == cli::kInputError);
  CHECK(run_args({"transfer-thm1", "--alpha", "mystery"}) == cli::kInputError);
  CHECK(run_args({"transfer-thm1", "--alpha", "power:c=1", "--vgrid", "log:5:1e-3:0.5"}) == cli::kInputError);
  CHECK(run_args({"transfer-thm1", "--alpha", "gaussian-conc", "--vgrid", "log:5:1e-3:0.9"}) == cli::kInputError);
  CHECK(run_args({"transfer-thm1", "--alpha", "gaussian-conc", "--format", "xml"}) == cli::kInputError);
  CHECK(run_args({"transfer-thm1", "--bogus-flag"}) == cli::kInputError);
  CHECK(run_args({"model-profile", "--density", "gaussian", "--profile", "median"}) == cli::kInputError);
  CHECK(run_args({"model-profile", "--density", "/nonexistent/d.json"}) == cli::kInputError);
  CHECK(run_args({"--help"}) == cli::kSuccess);
}

TEST_CASE("config files") {
  TempDir dir;
  const std::string out = dir.file("c.csv");
  const std::string cfg = dir.file("run.json");
  spit(cfg, R"({"command": "model-profile", "density": "p_exponential", "p": 1, "vgrid": "linear:3:0.1:0.5", "out": ")" +
                out + R"("})");
  CHECK(run_args({"--config", cfg}) == cli::kSuccess);
  CHECK(csv_rows(slurp(out)).size() == 4);
  // Flags override the file.
  CHECK(run_args({"--config", cfg, "--vgrid", "linear:4:0.1:0.5"}) == cli::kSuccess);
  CHECK(csv_rows(slurp(out)).size() == 5);

  spit(cfg, R"({"command": "model-profile", "colour": "red"})");
  CHECK(run_args({"--config", cfg}) == cli::kInputError);
  spit(cfg, R"({"command": "model-profile", "p": "one"})");
  CHECK(run_args({"--config", cfg}) == cli::kInputError);

  const cli::RunConfig c = cli::config_from_json(R"({"command": "oracle", "k": 3, "lambda_sup": true})");
  CHECK(c.command == "oracle");
  CHECK(*c.k == 3);
  CHECK(c.lambda_sup);
  CHECK_THROWS_AS(cli::config_from_json("[1, 2]"), InvalidArgument);
}
