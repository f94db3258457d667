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

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "isoprofile/bound_report.hpp"
#include "isoprofile/errors.hpp"
#include "isoprofile/model1d.hpp"
#include "isoprofile/oracle1d.hpp"
#include "isoprofile/profile_core.hpp"
#include "isoprofile/serialization.hpp"
#include "isoprofile/transfer.hpp"

namespace isoprofile::cli {
namespace {

using nlohmann::json;

const std::set<std::string> kCommands = {"transfer-thm1", "transfer-thm2", "iso-to-conc", "bobkov",
                                         "linear-bound",  "model-profile", "oracle",      "verify"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

double to_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double x = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return x;
  } catch (const std::exception&) {
    throw InvalidArgument(what + ": '" + text + "' is not a number");
  }
}

// "name:key=value,key=value" -> name and parameters.
struct NamedSpec {
  std::string name;
  std::map<std::string, double> params;

  double get(const std::string& key) const {
    const auto it = params.find(key);
    if (it == params.end()) throw InvalidArgument("'" + name + "' needs parameter '" + key + "'");
    return it->second;
  }
  double get_or(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
  void allow(std::initializer_list<const char*> keys) const {
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, v] : params) {
      if (!ok.count(k)) throw InvalidArgument("'" + name + "' has no parameter '" + k + "'");
    }
  }
};

NamedSpec parse_named(const std::string& spec) {
  NamedSpec out;
  const auto colon = spec.find(':');
  out.name = spec.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::stringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("expected key=value in '" + spec + "'");
    out.params[item.substr(0, eq)] = to_number(item.substr(eq + 1), spec);
  }
  return out;
}

std::vector<double> parse_grid(const std::string& spec, bool allow_log, const std::string& what) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) throw InvalidArgument(what + ": expected <spacing>:<count>:<min>:<max>, got '" + spec + "'");
  const std::string& spacing = parts[0];
  const double count_d = to_number(parts[1], what);
  const double lo = to_number(parts[2], what);
  const double hi = to_number(parts[3], what);
  if (count_d != std::floor(count_d) || count_d < 2) throw InvalidArgument(what + ": count must be an integer >= 2");
  if (!(lo < hi)) throw InvalidArgument(what + ": need min < max");
  const int count = static_cast<int>(count_d);
  std::vector<double> grid(static_cast<std::size_t>(count));
  if (spacing == "linear") {
    for (int i = 0; i < count; ++i) grid[i] = lo + (hi - lo) * i / (count - 1);
  } else if (spacing == "log" && allow_log) {
    if (!(lo > 0)) throw InvalidArgument(what + ": log spacing needs min > 0");
    for (int i = 0; i < count; ++i) grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  } else {
    throw InvalidArgument(what + ": unknown spacing '" + spacing + "'");
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

// Output --------------------------------------------------------------------

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string table_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[t.columns[i]] = std::isfinite(row[i]) ? json(row[i]) : json(format_number(row[i]));
    }
    rows.push_back(obj);
  }
  return json{{"columns", t.columns}, {"rows", rows}}.dump(2) + "\n";
}

bool wants_json(const RunConfig& cfg) {
  if (cfg.format.empty()) return ends_with(cfg.out, ".json");
  if (cfg.format == "json") return true;
  if (cfg.format == "csv") return false;
  throw InvalidArgument("format must be csv or json");
}

void write_output(const RunConfig& cfg, const std::string& content) {
  if (cfg.out == "-" || cfg.out.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(cfg.out);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw InvalidArgument("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

void emit_table(const RunConfig& cfg, const Table& t) { write_output(cfg, wants_json(cfg) ? table_json(t) : table_csv(t)); }

void emit_report(const RunConfig& cfg, const BoundReport& r) {
  write_output(cfg, wants_json(cfg) ? to_json(r) : to_csv(r));
}

// Inputs --------------------------------------------------------------------

std::optional<DensityFile> resolve_density(const RunConfig& cfg) {
  if (cfg.density.empty()) return std::nullopt;
  if (cfg.density == "gaussian") return DensityFile{Density1D::gaussian(), std::nullopt, std::nullopt};
  if (cfg.density == "p_exponential") {
    return DensityFile{Density1D::p_exponential(cfg.p.value_or(1.0), cfg.s_p.value_or(1.0)), std::nullopt,
                       std::nullopt};
  }
  if (ends_with(cfg.density, ".json")) return density_from_json(read_file(cfg.density));
  throw InvalidArgument("density must be gaussian, p_exponential or a .json file, got '" + cfg.density + "'");
}

DensityFile require_density(const RunConfig& cfg, const char* command) {
  auto d = resolve_density(cfg);
  if (!d) throw InvalidArgument(std::string(command) + " needs --density");
  return *d;
}

struct AlphaInput {
  MonotoneFn fn = MonotoneFn::identity();
  std::optional<double> kappa;
  std::optional<double> delta0;
  std::optional<Density1D> truth;
};

AlphaInput resolve_alpha(const std::string& spec, const RunConfig& cfg, const char* flag, bool integrability) {
  if (spec.empty()) throw InvalidArgument(std::string("missing ") + flag);
  AlphaInput in;
  if (ends_with(spec, ".json")) {
    in.fn = monotone_fn_from_json(read_file(spec));
    return in;
  }
  const NamedSpec s = parse_named(spec);
  if (s.name == "gaussian-conc") {
    s.allow({});
    in.fn = closed_forms::gaussian_concentration();
    in.truth = Density1D::gaussian();
  } else if (s.name == "quad") {
    s.allow({"delta0", "kappa"});
    in.delta0 = s.get("delta0");
    in.kappa = s.get("kappa");
    in.fn = MonotoneFn::power(*in.delta0 * *in.kappa, 2.0);
  } else if (s.name == "power") {
    s.allow({"c", "p"});
    in.fn = MonotoneFn::power(s.get("c"), s.get("p"));
  } else if (s.name == "extra-p") {
    s.allow({"p"});
    in.fn = closed_forms::power_shifted(s.get("p"));
  } else if (s.name == "loglog" || s.name == "log2-exp") {
    s.allow({});
    in.fn = closed_forms::log2_exp();
  } else if (s.name == "identity") {
    s.allow({});
    in.fn = MonotoneFn::identity();
  } else if (s.name == "linear") {
    s.allow({"slope", "offset"});
    in.fn = MonotoneFn::linear(s.get("slope"), s.get_or("offset", 0.0));
  } else if (s.name == "model") {
    s.allow({});
    const DensityFile d = require_density(cfg, flag);
    in.fn = integrability ? integrability_profile(d.density, d.density.median()) : conc_profile_fn(d.density);
    in.kappa = d.density.kappa();
    in.truth = d.density;
  } else {
    throw InvalidArgument(std::string("unknown ") + flag + " '" + spec + "'");
  }
  return in;
}

RateFn resolve_rate(const std::string& spec) {
  if (spec.empty()) throw InvalidArgument("missing --gamma");
  const NamedSpec s = parse_named(spec);
  if (s.name == "power") {
    s.allow({"p"});
    return RateFn::power(s.get("p"));
  }
  if (s.name == "identity" || s.name == "loglog") {
    s.allow({});
    return RateFn::identity();
  }
  if (s.name == "constant") {
    s.allow({"c"});
    return RateFn::constant(s.get_or("c", 1.0));
  }
  if (ends_with(spec, ".json")) {
    const MonotoneFn f = monotone_fn_from_json(read_file(spec));
    return RateFn{"table", [f](double y) { return f(y).to_double(); }, {}};
  }
  throw InvalidArgument("unknown --gamma '" + spec + "'");
}

// Truth for a bound: an explicit --density wins over the one implied by alpha.
std::optional<Density1D> truth_for(const RunConfig& cfg, const AlphaInput& alpha) {
  if (auto d = resolve_density(cfg)) return d->density;
  return alpha.truth;
}

void emit_bound(const RunConfig& cfg, const IsoProfile& bound, const std::optional<Density1D>& truth) {
  const std::vector<double> grid = parse_vgrid(cfg.vgrid);
  if (truth) {
    emit_report(cfg, verify_bound(bound, iso_profile(*truth), grid));
    return;
  }
  Table t{{"v", "bound"}, {}};
  for (double v : grid) t.rows.push_back({v, bound(v).to_double()});
  emit_table(cfg, t);
}

IsoProfile thm1_from(const RunConfig& cfg, const ConcProfileSpec& spec) {
  const Thm1Variant variant = cfg.strong ? Thm1Variant::strong : Thm1Variant::weak;
  if (cfg.lambda && !cfg.lambda_sup) return thm1_bound(spec, *cfg.lambda, variant);
  return thm1_bound_sup(spec, variant);
}

ConcProfileSpec spec_from(const RunConfig& cfg, const AlphaInput& a) {
  ConcProfileSpec spec{a.fn, cfg.kappa.value_or(a.kappa.value_or(0.0)), cfg.delta0 ? cfg.delta0 : a.delta0,
                       cfg.r0};
  if (spec.kappa > 0.0 && !spec.r0) spec.r0 = 0.0;
  return spec;
}

int cmd_transfer_thm1(const RunConfig& cfg) {
  const AlphaInput a = resolve_alpha(cfg.alpha, cfg, "--alpha", false);
  emit_bound(cfg, thm1_from(cfg, spec_from(cfg, a)), truth_for(cfg, a));
  return kSuccess;
}

int cmd_transfer_thm2(const RunConfig& cfg) {
  const AlphaInput a = resolve_alpha(cfg.alpha, cfg, "--alpha", false);
  emit_bound(cfg, thm2_bound(spec_from(cfg, a)), truth_for(cfg, a));
  return kSuccess;
}

int cmd_bobkov(const RunConfig& cfg) {
  const AlphaInput b = resolve_alpha(cfg.beta, cfg, "--beta", true);
  const double kappa = cfg.kappa.value_or(b.kappa.value_or(0.0));
  const GenBobkovResult r = gen_bobkov_bound(b.fn, kappa, cfg.delta0 ? cfg.delta0 : b.delta0, cfg.r0.value_or(0.0));
  emit_bound(cfg, r.bound, truth_for(cfg, b));
  return kSuccess;
}

int cmd_iso_to_conc(const RunConfig& cfg) {
  IsoToConcOptions opt;
  if (cfg.x_max) opt.x_max = *cfg.x_max;
  const ConcProfileSpec spec = iso_to_conc(resolve_rate(cfg.gamma), opt);
  Table t{{"r", "alpha"}, {}};
  for (double r : parse_rgrid(cfg.rgrid)) t.rows.push_back({r, spec.alpha(r).to_double()});
  emit_table(cfg, t);
  return kSuccess;
}

int cmd_linear_bound(const RunConfig& cfg) {
  if (!cfg.lambda) throw InvalidArgument("linear-bound needs --lambda (the concentration level lambda0)");
  if (!cfg.r0) throw InvalidArgument("linear-bound needs --r0");
  Table t{{"lambda0", "r0", "bound"}, {{*cfg.lambda, *cfg.r0, linear_iso_bound(*cfg.lambda, *cfg.r0)}}};
  emit_table(cfg, t);
  return kSuccess;
}

int cmd_model_profile(const RunConfig& cfg) {
  const Density1D d = require_density(cfg, "model-profile").density;
  if (cfg.profile == "iso") {
    Table t{{"v", "iso"}, {}};
    for (double v : parse_vgrid(cfg.vgrid)) t.rows.push_back({v, iso_profile_halfline(d, v)});
    emit_table(cfg, t);
  } else if (cfg.profile == "conc") {
    Table t{{"r", "conc"}, {}};
    for (double r : parse_rgrid(cfg.rgrid)) t.rows.push_back({r, conc_profile_1d(d, r).to_double()});
    emit_table(cfg, t);
  } else {
    throw InvalidArgument("profile must be iso or conc");
  }
  return kSuccess;
}

int cmd_oracle(const RunConfig& cfg) {
  const DensityFile df = require_density(cfg, "oracle");
  const int grid_n = cfg.grid_n.value_or(df.grid_n.value_or(4000));
  const int k = cfg.k.value_or(df.k.value_or(2));
  const std::vector<double> grid = parse_vgrid(cfg.vgrid);
  if (df.density.log_concave()) {
    emit_report(cfg, oracle_vs_halfline(df.density, grid, grid_n, k).report);
    return kSuccess;
  }
  const GridMeasure m = GridMeasure::from_density(df.density, grid_n);
  Table t{{"v", "oracle", "intervals"}, {}};
  for (double v : grid) {
    const OracleResult r = brute_force_iso(m, v, k);
    t.rows.push_back({v, r.value, static_cast<double>(r.witness.size())});
  }
  emit_table(cfg, t);
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg) {
  const Density1D d = require_density(cfg, "verify").density;
  const std::vector<double> grid = parse_vgrid(cfg.vgrid);
  std::optional<IsoProfile> bound;
  if (cfg.theorem == "bobkov") {
    const MonotoneFn beta = cfg.beta.empty() ? integrability_profile(d, d.median())
                                             : resolve_alpha(cfg.beta, cfg, "--beta", true).fn;
    bound = gen_bobkov_bound(beta, cfg.kappa.value_or(d.kappa()), cfg.delta0, cfg.r0.value_or(0.0)).bound;
  } else {
    AlphaInput a;
    if (cfg.alpha.empty()) {
      a.fn = conc_profile_fn(d);
      a.kappa = d.kappa();
    } else {
      a = resolve_alpha(cfg.alpha, cfg, "--alpha", false);
    }
    const ConcProfileSpec spec = spec_from(cfg, a);
    if (cfg.theorem == "thm1") {
      bound = thm1_from(cfg, spec);
    } else if (cfg.theorem == "thm2") {
      bound = thm2_bound(spec);
    } else {
      throw InvalidArgument("theorem must be thm1, thm2 or bobkov");
    }
  }
  const BoundReport report = verify_bound(*bound, iso_profile(d), grid);
  emit_report(cfg, report);
  return report.dominated ? kSuccess : kNotDominated;
}

}  // namespace

std::vector<double> parse_vgrid(const std::string& spec) {
  std::vector<double> grid = parse_grid(spec, true, "vgrid");
  if (!(grid.front() > 0.0) || !(grid.back() <= 0.5)) throw InvalidArgument("vgrid must lie inside (0, 1/2]");
  return grid;
}

std::vector<double> parse_rgrid(const std::string& spec) {
  std::vector<double> grid = parse_grid(spec, false, "rgrid");
  if (!(grid.front() >= 0.0)) throw InvalidArgument("rgrid must start at r >= 0");
  return grid;
}

RunConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config: expected an object");
  RunConfig c;
  auto str = [&](const std::string& key, std::string& dst) {
    if (!j.at(key).is_string()) throw InvalidArgument("config: '" + key + "' must be a string");
    dst = j.at(key).get<std::string>();
  };
  auto num = [&](const std::string& key, std::optional<double>& dst) {
    if (!j.at(key).is_number()) throw InvalidArgument("config: '" + key + "' must be a number");
    dst = j.at(key).get<double>();
  };
  auto integer = [&](const std::string& key, std::optional<int>& dst) {
    if (!j.at(key).is_number_integer()) throw InvalidArgument("config: '" + key + "' must be an integer");
    dst = j.at(key).get<int>();
  };
  auto boolean = [&](const std::string& key, bool& dst) {
    if (!j.at(key).is_boolean()) throw InvalidArgument("config: '" + key + "' must be true or false");
    dst = j.at(key).get<bool>();
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "command") str(key, c.command);
    else if (key == "alpha") str(key, c.alpha);
    else if (key == "beta") str(key, c.beta);
    else if (key == "gamma") str(key, c.gamma);
    else if (key == "density" || key == "family") str(key, c.density);
    else if (key == "theorem") str(key, c.theorem);
    else if (key == "profile") str(key, c.profile);
    else if (key == "vgrid") str(key, c.vgrid);
    else if (key == "rgrid") str(key, c.rgrid);
    else if (key == "out") str(key, c.out);
    else if (key == "format") str(key, c.format);
    else if (key == "lambda") num(key, c.lambda);
    else if (key == "lambda_sup") boolean(key, c.lambda_sup);
    else if (key == "strong") boolean(key, c.strong);
    else if (key == "delta0") num(key, c.delta0);
    else if (key == "r0") num(key, c.r0);
    else if (key == "kappa") num(key, c.kappa);
    else if (key == "p") num(key, c.p);
    else if (key == "s_p") num(key, c.s_p);
    else if (key == "k") integer(key, c.k);
    else if (key == "grid_n") integer(key, c.grid_n);
    else if (key == "x_max") num(key, c.x_max);
    else throw InvalidArgument("config: unknown key '" + key + "'");
  }
  return c;
}

int run(const RunConfig& cfg, std::ostream& err) {
  try {
    if (!kCommands.count(cfg.command)) throw InvalidArgument("unknown command '" + cfg.command + "'");
    if (cfg.command == "transfer-thm1") return cmd_transfer_thm1(cfg);
    if (cfg.command == "transfer-thm2") return cmd_transfer_thm2(cfg);
    if (cfg.command == "bobkov") return cmd_bobkov(cfg);
    if (cfg.command == "iso-to-conc") return cmd_iso_to_conc(cfg);
    if (cfg.command == "linear-bound") return cmd_linear_bound(cfg);
    if (cfg.command == "model-profile") return cmd_model_profile(cfg);
    if (cfg.command == "oracle") return cmd_oracle(cfg);
    return cmd_verify(cfg);
  } catch (const HypothesisViolated& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kHypothesisViolated;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Isoperimetric and concentration profile toolkit"};
  std::string command;
  std::string config_path;
  RunConfig flags;
  double lambda = 0, delta0 = 0, r0 = 0, kappa = 0, p = 0, s_p = 0, x_max = 0;
  int k = 0, grid_n = 0;

  app.add_option("command", command, "one of: " + [] {
    std::string s;
    for (const auto& c : kCommands) s += (s.empty() ? "" : ", ") + c;
    return s;
  }());
  app.add_option("--config", config_path, "JSON file with run settings; flags override it");
  auto* o_alpha = app.add_option("--alpha", flags.alpha, "concentration profile alpha");
  auto* o_beta = app.add_option("--beta", flags.beta, "integrability profile beta (bobkov)");
  auto* o_gamma = app.add_option("--gamma", flags.gamma, "rate gamma (iso-to-conc)");
  auto* o_density = app.add_option("--density,--family", flags.density, "gaussian, p_exponential or a .json file");
  auto* o_theorem = app.add_option("--theorem", flags.theorem, "verify: thm1, thm2 or bobkov");
  auto* o_profile = app.add_option("--profile", flags.profile, "model-profile: iso or conc");
  auto* o_vgrid = app.add_option("--vgrid", flags.vgrid, "log|linear:count:min:max inside (0, 1/2]");
  auto* o_rgrid = app.add_option("--rgrid", flags.rgrid, "linear:count:min:max");
  auto* o_out = app.add_option("--out", flags.out, "output path, - for stdout");
  auto* o_format = app.add_option("--format", flags.format, "csv or json");
  auto* o_lambda = app.add_option("--lambda", lambda, "lambda in (0, 1/2)");
  auto* o_sup = app.add_flag("--lambda-sup", flags.lambda_sup, "take the sup over the lambda grid");
  auto* o_strong = app.add_flag("--strong", flags.strong, "strong variant (assumes a concave profile)");
  auto* o_delta0 = app.add_option("--delta0", delta0, "growth constant delta0 > 1/2");
  auto* o_r0 = app.add_option("--r0", r0, "radius r0 >= 0");
  auto* o_kappa = app.add_option("--kappa", kappa, "semi-convexity kappa >= 0");
  auto* o_p = app.add_option("--p", p, "p for p_exponential");
  auto* o_s_p = app.add_option("--s_p", s_p, "scale s_p for p_exponential");
  auto* o_k = app.add_option("--k", k, "oracle: maximal number of intervals");
  auto* o_grid_n = app.add_option("--grid_n", grid_n, "oracle: grid size");
  auto* o_x_max = app.add_option("--x_max", x_max, "iso-to-conc: largest tabulated value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = config_from_json(read_file(config_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (!command.empty()) cfg.command = command;
  auto take = [](CLI::Option* opt, auto& dst, const auto& src) {
    if (opt->count() > 0) dst = src;
  };
  take(o_alpha, cfg.alpha, flags.alpha);
  take(o_beta, cfg.beta, flags.beta);
  take(o_gamma, cfg.gamma, flags.gamma);
  take(o_density, cfg.density, flags.density);
  take(o_theorem, cfg.theorem, flags.theorem);
  take(o_profile, cfg.profile, flags.profile);
  take(o_vgrid, cfg.vgrid, flags.vgrid);
  take(o_rgrid, cfg.rgrid, flags.rgrid);
  take(o_out, cfg.out, flags.out);
  take(o_format, cfg.format, flags.format);
  take(o_sup, cfg.lambda_sup, flags.lambda_sup);
  take(o_strong, cfg.strong, flags.strong);
  take(o_lambda, cfg.lambda, std::optional<double>(lambda));
  take(o_delta0, cfg.delta0, std::optional<double>(delta0));
  take(o_r0, cfg.r0, std::optional<double>(r0));
  take(o_kappa, cfg.kappa, std::optional<double>(kappa));
  take(o_p, cfg.p, std::optional<double>(p));
  take(o_s_p, cfg.s_p, std::optional<double>(s_p));
  take(o_k, cfg.k, std::optional<int>(k));
  take(o_grid_n, cfg.grid_n, std::optional<int>(grid_n));
  take(o_x_max, cfg.x_max, std::optional<double>(x_max));
  return run(cfg, std::cerr);
}

}  // namespace isoprofile::cli
