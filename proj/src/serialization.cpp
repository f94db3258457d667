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

#include "isoprofile/serialization.hpp"

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"

#include "isoprofile/errors.hpp"
#include "isoprofile/profile_core.hpp"

namespace isoprofile {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& what) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw InvalidArgument(what + ": unknown key '" + key + "'");
  }
}

json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(what + ": " + e.what());
  }
}

double number(const json& obj, const char* key, const std::string& what) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw InvalidArgument(what + ": '" + key + "' must be a number");
  }
  return obj.at(key).get<double>();
}

json ext_value(const ExtReal& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

ExtReal read_ext(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_ext_real(j.get<std::string>());
  throw InvalidArgument(what + ": values must be numbers or \"inf\"");
}

json tail_json(const Tail& t) {
  json out{{"kind", to_string(t.kind)}};
  switch (t.kind) {
    case Tail::Kind::linear: out["slope"] = t.a; break;
    case Tail::Kind::power:
      out["c"] = t.a;
      out["p"] = t.b;
      break;
    case Tail::Kind::quadratic_plus:
      out["delta"] = t.a;
      out["kappa"] = t.b;
      break;
    case Tail::Kind::constant:
    case Tail::Kind::infinite: break;
  }
  return out;
}

Tail read_tail(const json& j) {
  const std::string what = "tail";
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw InvalidArgument("tail: expected an object with a string 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    reject_unknown(j, {"kind"}, what);
    return Tail::constant();
  }
  if (kind == "linear") {
    reject_unknown(j, {"kind", "slope"}, what);
    return Tail::linear(number(j, "slope", what));
  }
  if (kind == "power") {
    reject_unknown(j, {"kind", "c", "p"}, what);
    return Tail::power(number(j, "c", what), number(j, "p", what));
  }
  if (kind == "quadratic_plus") {
    reject_unknown(j, {"kind", "delta", "kappa"}, what);
    return Tail::quadratic_plus(number(j, "delta", what), number(j, "kappa", what));
  }
  if (kind == "infinite") {
    reject_unknown(j, {"kind"}, what);
    return Tail::infinite();
  }
  throw InvalidArgument("tail: unknown kind '" + kind + "'");
}

}  // namespace

std::string to_json(const MonotoneFn& f) {
  json bps = json::array();
  for (const auto& bp : f.breakpoints()) bps.push_back(json::array({bp.r, ext_value(bp.value)}));
  json out{{"breakpoints", bps}, {"tail", tail_json(f.tail())}};
  out["closed_form"] = f.closed_form() ? json(f.closed_form()->name) : json(nullptr);
  bool any_step = false;
  json segs = json::array();
  for (Segment s : f.segments()) {
    any_step = any_step || s == Segment::step;
    segs.push_back(s == Segment::step ? "step" : "linear");
  }
  if (any_step) out["segments"] = segs;
  return out.dump(2) + "\n";
}

MonotoneFn monotone_fn_from_json(const std::string& text) {
  const std::string what = "monotone function";
  const json j = parse(text, what);
  if (!j.is_object()) throw InvalidArgument(what + ": expected an object");
  reject_unknown(j, {"breakpoints", "tail", "closed_form", "segments"}, what);
  if (!j.contains("breakpoints") || !j.at("breakpoints").is_array()) {
    throw InvalidArgument(what + ": 'breakpoints' must be an array of [r, value] pairs");
  }
  std::vector<Breakpoint> bps;
  for (const auto& row : j.at("breakpoints")) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number()) {
      throw InvalidArgument(what + ": each breakpoint must be [r, value]");
    }
    bps.push_back({row[0].get<double>(), read_ext(row[1], what)});
  }
  const Tail tail = j.contains("tail") ? read_tail(j.at("tail")) : Tail::constant();
  std::vector<Segment> segments;
  if (j.contains("segments")) {
    if (!j.at("segments").is_array()) throw InvalidArgument(what + ": 'segments' must be an array");
    for (const auto& s : j.at("segments")) {
      const std::string name = s.is_string() ? s.get<std::string>() : "";
      if (name == "linear") {
        segments.push_back(Segment::linear);
      } else if (name == "step") {
        segments.push_back(Segment::step);
      } else {
        throw InvalidArgument(what + ": segments must be \"linear\" or \"step\"");
      }
    }
  }
  std::optional<ClosedForm> form;
  if (j.contains("closed_form") && !j.at("closed_form").is_null()) {
    if (!j.at("closed_form").is_string()) throw InvalidArgument(what + ": 'closed_form' must be a name or null");
    form = closed_forms::by_name(j.at("closed_form").get<std::string>()).closed_form();
  }
  return MonotoneFn(std::move(bps), tail, std::move(segments), std::move(form));
}

DensityFile density_from_json(const std::string& text) {
  const std::string what = "density";
  const json j = parse(text, what);
  if (!j.is_object()) throw InvalidArgument(what + ": expected an object");
  reject_unknown(j, {"family", "p", "s_p", "kappa", "psi_table", "grid_n", "k"}, what);
  if (!j.contains("family") || !j.at("family").is_string()) throw InvalidArgument(what + ": 'family' is required");
  const std::string family = j.at("family").get<std::string>();
  auto optional_number = [&](const char* key, double fallback) {
    return j.contains(key) ? number(j, key, what) : fallback;
  };
  auto optional_int = [&](const char* key) -> std::optional<int> {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_number_integer()) throw InvalidArgument(what + ": '" + key + "' must be an integer");
    return j.at(key).get<int>();
  };

  std::optional<Density1D> density;
  if (family == "gaussian") {
    if (j.contains("psi_table") || j.contains("p") || j.contains("s_p")) {
      throw InvalidArgument(what + ": the gaussian family takes no parameters");
    }
    density = Density1D::gaussian();
  } else if (family == "p_exponential") {
    if (j.contains("psi_table")) throw InvalidArgument(what + ": psi_table is only valid for the custom family");
    density = Density1D::p_exponential(optional_number("p", 1.0), optional_number("s_p", 1.0));
  } else if (family == "custom") {
    if (!j.contains("psi_table") || !j.at("psi_table").is_array()) {
      throw InvalidArgument(what + ": the custom family needs a psi_table of [x, psi] rows");
    }
    std::vector<std::pair<double, double>> table;
    for (const auto& row : j.at("psi_table")) {
      if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
        throw InvalidArgument(what + ": psi_table rows must be [x, psi]");
      }
      table.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    density = Density1D::from_psi_table(std::move(table), optional_number("kappa", 0.0));
  } else {
    throw InvalidArgument(what + ": unknown family '" + family + "'");
  }
  return DensityFile{*density, optional_int("grid_n"), optional_int("k")};
}

std::string to_json(const Density1D& d) {
  json out;
  switch (d.family()) {
    case Density1D::Family::gaussian: out["family"] = "gaussian"; break;
    case Density1D::Family::p_exponential:
      out["family"] = "p_exponential";
      out["p"] = d.p();
      out["s_p"] = d.s_p();
      break;
    case Density1D::Family::custom:
      throw InvalidArgument("custom densities are only serialized through their psi_table input");
  }
  out["kappa"] = d.kappa();
  return out.dump(2) + "\n";
}

}  // namespace isoprofile
