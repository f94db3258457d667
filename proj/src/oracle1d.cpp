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

#include "isoprofile/oracle1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "isoprofile/errors.hpp"

namespace isoprofile {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMassTolerance = 1e-3;
constexpr double kTailMass = 1e-14;

}  // namespace

GridMeasure::GridMeasure(std::vector<double> nodes, std::vector<double> density)
    : nodes_(std::move(nodes)), density_(std::move(density)) {
  if (nodes_.size() < 2 || nodes_.size() != density_.size()) {
    throw InvalidArgument("GridMeasure: need at least two nodes and one density value per node");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i])) throw InvalidArgument("GridMeasure: nodes must be finite");
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) throw InvalidArgument("GridMeasure: nodes must increase");
    if (!(density_[i] > 0.0) || !std::isfinite(density_[i])) {
      throw InvalidArgument("GridMeasure: density must be positive and finite on the grid");
    }
  }
  cumulative_.assign(nodes_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    cumulative_[i + 1] = cumulative_[i] + 0.5 * (density_[i] + density_[i + 1]) * (nodes_[i + 1] - nodes_[i]);
  }
  const double total = cumulative_.back();
  for (auto& x : density_) x /= total;
  for (auto& c : cumulative_) c /= total;
  cumulative_.back() = 1.0;
}

GridMeasure GridMeasure::from_density(const Density1D& d, int n, std::optional<std::pair<double, double>> range) {
  if (n < 2) throw InvalidArgument("GridMeasure: need at least two nodes");
  double lo, hi;
  if (range) {
    std::tie(lo, hi) = *range;
  } else {
    lo = d.support().bounded_below() ? d.support().lo : d.quantile(kTailMass);
    hi = d.support().bounded_above() ? d.support().hi : d.upper_quantile(kTailMass);
  }
  if (!(lo < hi)) throw InvalidArgument("GridMeasure: empty range");
  if (!range && !d.support().bounded_below() && !d.support().bounded_above()) {
    // Put a node on the median, where model densities have their kink.
    const double h = (hi - lo) / (n - 1);
    const double shift = d.median() - (lo + h * std::round((d.median() - lo) / h));
    lo += shift;
    hi += shift;
  }
  std::vector<double> x(static_cast<std::size_t>(n));
  std::vector<double> rho(x.size());
  for (int i = 0; i < n; ++i) {
    x[i] = lo + (hi - lo) * i / (n - 1);
    rho[i] = d.density(x[i]);
  }
  x.back() = hi;
  return GridMeasure(std::move(x), std::move(rho));
}

double GridMeasure::density_at(double x) const {
  if (x <= nodes_.front()) return density_.front();
  if (x >= nodes_.back()) return density_.back();
  const auto i = static_cast<std::size_t>(std::upper_bound(nodes_.begin(), nodes_.end(), x) - nodes_.begin()) - 1;
  const double t = (x - nodes_[i]) / (nodes_[i + 1] - nodes_[i]);
  return density_[i] + t * (density_[i + 1] - density_[i]);
}

double GridMeasure::cdf(double x) const {
  if (x <= nodes_.front()) return 0.0;
  if (x >= nodes_.back()) return 1.0;
  const auto i = static_cast<std::size_t>(std::upper_bound(nodes_.begin(), nodes_.end(), x) - nodes_.begin()) - 1;
  const double dx = x - nodes_[i];
  const double slope = (density_[i + 1] - density_[i]) / (nodes_[i + 1] - nodes_[i]);
  return cumulative_[i] + density_[i] * dx + 0.5 * slope * dx * dx;
}

double GridMeasure::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw InvalidArgument("GridMeasure::quantile: u must lie in [0, 1]");
  if (u <= 0.0) return nodes_.front();
  if (u >= 1.0) return nodes_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const std::size_t i = std::min(static_cast<std::size_t>(it - cumulative_.begin()) - 1, nodes_.size() - 2);
  const double h = nodes_[i + 1] - nodes_[i];
  const double a = 0.5 * (density_[i + 1] - density_[i]) / h;
  const double b = density_[i];
  const double c = -(u - cumulative_[i]);
  // a t^2 + b t + c = 0 with b > 0, solved without cancellation.
  double t = a == 0.0 ? -c / b : 2.0 * -c / (b + std::sqrt(std::max(0.0, b * b - 4.0 * a * c)));
  t = std::clamp(t, 0.0, h);
  return nodes_[i] + t;
}

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (!(intervals_[i].lo <= intervals_[i].hi)) throw InvalidArgument("IntervalUnion: interval with lo > hi");
    if (i > 0 && !(intervals_[i].lo > intervals_[i - 1].hi)) {
      throw InvalidArgument("IntervalUnion: intervals must be sorted and disjoint");
    }
  }
}

bool IntervalUnion::is_half_line() const {
  return intervals_.size() == 1 && intervals_[0].from_start != intervals_[0].to_end;
}

double IntervalUnion::boundary_measure(const GridMeasure& m) const {
  double total = 0.0;
  for (const auto& iv : intervals_) {
    if (!iv.from_start) total += m.density_at(iv.lo);
    if (!iv.to_end) total += m.density_at(iv.hi);
  }
  return total;
}

double IntervalUnion::mass(const GridMeasure& m) const {
  double total = 0.0;
  for (const auto& iv : intervals_) total += m.cdf(iv.hi) - m.cdf(iv.lo);
  return total;
}

std::string IntervalUnion::to_string() const {
  std::ostringstream os;
  os.precision(10);
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i > 0) os << " u ";
    const auto& iv = intervals_[i];
    if (iv.from_start) {
      os << "(-inf, ";
    } else {
      os << '[' << iv.lo + 0.0 << ", ";
    }
    if (iv.to_end) {
      os << "+inf)";
    } else {
      os << iv.hi + 0.0 << ']';
    }
  }
  return os.str();
}

namespace {

struct LatticeOptimum {
  double value = kInf;
  std::vector<int> ends;  // toggle positions, alternating open / close
};

// Exact minimum over unions with at most `toggles` / 2 intervals whose
// endpoints sit on the lattice j / M and whose mass is target / M.
LatticeOptimum lattice_search(const std::vector<double>& cost, int target, int toggles) {
  const int M = static_cast<int>(cost.size()) - 1;
  // value[e][c]: cheapest completion from the current lattice point with e
  // toggles made and c cells collected. Swept backwards over j; the toggle
  // decision at each (j, e, c) is kept for the forward reconstruction.
  const int C = target + 1;
  const int E = toggles + 1;
  auto at = [C](int e, int c) { return static_cast<std::size_t>(e) * C + c; };
  std::vector<double> next(static_cast<std::size_t>(E) * C, kInf);
  std::vector<double> cur(next.size());
  std::vector<bool> toggle(static_cast<std::size_t>(M + 1) * E * C);
  auto decision = [&](int j, int e, int c) -> std::vector<bool>::reference {
    return toggle[(static_cast<std::size_t>(j) * E + e) * C + c];
  };

  for (int j = M; j >= 0; --j) {
    for (int e = 0; e < E; ++e) {
      for (int c = 0; c < C; ++c) {
        auto continue_from = [&](int e2) {
          if (j == M) return (e2 % 2 == 0 && c == target) ? 0.0 : kInf;
          const int c2 = c + (e2 % 2);
          return c2 < C ? next[at(e2, c2)] : kInf;
        };
        const double stay = continue_from(e);
        const double flip = e + 1 < E ? cost[j] + continue_from(e + 1) : kInf;
        // Ties toggle early, giving the lexicographically smallest endpoints.
        decision(j, e, c) = flip <= stay && flip < kInf;
        cur[at(e, c)] = std::min(stay, flip);
      }
    }
    std::swap(cur, next);
  }
  LatticeOptimum out;
  out.value = next[at(0, 0)];
  if (!(out.value < kInf)) return out;
  for (int j = 0, e = 0, c = 0; j <= M; ++j) {
    if (decision(j, e, c)) {
      out.ends.push_back(j);
      ++e;
    }
    if (j < M) c += e % 2;
  }
  return out;
}

}  // namespace

OracleResult brute_force_iso(const GridMeasure& m, double v, int k, double tie_rel_tol) {
  if (k < 1 || k > 4) throw InvalidArgument("brute_force_iso: k must lie in [1, 4]");
  if (!(tie_rel_tol >= 0.0)) throw InvalidArgument("brute_force_iso: tie_rel_tol must be >= 0");
  if (!(v > 0.0 && v < 1.0)) throw InfeasibleMass("brute_force_iso: v must lie in (0, 1)");
  const int M = static_cast<int>(m.size());
  const int target = static_cast<int>(std::lround(v * M));
  if (target <= 0 || target >= M || std::abs(v - static_cast<double>(target) / M) > kMassTolerance) {
    std::ostringstream msg;
    msg << "brute_force_iso: no lattice mass within " << kMassTolerance << " of v = " << v
        << "; refine the grid";
    throw InfeasibleMass(msg.str());
  }

  // Boundary cost of an endpoint at lattice mass j / M.
  std::vector<double> cost(static_cast<std::size_t>(M) + 1);
  for (int j = 0; j <= M; ++j) {
    cost[j] = (j == 0 || j == M) ? 0.0 : m.density_at(m.quantile(static_cast<double>(j) / M));
  }

  LatticeOptimum best;
  for (int intervals = 1; intervals <= k; ++intervals) {
    LatticeOptimum cand = lattice_search(cost, target, 2 * intervals);
    if (cand.value < best.value * (1.0 - tie_rel_tol) || !(best.value < kInf)) best = std::move(cand);
  }
  if (!(best.value < kInf)) throw InfeasibleMass("brute_force_iso: no configuration reaches the target mass");
  const std::vector<int>& ends = best.ends;

  // Move one interior endpoint so the mass becomes exactly v.
  const double shortfall = v - static_cast<double>(target) / M;
  std::vector<double> u(ends.size());
  for (std::size_t i = 0; i < ends.size(); ++i) u[i] = static_cast<double>(ends[i]) / M;
  double corrected = kInf;
  std::size_t moved_i = 0;
  double moved_u = 0.0;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (ends[i] == 0 || ends[i] == M) continue;
    const bool opening = i % 2 == 0;
    const double moved = std::clamp(opening ? u[i] - shortfall : u[i] + shortfall, 0.0, 1.0);
    const double lo_u = i > 0 ? u[i - 1] : 0.0;
    const double hi_u = i + 1 < ends.size() ? u[i + 1] : 1.0;
    if (!(moved > lo_u && moved < hi_u)) continue;
    const double value = best.value - cost[ends[i]] + m.density_at(m.quantile(moved));
    if (value < corrected) {
      corrected = value;
      moved_i = i;
      moved_u = moved;
    }
  }
  if (corrected < kInf) u[moved_i] = moved_u;

  std::vector<Interval> intervals;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) {
    intervals.push_back({m.quantile(u[i]), m.quantile(u[i + 1]), ends[i] == 0, ends[i + 1] == M});
  }
  OracleResult result;
  result.lattice_value = best.value;
  result.lattice_mass = static_cast<double>(target) / M;
  result.value = corrected < kInf ? corrected : best.value;
  result.witness = IntervalUnion(std::move(intervals));
  return result;
}

OracleComparison oracle_vs_halfline(const Density1D& d, std::span<const double> v_grid, int grid_size, int k,
                                    double tie_rel_tol) {
  // Fails fast with LogConcavityRequired before any search work.
  const IsoProfile halfline = iso_profile(d);
  const GridMeasure m = GridMeasure::from_density(d, grid_size);
  OracleComparison out;
  out.report.min_slack = kInf;
  for (double v : v_grid) {
    OracleResult r = brute_force_iso(m, v, k, tie_rel_tol);
    out.all_half_lines = out.all_half_lines && r.witness.is_half_line();
    out.witnesses.push_back(r.witness);
    BoundRow row{v, iso_profile_halfline(d, v), r.value, 0.0};
    row.ratio = divide(row.truth, row.bound);
    out.report.min_slack = std::min(out.report.min_slack, row.truth - row.bound.value());
    if (row.bound > ExtReal(row.truth)) out.report.dominated = false;
    out.report.rows.push_back(row);
  }
  out.max_rel_discrepancy = out.report.max_rel_discrepancy();
  return out;
}

}  // namespace isoprofile
