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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isoprofile/bound_report.hpp"
#include "isoprofile/model1d.hpp"

// Brute-force isoperimetric oracle on a discretized line measure.

namespace isoprofile {

// Piecewise-linear density through (x_i, rho_i), normalized by the trapezoid
// rule. The two grid ends stand for the ends of the support: a set touching
// them pays no boundary there.
class GridMeasure {
 public:
  GridMeasure(std::vector<double> nodes, std::vector<double> density);

  // n nodes on [lo, hi], or on the central range leaving 1e-14 of mass on
  // each unbounded side when no range is given.
  static GridMeasure from_density(const Density1D& d, int n,
                                  std::optional<std::pair<double, double>> range = std::nullopt);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& density() const { return density_; }
  std::size_t size() const { return nodes_.size(); }
  double cell_mass(std::size_t i) const { return cumulative_[i + 1] - cumulative_[i]; }
  double total_mass() const { return cumulative_.back(); }

  double density_at(double x) const;
  // Mass of [x_0, x].
  double cdf(double x) const;
  // x with cdf(x) = u for u in [0, 1].
  double quantile(double u) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> density_;
  std::vector<double> cumulative_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool from_start = false;  // lo is the start of the support
  bool to_end = false;      // hi is the end of the support
};

// Sorted, pairwise disjoint closed intervals.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  // A single interval reaching exactly one end of the support.
  bool is_half_line() const;
  // Sum of the density at endpoints interior to the support.
  double boundary_measure(const GridMeasure& m) const;
  double mass(const GridMeasure& m) const;
  std::string to_string() const;

 private:
  std::vector<Interval> intervals_;
};

struct OracleResult {
  double value = 0.0;          // boundary measure at mass exactly v
  double lattice_value = 0.0;  // before the endpoint correction
  double lattice_mass = 0.0;   // mass of the lattice optimum
  IntervalUnion witness;       // after the endpoint correction
};

// Minimal boundary measure over unions of at most k intervals with mass v.
// Endpoints range over the mass lattice j / M (M = number of grid nodes);
// the search is an exact dynamic program over toggle count and accumulated
// mass, so every lattice configuration is covered. The lattice optimum is
// then brought to mass exactly v by moving the cheapest endpoint.
//
// Unions with more intervals replace the best union with fewer intervals
// only when cheaper by more than tie_rel_tol (relative). Some measures have
// exact ties between the two (the two-sided exponential: two tails of total
// mass v cost v, like a half-line), and grid interpolation error would
// otherwise pick the witness. Remaining ties go to the lexicographically
// smallest endpoint sequence.
//
// Throws InfeasibleMass when v is outside (0, 1) or no lattice mass lies
// within 1e-3 of v; InvalidArgument when k is outside [1, 4].
OracleResult brute_force_iso(const GridMeasure& m, double v, int k, double tie_rel_tol = 1e-4);

struct OracleComparison {
  BoundReport report;  // bound = half-line profile, truth = oracle
  std::vector<IntervalUnion> witnesses;
  double max_rel_discrepancy = 0.0;
  bool all_half_lines = true;
};

// Oracle (k = 2) against the half-line profile on each v.
// Throws LogConcavityRequired for non-log-concave densities.
OracleComparison oracle_vs_halfline(const Density1D& d, std::span<const double> v_grid, int grid_size, int k = 2,
                                    double tie_rel_tol = 1e-4);

}  // namespace isoprofile
