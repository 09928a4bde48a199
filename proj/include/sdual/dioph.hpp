#pragma once

#include <vector>

#include "sdual/numeric.hpp"
#include "sdual/surface.hpp"

namespace sdual {

/// Finite lattice search box: rank range, per-coordinate inclusive bounds,
/// and a blown-point range for callers who sweep X_1..X_8.
/// Empty coord_ranges means the derived default [-3 r_max, 3 r_max] per
/// coordinate, which covers both roots of the rank-r plane quadratic
/// (they are negative and sum to -3r).
struct SearchWindow {
  long long r_min = 2;
  long long r_max = 2;
  std::vector<std::pair<long long, long long>> coord_ranges;
  long long m_min = 1;
  long long m_max = 8;

  void validate() const;  // nonempty and finite in every direction
};

/// One lattice point passing a dimension condition, with its slope-window
/// and smoothness flags.
struct ConditionHit {
  Int r;
  DivisorClass c1;
  Rat mu;
  bool window_b = false;
  bool window_c = false;
  bool smooth = false;
};

/// All (r, c1) in the window with dim_condition_b, sorted by (r, coords).
std::vector<ConditionHit> search_condition_b(const SurfaceModel& surface,
                                             const SearchWindow& window);

/// Same sweep for dim_condition_c.
std::vector<ConditionHit> search_condition_c(const SurfaceModel& surface,
                                             const SearchWindow& window);

/// Solution of the coupled sum / sum-of-squares system on a plane blown up
/// in m points:
///   sum b_i + 3a + A = 0
///   sum b_i^2 = a^2 - (rA - 1)/2
///   0 < A < r(9 - m)/2,  rA odd.
/// b is stored in canonical non-increasing order; vector_count is the number
/// of coordinate orderings of that multiset (the b_i are attached to
/// interchangeable exceptional classes, so one representative is stored).
struct SysSolution {
  long long m;
  Int r;
  Int A;
  Int a;
  std::vector<Int> b;
  Int vector_count;

  SysSolution(long long m, Int r, Int A, Int a, std::vector<Int> b);
};

bool operator==(const SysSolution& s1, const SysSolution& s2);

/// Exhaustive solve of the system over m in [m_min, m_max], r in
/// [r_min, r_max], every admissible A, integer a in the Cauchy-Schwarz
/// feasible range, and every canonical b. With interval_pruning, (m, r, A)
/// cells are skipped when m lies outside the exact feasibility interval
/// I(r, A) = [9 - 2A^2/(rA-1), 9 - 2A/r); the output is identical either
/// way, only faster for large r.
std::vector<SysSolution> search_sys(long long m_min, long long m_max,
                                    long long r_min, long long r_max,
                                    bool interval_pruning = false);

/// The feasibility interval I(r, A) in exact rationals, the integers
/// 1..8 it contains, and the length bound |I| = 2/(r(r - 1/A)) <= 2/(r(r-1)).
struct IntervalReport {
  Int r;
  Int A;
  Rat left;    // closed endpoint 9 - 2A^2/(rA-1)
  Rat right;   // open endpoint 9 - 2A/r
  Rat length;
  Rat length_bound;  // 2/(r(r-1))
  bool bound_ok = false;
  std::vector<int> integer_ms;  // integers m in I with 1 <= m <= 8
  bool contains_integer = false;
};

IntervalReport interval_argument(const Int& r, const Int& A);

}  // namespace sdual
