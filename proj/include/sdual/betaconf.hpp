#pragma once

#include <vector>

#include "sdual/casimir.hpp"

namespace sdual {

/// One-loop beta coefficient of a matter configuration:
///   beta = -c2(ad) + sum_i c2(gamma_i),  c2(ad) = 2r.
/// reps must be nonempty and contain no trivial weights.
Rat beta(Eigen::Index rank, const std::vector<HighestWeight>& reps);

/// A finite multiset of nontrivial irreps with its cached beta value.
/// Canonical form: reps sorted by (c2, lexicographic coefficients).
struct FieldConfiguration {
  Eigen::Index rank;
  std::vector<HighestWeight> reps;
  Rat beta;
};

struct RepC2 {
  HighestWeight hw;
  Rat c2;
};

/// Every nontrivial highest weight with c2 <= bound, exactly once, sorted by
/// (c2, lexicographic coefficients). Downset search over the coefficient
/// lattice; completeness rests on coordinatewise monotonicity of c2, and the
/// search re-verifies that every pruned frontier weight exceeds the bound.
std::vector<RepC2> enumerate_reps_below(Eigen::Index rank, const Rat& bound);

/// All multisets of nontrivial irreps with beta <= 0, i.e. c2 sum <= 2r.
/// Deterministic order: (beta, multiset size, lexicographic rep sequence).
/// fold_duals replaces each rep by the lexicographically smaller of the pair
/// (hw, dual(hw)) and merges configurations that collide.
std::vector<FieldConfiguration> enumerate_configs(Eigen::Index rank,
                                                  bool fold_duals = false);

/// The three beta = 0 series at a given rank:
///   a) the adjoint alone;
///   b) 2r copies of can (or can*);
///   c) one of Lambda^2(can), Lambda^2(can*) with one of S^2(can), S^2(can*).
/// Series c degenerates at r = 2, where Lambda^2(can) is trivial.
struct SeriesReport {
  Eigen::Index rank = 0;
  Rat beta_a;
  bool a_ok = false;
  Rat beta_b;
  bool b_ok = false;
  bool c_applicable = false;  // false only for r = 2
  std::vector<Rat> c_betas;   // the four Lambda/S dual combinations
  bool c_ok = false;          // true when applicable and all four vanish
  bool pass = false;
};

SeriesReport verify_series(Eigen::Index rank);

}  // namespace sdual
