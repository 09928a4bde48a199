#pragma once

#include <vector>

#include "sdual/numeric.hpp"

namespace sdual {

/// Weight vectors of sl(r,C) in epsilon-coordinates (diagonal entries of the
/// Cartan subalgebra), considered modulo the all-ones vector. Constructors
/// may return any representative; equality and map keys go through
/// normalized(), which subtracts the last coordinate.
using WeightVector = RatVec;

/// omega_i = eps_1 + ... + eps_i, returned as (1,...,1,0,...,0) with i ones.
/// Requires r >= 2 and 1 <= i <= r-1.
WeightVector fundamental_weight(Eigen::Index r, Eigen::Index i);

/// rho = sum of all fundamental weights = (r-1, r-2, ..., 1, 0).
WeightVector rho(Eigen::Index r);

/// The r(r-1)/2 positive roots eps_i - eps_j, i < j, in lexicographic (i, j)
/// order.
std::vector<WeightVector> positive_roots(Eigen::Index r);

/// Trace form of the canonical representation:
///   (a; b) = sum a_i b_i - (sum a_i)(sum b_i)/r.
/// Invariant under adding a constant vector to either argument, which makes
/// it well defined on weights mod constants. Arguments must have equal size.
template <typename A, typename B>
Rat pairing(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  require(a.size() == b.size(), "pairing: rank mismatch");
  require(a.size() >= 2, "pairing: rank must be at least 2");
  Rat dot = 0, sa = 0, sb = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Rat x(a(i)), y(b(i));
    dot += x * y;
    sa += x;
    sb += y;
  }
  return dot - sa * sb / Rat(static_cast<long long>(a.size()));
}

/// Canonical representative: subtract the last coordinate from every entry.
WeightVector normalized(const WeightVector& w);

/// Equality mod constants: the coordinate difference is a constant vector.
bool weights_equal(const WeightVector& a, const WeightVector& b);

/// Strict lexicographic order on normalized representatives; a total order
/// on weights used for deterministic map layouts.
bool weight_less(const WeightVector& a, const WeightVector& b);

}  // namespace sdual
