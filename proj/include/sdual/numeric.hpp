#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "sdual/errors.hpp"

namespace sdual {

/// Exact arbitrary-precision integer and rational scalars. Everything in the
/// library computes over these; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense Eigen containers over the exact scalars.
///
/// Note on idiom: coefficient-wise Eigen expressions (+, -, scalar multiples,
/// dot, sum, cwise comparisons) are fine over these scalars, but operator*
/// matrix products are not formed; bilinear and quadratic forms are provided
/// as free functions that loop over coefficients. (Boost 1.7x's
/// is_byte_container trait is not SFINAE-safe against Eigen 3.4 iterator
/// typedefs, so Eigen's scalar-promotion probe for matrix products hard-errors.)
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// p/q with sign normalized into the numerator. q must be nonzero.
inline Rat make_rat(const Int& p, const Int& q) {
  require(q != 0, "make_rat: zero denominator");
  return Rat(p) / Rat(q);
}

inline bool is_even(const Int& n) { return (n & 1) == 0; }

/// Exact quotient; the division must leave no remainder.
inline Int exact_div(const Int& a, const Int& b, const char* what) {
  internal_check(b != 0, std::string(what) + ": division by zero");
  Int q = a / b;
  internal_check(q * b == a, std::string(what) + ": non-exact division");
  return q;
}

inline bool is_integral(const Rat& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Rational that must be an integer by construction.
inline Int rat_to_int(const Rat& q, const char* what) {
  internal_check(is_integral(q), std::string(what) + ": non-integral value");
  return boost::multiprecision::numerator(q);
}

inline Int rat_floor(const Rat& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  Int d = num / den;  // truncates toward zero
  if (d * den != num && num < 0) --d;
  return d;
}

inline Int rat_ceil(const Rat& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  Int d = num / den;
  if (d * den != num && num > 0) ++d;
  return d;
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
  require(n >= 0, "isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int s = boost::multiprecision::sqrt(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

/// binomial(n, k) for n >= 0; zero outside 0 <= k <= n.
inline Int binomial(const Int& n, const Int& k) {
  require(n >= 0, "binomial: negative n");
  if (k < 0 || k > n) return 0;
  Int kk = k;
  if (n - k < kk) kk = n - k;
  Int result = 1;
  for (Int i = 1; i <= kk; ++i) result = result * (n - kk + i) / i;
  return result;
}

/// Product of many (typically small) factors via a balanced tree, so that
/// multi-thousand-factor Weyl products stay cheap.
inline Int balanced_product(std::vector<Int> factors) {
  if (factors.empty()) return 1;
  while (factors.size() > 1) {
    std::size_t half = (factors.size() + 1) / 2;
    for (std::size_t i = 0; i + half < factors.size(); ++i) factors[i] *= factors[i + half];
    factors.resize(half);
  }
  return factors[0];
}

/// "p" or "p/q"; the only serialization used for rationals anywhere.
inline std::string rat_string(const Rat& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Range-checked narrowing for internal fast paths whose inputs were already
/// bounded by a cap check.
inline long long to_int64(const Int& n, const char* what) {
  internal_check(n >= std::numeric_limits<long long>::min() &&
                     n <= std::numeric_limits<long long>::max(),
                 std::string(what) + ": value exceeds 64-bit intermediate range");
  return n.convert_to<long long>();
}

}  // namespace sdual
