#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdual/weightlat.hpp"

namespace sdual {

/// Dominant integral weight lambda = sum k_i omega_i of sl(r,C), identifying
/// an irreducible representation. All k_i >= 0; the zero sequence is the
/// trivial representation.
class HighestWeight {
 public:
  HighestWeight(Eigen::Index rank, IntVec ks);
  HighestWeight(Eigen::Index rank, const std::vector<long long>& ks);
  static HighestWeight trivial(Eigen::Index rank);

  Eigen::Index rank() const { return ks_.size() + 1; }
  const IntVec& ks() const { return ks_; }
  bool is_trivial() const;

  /// Epsilon-coordinate representative with last coordinate 0:
  /// coordinate t carries sum of k_i for i >= t.
  WeightVector weight() const;

  friend bool operator==(const HighestWeight& a, const HighestWeight& b);
  friend bool operator!=(const HighestWeight& a, const HighestWeight& b);

 private:
  IntVec ks_;
};

/// Lexicographic order on (rank, ks); deterministic total order for sorts.
bool lex_less(const HighestWeight& a, const HighestWeight& b);

enum class RepKind { can, can_dual, ext, sym, sym_dual, ad };

/// Named representation: can, can*, Lambda^k(can), S^k(can), S^k(can)*, ad.
/// ext(k) requires 1 <= k <= r-1; sym(k) requires k >= 1.
struct NamedRep {
  RepKind kind;
  Eigen::Index rank;
  Int k;  // used by ext / sym / sym_dual
};

/// can -> omega_1; can* -> omega_{r-1}; ext(k) -> omega_k; sym(k) -> k omega_1;
/// sym*(k) -> k omega_{r-1}; ad -> omega_1 + omega_{r-1}.
HighestWeight resolve(const NamedRep& nr);

/// Parse "can", "can*", "ext:k", "sym:k", "sym*:k", "ad".
NamedRep parse_named_rep(const std::string& text, Eigen::Index rank);

/// Recognize a highest weight as a named representation, if it is one.
/// Preference order: can, can*, ad, ext:k, sym:k, sym*:k.
std::optional<std::string> rep_name(const HighestWeight& hw);

/// Weyl dimension formula: product over positive roots of
/// (lambda+rho; alpha)/(rho; alpha). The product always clears to an exact
/// integer; this is asserted.
Int dim_weyl(const HighestWeight& hw);

/// (lambda; lambda + 2 rho). Both evaluation routes, the direct pairing and
/// |lambda+rho|^2 - |rho|^2, are computed and must agree.
Rat casimir_pairing(const HighestWeight& hw);

/// Casimir coefficient c2 = (lambda; lambda+2rho) dim / (r^2 - 1).
/// Zero for the trivial weight.
Rat c2(const HighestWeight& hw);

/// Closed forms: 1 for can/can*, binomial(r-2, k-1) for ext(k),
/// binomial(r+k, k-1) for sym(k)/sym*(k), 2r for ad.
Rat c2_closed_form(const NamedRep& nr);

/// Reversed coefficient sequence; c2 is invariant under it.
HighestWeight dual(const HighestWeight& hw);

inline constexpr long long kDefaultMultiplicityCap = 10000;
/// Hard ceiling for cap overrides; keeps the integer fast paths in range.
inline constexpr long long kMaxMultiplicityCap = 200000;

/// Full weight system of the irrep: every weight (canonical representative,
/// last epsilon-coordinate subtracted) with its multiplicity, sorted
/// lexicographically. Computed by the Freudenthal recursion descending from
/// lambda. Requires dim_weyl(hw) <= cap, else a resource error naming the cap.
class WeightSystem {
 public:
  using Entry = std::pair<WeightVector, Int>;
  explicit WeightSystem(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  const std::vector<Entry>& entries() const { return entries_; }
  /// Multiplicity of w (any representative), zero if absent.
  Int multiplicity(const WeightVector& w) const;
  Int total() const;

 private:
  std::vector<Entry> entries_;  // sorted by weight_less on keys
};

WeightSystem weight_multiplicities(const HighestWeight& hw,
                                   long long cap = kDefaultMultiplicityCap);

/// Independent trace oracle: c2 = (1/2) sum_pi m_pi pi(H_1)^2 where
/// pi(H_1) = first epsilon-coordinate minus second. Same cap as
/// weight_multiplicities; must equal c2(hw).
Rat c2_trace_oracle(const HighestWeight& hw, long long cap = kDefaultMultiplicityCap);

}  // namespace sdual
