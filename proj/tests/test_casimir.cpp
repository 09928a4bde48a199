#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sdual/casimir.hpp"
#include "sdual/errors.hpp"
#include "sdual/weightlat.hpp"

using namespace sdual;

namespace {

HighestWeight hw_of(Eigen::Index rank, std::vector<long long> ks) {
  return HighestWeight(rank, std::move(ks));
}

}  // namespace

TEST_CASE("hand-checked Casimir coefficients") {
  CHECK(c2(resolve({RepKind::can, 5, 0})) == 1);
  CHECK(c2(resolve({RepKind::can_dual, 5, 0})) == 1);
  CHECK(c2(resolve({RepKind::ext, 4, 2})) == 2);
  CHECK(c2(resolve({RepKind::sym, 3, 2})) == 5);
  CHECK(c2(resolve({RepKind::sym, 2, 3})) == 10);
  for (Eigen::Index r = 2; r <= 12; ++r) CHECK(c2(resolve({RepKind::ad, r, 0})) == 2 * r);
  CHECK(c2(HighestWeight::trivial(4)) == 0);
}

TEST_CASE("hand-checked dimensions") {
  CHECK(dim_weyl(resolve({RepKind::can, 6, 0})) == 6);
  CHECK(dim_weyl(resolve({RepKind::ext, 6, 3})) == 20);  // binomial(6,3)
  CHECK(dim_weyl(resolve({RepKind::sym, 2, 7})) == 8);   // k+1
  CHECK(dim_weyl(resolve({RepKind::ad, 5, 0})) == 24);   // r^2-1
  CHECK(dim_weyl(HighestWeight::trivial(3)) == 1);
  CHECK(dim_weyl(hw_of(3, {1, 1})) == 8);
  CHECK(dim_weyl(hw_of(4, {1, 0, 1})) == 15);
}

TEST_CASE("closed forms agree with the resolved weight on a grid") {
  for (Eigen::Index r = 2; r <= 12; ++r) {
    for (long long k = 1; k <= 6; ++k) {
      if (k <= r - 1) {
        const NamedRep nr{RepKind::ext, r, Int(k)};
        CHECK(c2_closed_form(nr) == c2(resolve(nr)));
      }
      const NamedRep ns{RepKind::sym, r, Int(k)};
      CHECK(c2_closed_form(ns) == c2(resolve(ns)));
      const NamedRep nd{RepKind::sym_dual, r, Int(k)};
      CHECK(c2_closed_form(nd) == c2(resolve(nd)));
    }
  }
  // the rank-2 exterior square degenerates to the trivial representation
  CHECK(c2_closed_form({RepKind::ext, 2, 1}) == 1);
  CHECK(c2_closed_form({RepKind::sym, 2, 1}) == 1);
}

TEST_CASE("c2 is invariant under duality") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index r = 2 + static_cast<Eigen::Index>(rng() % 7);
    std::vector<long long> ks(static_cast<std::size_t>(r - 1));
    for (auto& k : ks) k = static_cast<long long>(rng() % 4);
    const HighestWeight hw = hw_of(r, ks);
    const HighestWeight dl = dual(hw);
    CHECK(c2(hw) == c2(dl));
    CHECK(dim_weyl(hw) == dim_weyl(dl));
    CHECK(dual(dl) == hw);
  }
}

TEST_CASE("c2 grows strictly when any coefficient grows") {
  for (Eigen::Index r = 2; r <= 5; ++r) {
    std::vector<long long> ks(static_cast<std::size_t>(r - 1), 0);
    std::mt19937 rng(static_cast<unsigned>(1000 + r));
    for (int trial = 0; trial < 15; ++trial) {
      for (auto& k : ks) k = static_cast<long long>(rng() % 4);
      const Rat base = c2(hw_of(r, ks));
      for (std::size_t i = 0; i < ks.size(); ++i) {
        auto bumped = ks;
        bumped[i] += 1;
        CHECK(c2(hw_of(r, bumped)) > base);
      }
    }
  }
}

TEST_CASE("named representation parsing round-trips") {
  CHECK(resolve(parse_named_rep("can", 4)) == resolve({RepKind::can, 4, 0}));
  CHECK(resolve(parse_named_rep("can*", 4)) == resolve({RepKind::can_dual, 4, 0}));
  CHECK(resolve(parse_named_rep("ext:2", 4)) == resolve({RepKind::ext, 4, 2}));
  CHECK(resolve(parse_named_rep("sym:3", 4)) == resolve({RepKind::sym, 4, 3}));
  CHECK(resolve(parse_named_rep("sym*:3", 4)) == resolve({RepKind::sym_dual, 4, 3}));
  CHECK(resolve(parse_named_rep("ad", 4)) == hw_of(4, {1, 0, 1}));
  CHECK_THROWS_AS(parse_named_rep("bogus", 4), DomainError);
  CHECK_THROWS_AS(parse_named_rep("ext:0", 4), DomainError);
  CHECK_THROWS_AS(parse_named_rep("ext:4", 4), DomainError);
  CHECK_THROWS_AS(parse_named_rep("sym:x", 4), DomainError);
}

TEST_CASE("weight recognition prefers the shortest name") {
  CHECK(rep_name(resolve({RepKind::can, 5, 0})) == std::string("can"));
  CHECK(rep_name(resolve({RepKind::can_dual, 5, 0})) == std::string("can*"));
  CHECK(rep_name(resolve({RepKind::ad, 5, 0})) == std::string("ad"));
  CHECK(rep_name(resolve({RepKind::ext, 5, 2})) == std::string("ext:2"));
  CHECK(rep_name(resolve({RepKind::sym, 5, 3})) == std::string("sym:3"));
  CHECK(rep_name(resolve({RepKind::sym_dual, 5, 3})) == std::string("sym*:3"));
  CHECK(!rep_name(HighestWeight::trivial(5)).has_value());
  CHECK(!rep_name(hw_of(4, {2, 0, 1})).has_value());
  // rank 2 collapses: ad = sym:2, can* = can
  CHECK(rep_name(resolve({RepKind::ad, 2, 0})) == std::string("ad"));
  CHECK(rep_name(resolve({RepKind::can_dual, 2, 0})) == std::string("can"));
}

TEST_CASE("sl(2) weight system of sym:k is the arithmetic ladder") {
  const WeightSystem triv = weight_multiplicities(HighestWeight::trivial(2));
  CHECK(triv.entries().size() == 1);
  CHECK(triv.total() == 1);
  for (long long k = 1; k <= 6; ++k) {
    const WeightSystem ws = weight_multiplicities(resolve({RepKind::sym, 2, Int(k)}));
    REQUIRE(ws.entries().size() == static_cast<std::size_t>(k + 1));
    CHECK(ws.total() == k + 1);
    for (const auto& [w, m] : ws.entries()) CHECK(m == 1);
  }
}

TEST_CASE("sl(3) adjoint weights: six roots simple, zero doubled") {
  const WeightSystem ws = weight_multiplicities(resolve({RepKind::ad, 3, 0}));
  REQUIRE(ws.entries().size() == 7);
  CHECK(ws.total() == 8);
  const RatVec zero = RatVec::Zero(3);
  CHECK(ws.multiplicity(zero) == 2);
  for (const auto& root : positive_roots(3)) {
    CHECK(ws.multiplicity(root) == 1);
    const RatVec neg = (-root).eval();
    CHECK(ws.multiplicity(neg) == 1);
  }
}

TEST_CASE("sl(3) sym:2 has six simple weights") {
  const WeightSystem ws = weight_multiplicities(resolve({RepKind::sym, 3, 2}));
  CHECK(ws.entries().size() == 6);
  CHECK(ws.total() == 6);
  for (const auto& [w, m] : ws.entries()) CHECK(m == 1);
}

TEST_CASE("trace oracle equals the algebraic c2 on small representations") {
  for (Eigen::Index r = 2; r <= 4; ++r) {
    std::vector<std::vector<long long>> samples;
    if (r == 2) samples = {{1}, {2}, {3}, {6}};
    if (r == 3) samples = {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {0, 3}};
    if (r == 4) samples = {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {2, 0, 0}, {1, 1, 0}};
    for (const auto& ks : samples) {
      const HighestWeight hw = hw_of(r, ks);
      CHECK(c2_trace_oracle(hw) == c2(hw));
    }
  }
}

TEST_CASE("weight multiplicities respect the dimension cap") {
  const HighestWeight big = resolve({RepKind::sym, 4, 20});  // dim 1771
  CHECK_THROWS_AS(weight_multiplicities(big, 100), ResourceError);
  CHECK_THROWS_AS(c2_trace_oracle(big, 100), ResourceError);
  CHECK_THROWS_AS(weight_multiplicities(big, 0), DomainError);
  CHECK_THROWS_AS(weight_multiplicities(big, kMaxMultiplicityCap + 1), DomainError);
  CHECK_NOTHROW(weight_multiplicities(big, 2000));
}

TEST_CASE("Weyl orbit half-sum bounds c2 from below") {
  // half the sum of pi(H1)^2 over the orbit of k1 w1 + k2 w2: exactly
  // 2(k1^2 + k1 k2 + k2^2) when both are positive, k^2 when one vanishes;
  // in particular always >= 2(k1^2 + k2^2) resp. k^2, which is the bound
  // that pins down the rank-3 enumeration
  const auto orbit_half_sum = [](const HighestWeight& hw) {
    // orbit of the highest weight: all distinct coordinate permutations
    std::vector<long long> coords;
    const RatVec wv = normalized(hw.weight());
    for (Eigen::Index i = 0; i < wv.size(); ++i)
      coords.push_back(rat_to_int(wv(i), "orbit coordinate").convert_to<long long>());
    std::sort(coords.begin(), coords.end());
    Int acc = 0;
    do {
      const long long d = coords[0] - coords[1];
      acc += Int(d) * d;
    } while (std::next_permutation(coords.begin(), coords.end()));
    return Rat(acc) / 2;
  };
  for (long long k1 = 1; k1 <= 3; ++k1)
    for (long long k2 = 1; k2 <= 3; ++k2) {
      const Rat half = orbit_half_sum(hw_of(3, {k1, k2}));
      CHECK(half == 2 * (k1 * k1 + k1 * k2 + k2 * k2));
      CHECK(half >= 2 * (k1 * k1 + k2 * k2));
    }
  for (long long k = 1; k <= 4; ++k) {
    CHECK(orbit_half_sum(hw_of(3, {k, 0})) == k * k);
    CHECK(orbit_half_sum(hw_of(3, {0, k})) == k * k);
  }
  // the orbit half-sum is a lower bound for c2 (multiplicities are >= 1),
  // so c2 <= 6 forces k1 = k2 = 1 in the two-parameter family
  for (long long k1 = 0; k1 <= 2; ++k1)
    for (long long k2 = 0; k2 <= 2; ++k2) {
      if (k1 + k2 == 0) continue;
      CHECK(c2(hw_of(3, {k1, k2})) >= orbit_half_sum(hw_of(3, {k1, k2})));
    }
}

TEST_CASE("highest weight construction validates its input") {
  CHECK_THROWS_AS(hw_of(1, {}), DomainError);
  CHECK_THROWS_AS(hw_of(3, {1}), DomainError);
  CHECK_THROWS_AS(hw_of(3, {-1, 0}), DomainError);
  CHECK_NOTHROW(hw_of(2, {0}));
}
