#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "sdual/betaconf.hpp"
#include "sdual/errors.hpp"

using namespace sdual;

namespace {

HighestWeight hw_of(Eigen::Index rank, const std::vector<long long>& ks) {
  return HighestWeight(rank, ks);
}

HighestWeight named(const char* text, Eigen::Index rank) {
  return resolve(parse_named_rep(text, rank));
}

// multiset fingerprint of a configuration: sorted list of coefficient rows
using Fingerprint = std::vector<std::vector<long long>>;

Fingerprint fingerprint(const std::vector<HighestWeight>& reps) {
  Fingerprint out;
  for (const auto& hw : reps) {
    std::vector<long long> row;
    for (Eigen::Index i = 0; i < hw.ks().size(); ++i)
      row.push_back(hw.ks()(i).convert_to<long long>());
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("beta on hand-checked configurations") {
  // su(2): the adjoint alone and four copies of can both balance c2(ad) = 4
  CHECK(beta(2, {named("ad", 2)}) == 0);
  CHECK(beta(2, std::vector<HighestWeight>(4, named("can", 2))) == 0);
  CHECK(beta(2, std::vector<HighestWeight>(3, named("can", 2))) == -1);
  CHECK(beta(2, std::vector<HighestWeight>(1, named("can", 2))) == -3);

  // su(3): c2(can) = 1, c2(S^2 can) = 5, c2(Lambda^2 can) = 1, c2(ad) = 6
  CHECK(beta(3, {named("ad", 3)}) == 0);
  CHECK(beta(3, std::vector<HighestWeight>(6, named("can", 3))) == 0);
  CHECK(beta(3, {named("sym:2", 3), named("ext:2", 3)}) == 0);
  CHECK(beta(3, {named("sym:2", 3)}) == -1);
  CHECK(beta(3, {named("can", 3), named("can*", 3)}) == -4);

  // mixing ranks within one su(r) just adds c2 values
  CHECK(beta(4, {named("ad", 4), named("can", 4)}) == 1);
}

TEST_CASE("beta input validation") {
  CHECK_THROWS_AS(beta(3, {}), DomainError);
  CHECK_THROWS_AS(beta(3, {HighestWeight::trivial(3)}), DomainError);
  CHECK_THROWS_AS(beta(3, {named("can", 3), HighestWeight::trivial(3)}),
                  DomainError);
  // rank of every rep must match the ambient rank
  CHECK_THROWS_AS(beta(3, {named("can", 4)}), DomainError);
  CHECK_THROWS_AS(beta(2, {named("can", 2), named("can", 3)}), DomainError);
}

TEST_CASE("enumerate_reps_below: small bounds by hand") {
  // nothing sits below c2 = 1
  CHECK(enumerate_reps_below(3, Rat(1) / 2).empty());
  CHECK(enumerate_reps_below(3, 0).empty());
  CHECK(enumerate_reps_below(3, -5).empty());
  CHECK(enumerate_reps_below(5, Rat(99) / 100).empty());

  // bound 1 at rank 3: exactly can and can*
  const auto at1 = enumerate_reps_below(3, 1);
  REQUIRE(at1.size() == 2);
  CHECK(at1[0].c2 == 1);
  CHECK(at1[1].c2 == 1);
  CHECK(fingerprint({at1[0].hw, at1[1].hw}) ==
        Fingerprint{{0, 1}, {1, 0}});

  // bound 6 at rank 3: can, can*, S^2, S^2*, ad
  const auto at6 = enumerate_reps_below(3, 6);
  REQUIRE(at6.size() == 5);
  std::vector<HighestWeight> hws;
  for (const auto& rc : at6) hws.push_back(rc.hw);
  CHECK(fingerprint(hws) ==
        Fingerprint{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
  // sorted by (c2, lexicographic coefficients)
  CHECK(at6[0].c2 == 1);  // can* = (0,1)
  CHECK(at6[1].c2 == 1);  // can  = (1,0)
  CHECK(at6[2].c2 == 5);  // S^2* = (0,2)
  CHECK(at6[3].c2 == 5);  // S^2  = (2,0)
  CHECK(at6[4].c2 == 6);  // ad   = (1,1)

  // rank 2: c2(k w1) = k(k+1)(k+2)/6, so bound 10 admits k = 1, 2, 3
  const auto r2 = enumerate_reps_below(2, 10);
  REQUIRE(r2.size() == 3);
  CHECK(r2[0].c2 == 1);
  CHECK(r2[1].c2 == 4);
  CHECK(r2[2].c2 == 10);
  CHECK(r2[0].hw == hw_of(2, {1}));
  CHECK(r2[1].hw == hw_of(2, {2}));
  CHECK(r2[2].hw == hw_of(2, {3}));
}

TEST_CASE("enumerate_reps_below matches a brute-force box scan") {
  // c2 is coordinatewise monotone, so a box that already exceeds the bound
  // on its faces contains every solution; compare exact sets
  for (const long long bound : {1LL, 4LL, 6LL, 12LL, 20LL}) {
    const auto got = enumerate_reps_below(3, bound);
    std::set<std::vector<long long>> expect;
    for (long long k1 = 0; k1 <= 12; ++k1)
      for (long long k2 = 0; k2 <= 12; ++k2) {
        if (k1 + k2 == 0) continue;
        if (c2(hw_of(3, {k1, k2})) <= bound) expect.insert({k1, k2});
      }
    std::set<std::vector<long long>> seen;
    for (const auto& rc : got) {
      CHECK(rc.c2 == c2(rc.hw));
      CHECK(rc.c2 <= bound);
      std::vector<long long> row{rc.hw.ks()(0).convert_to<long long>(),
                                 rc.hw.ks()(1).convert_to<long long>()};
      CHECK(seen.insert(row).second);  // no duplicates
    }
    CHECK(seen == expect);
  }
  // ordering invariant on a larger sample
  const auto big = enumerate_reps_below(4, 30);
  CHECK(std::is_sorted(big.begin(), big.end(),
                       [](const RepC2& a, const RepC2& b) {
                         if (a.c2 != b.c2) return a.c2 < b.c2;
                         return lex_less(a.hw, b.hw);
                       }));
  for (const auto& rc : big) CHECK(!rc.hw.is_trivial());
}

TEST_CASE("rank-2 configurations: the complete list") {
  const auto configs = enumerate_configs(2);
  REQUIRE(configs.size() == 5);

  std::vector<Fingerprint> expect;
  expect.push_back(fingerprint({named("ad", 2)}));
  for (int n = 1; n <= 4; ++n)
    expect.push_back(
        fingerprint(std::vector<HighestWeight>(n, named("can", 2))));
  std::sort(expect.begin(), expect.end());

  std::vector<Fingerprint> got;
  long long zeros = 0;
  for (const auto& cfg : configs) {
    CHECK(cfg.rank == 2);
    CHECK(cfg.beta <= 0);
    CHECK(cfg.beta == beta(cfg.rank, cfg.reps));  // cache honesty
    if (cfg.beta == 0) ++zeros;
    got.push_back(fingerprint(cfg.reps));
  }
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
  CHECK(zeros == 2);
}

TEST_CASE("rank-3 configurations: count, zero set, and structure") {
  const auto configs = enumerate_configs(3);
  REQUIRE(configs.size() == 34);

  // the expected beta = 0 multisets, built from the named reps:
  // the adjoint; the seven can/can* multisets of size six; the four
  // {one of can, can*} + {one of S^2, S^2*} pairs
  std::vector<Fingerprint> expect_zero;
  expect_zero.push_back(fingerprint({named("ad", 3)}));
  for (int a = 0; a <= 6; ++a) {
    std::vector<HighestWeight> reps(a, named("can", 3));
    reps.insert(reps.end(), 6 - a, named("can*", 3));
    expect_zero.push_back(fingerprint(reps));
  }
  for (const char* v : {"can", "can*"})
    for (const char* s : {"sym:2", "sym*:2"})
      expect_zero.push_back(fingerprint({named(v, 3), named(s, 3)}));
  std::sort(expect_zero.begin(), expect_zero.end());
  REQUIRE(expect_zero.size() == 12);

  std::vector<Fingerprint> got_zero;
  std::vector<Fingerprint> all;
  for (const auto& cfg : configs) {
    CHECK(cfg.beta <= 0);
    CHECK(cfg.beta == beta(cfg.rank, cfg.reps));
    for (const auto& hw : cfg.reps) CHECK(!hw.is_trivial());
    all.push_back(fingerprint(cfg.reps));
    if (cfg.beta == 0) got_zero.push_back(fingerprint(cfg.reps));
  }
  std::sort(got_zero.begin(), got_zero.end());
  CHECK(got_zero == expect_zero);

  // no duplicate multisets anywhere in the list
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());

  // strictly negative remainder: 20 can/can* multisets of sizes 1..5
  // plus S^2 and S^2* alone
  CHECK(configs.size() - got_zero.size() == 22);
}

TEST_CASE("configuration list ordering is deterministic") {
  for (const Eigen::Index r : {2, 3}) {
    const auto configs = enumerate_configs(r);
    const auto before = [](const FieldConfiguration& a,
                           const FieldConfiguration& b) {
      if (a.beta != b.beta) return a.beta < b.beta;
      if (a.reps.size() != b.reps.size()) return a.reps.size() < b.reps.size();
      for (std::size_t i = 0; i < a.reps.size(); ++i) {
        if (a.reps[i] != b.reps[i])
          return lex_less(a.reps[i], b.reps[i]);
      }
      return false;
    };
    CHECK(std::is_sorted(configs.begin(), configs.end(), before));
  }
}

TEST_CASE("fold_duals merges exactly the dual-related configurations") {
  for (const Eigen::Index r : {2, 3}) {
    const auto unfolded = enumerate_configs(r, false);
    const auto folded = enumerate_configs(r, true);

    // refold the unfolded list independently: map each rep to the
    // lexicographically smaller of (hw, dual(hw)), then dedupe multisets
    std::set<Fingerprint> expect;
    for (const auto& cfg : unfolded) {
      std::vector<HighestWeight> reps;
      for (const auto& hw : cfg.reps) {
        const HighestWeight d = dual(hw);
        reps.push_back(lex_less(d, hw) ? d : hw);
      }
      expect.insert(fingerprint(reps));
    }
    std::set<Fingerprint> got;
    for (const auto& cfg : folded) {
      for (const auto& hw : cfg.reps) {
        const HighestWeight d = dual(hw);
        CHECK(!lex_less(d, hw));  // every rep is the folded representative
      }
      CHECK(got.insert(fingerprint(cfg.reps)).second);
      CHECK(cfg.beta == beta(cfg.rank, cfg.reps));
    }
    CHECK(got == expect);
  }
  // rank 2 is self-dual throughout, so folding changes nothing
  CHECK(enumerate_configs(2, true).size() == 5);
  // rank 3 collapses to: {can^n} for n = 1..6, {can, S^2}, {S^2}, {ad}
  CHECK(enumerate_configs(3, true).size() == 9);
}

TEST_CASE("the three vanishing series hold at every rank") {
  for (Eigen::Index r = 2; r <= 12; ++r) {
    const SeriesReport rep = verify_series(r);
    CHECK(rep.rank == r);
    CHECK(rep.beta_a == 0);
    CHECK(rep.a_ok);
    CHECK(rep.beta_b == 0);
    CHECK(rep.b_ok);
    CHECK(rep.c_applicable == (r != 2));
    if (r != 2) {
      REQUIRE(rep.c_betas.size() == 4);
      for (const auto& b : rep.c_betas) CHECK(b == 0);
      CHECK(rep.c_ok);
    }
    CHECK(rep.pass);
  }
}
