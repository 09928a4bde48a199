#include "sdual/betaconf.hpp"

#include <algorithm>
#include <map>

namespace sdual {

namespace {

std::vector<Int> ks_key(const HighestWeight& hw) {
  std::vector<Int> key(static_cast<std::size_t>(hw.ks().size()));
  for (Eigen::Index i = 0; i < hw.ks().size(); ++i) key[static_cast<std::size_t>(i)] = hw.ks()(i);
  return key;
}

}  // namespace

Rat beta(Eigen::Index rank, const std::vector<HighestWeight>& reps) {
  require(rank >= 2, "beta: rank must be at least 2");
  require(!reps.empty(), "beta: configuration must contain at least one representation");
  // c2 is evaluated once per distinct weight; series configurations repeat
  // one weight 2r times.
  std::map<std::vector<Int>, std::pair<Rat, long long>> grouped;
  for (const auto& hw : reps) {
    require(hw.rank() == rank, "beta: representation rank mismatch");
    require(!hw.is_trivial(), "beta: trivial representations are excluded");
    auto [it, fresh] = grouped.try_emplace(ks_key(hw), Rat(0), 0);
    if (fresh) it->second.first = c2(hw);
    ++it->second.second;
  }
  Rat total = -Rat(2 * static_cast<long long>(rank));
  for (const auto& [key, val] : grouped) total += val.first * Rat(val.second);
  return total;
}

std::vector<RepC2> enumerate_reps_below(Eigen::Index rank, const Rat& bound) {
  require(rank >= 2, "enumerate_reps_below: rank must be at least 2");
  std::vector<RepC2> accepted;
  if (bound < 1) return accepted;  // minimal nontrivial c2 is c2(can) = 1

  // Downset BFS over nonzero coefficient vectors, seeded by the unit vectors;
  // c2 grows strictly in every coordinate, so pruning at the bound is exact.
  std::map<std::vector<Int>, bool> seen;  // value: accepted (vs frontier)
  std::vector<HighestWeight> queue;
  for (Eigen::Index i = 0; i < rank - 1; ++i) {
    IntVec ks = IntVec::Zero(rank - 1);
    ks(i) = 1;
    queue.emplace_back(rank, std::move(ks));
  }
  std::vector<HighestWeight> frontier;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const HighestWeight hw = queue[qi];
    auto [it, fresh] = seen.try_emplace(ks_key(hw), false);
    if (!fresh) continue;
    const Rat value = c2(hw);
    if (value > bound) {
      frontier.push_back(hw);
      continue;
    }
    it->second = true;
    accepted.push_back({hw, value});
    for (Eigen::Index i = 0; i < rank - 1; ++i) {
      IntVec ks = hw.ks();
      ks(i) += 1;
      queue.emplace_back(rank, std::move(ks));
    }
  }
  // Post-hoc completeness check: every pruned frontier weight really exceeds
  // the bound (re-evaluated, not trusted from the pruning pass).
  for (const auto& hw : frontier) {
    internal_check(c2(hw) > bound, "enumerate_reps_below: frontier weight within bound");
  }
  std::sort(accepted.begin(), accepted.end(), [](const RepC2& a, const RepC2& b) {
    if (a.c2 != b.c2) return a.c2 < b.c2;
    return lex_less(a.hw, b.hw);
  });
  return accepted;
}

namespace {

bool config_less(const FieldConfiguration& a, const FieldConfiguration& b) {
  if (a.beta != b.beta) return a.beta < b.beta;
  if (a.reps.size() != b.reps.size()) return a.reps.size() < b.reps.size();
  for (std::size_t i = 0; i < a.reps.size(); ++i) {
    if (a.reps[i] != b.reps[i]) return lex_less(a.reps[i], b.reps[i]);
  }
  return false;
}

}  // namespace

std::vector<FieldConfiguration> enumerate_configs(Eigen::Index rank, bool fold_duals) {
  require(rank >= 2, "enumerate_configs: rank must be at least 2");
  const Rat budget = Rat(2 * static_cast<long long>(rank));
  const std::vector<RepC2> reps = enumerate_reps_below(rank, budget);

  std::vector<FieldConfiguration> out;
  std::vector<std::size_t> chosen;
  // Multisets as nondecreasing index sequences; every prefix already has
  // c2 sum <= 2r, so every node of the walk is a valid configuration.
  auto walk = [&](auto&& self, std::size_t from, const Rat& used) -> void {
    if (!chosen.empty()) {
      FieldConfiguration fc;
      fc.rank = rank;
      for (const std::size_t i : chosen) fc.reps.push_back(reps[i].hw);
      fc.beta = used - budget;
      out.push_back(std::move(fc));
    }
    for (std::size_t i = from; i < reps.size(); ++i) {
      const Rat next = used + reps[i].c2;
      if (next > budget) continue;
      chosen.push_back(i);
      self(self, i, next);
      chosen.pop_back();
    }
  };
  walk(walk, 0, Rat(0));

  if (fold_duals) {
    std::map<std::vector<std::vector<Int>>, FieldConfiguration> folded;
    for (auto& fc : out) {
      std::vector<HighestWeight> reduced;
      reduced.reserve(fc.reps.size());
      for (const auto& hw : fc.reps) {
        HighestWeight d = dual(hw);
        reduced.push_back(lex_less(d, hw) ? d : hw);
      }
      std::sort(reduced.begin(), reduced.end(), [](const HighestWeight& a, const HighestWeight& b) {
        Rat ca = c2(a), cb = c2(b);
        if (ca != cb) return ca < cb;
        return lex_less(a, b);
      });
      std::vector<std::vector<Int>> key;
      key.reserve(reduced.size());
      for (const auto& hw : reduced) key.push_back(ks_key(hw));
      FieldConfiguration repl{fc.rank, std::move(reduced), fc.beta};
      folded.try_emplace(std::move(key), std::move(repl));
    }
    out.clear();
    for (auto& [key, fc] : folded) out.push_back(std::move(fc));
  }

  for (auto& fc : out) {
    // Cache/recompute agreement for every emitted configuration.
    internal_check(beta(rank, fc.reps) == fc.beta, "enumerate_configs: cached beta mismatch");
  }
  std::sort(out.begin(), out.end(), config_less);
  return out;
}

SeriesReport verify_series(Eigen::Index rank) {
  require(rank >= 2, "verify_series: rank must be at least 2");
  SeriesReport rep;
  rep.rank = rank;

  rep.beta_a = beta(rank, {resolve({RepKind::ad, rank, 0})});
  rep.a_ok = rep.beta_a == 0;

  const HighestWeight can = resolve({RepKind::can, rank, 0});
  const HighestWeight can_d = resolve({RepKind::can_dual, rank, 0});
  std::vector<HighestWeight> series_b(static_cast<std::size_t>(2 * rank), can);
  rep.beta_b = beta(rank, series_b);
  std::vector<HighestWeight> series_b_dual(static_cast<std::size_t>(2 * rank), can_d);
  rep.b_ok = rep.beta_b == 0 && beta(rank, series_b_dual) == 0;

  rep.c_applicable = rank >= 3;  // Lambda^2(can) is trivial at r = 2
  if (rep.c_applicable) {
    const HighestWeight l2 = resolve({RepKind::ext, rank, 2});
    const HighestWeight l2d = dual(l2);
    const HighestWeight s2 = resolve({RepKind::sym, rank, 2});
    const HighestWeight s2d = dual(s2);
    for (const auto& a : {l2, l2d}) {
      for (const auto& b : {s2, s2d}) {
        rep.c_betas.push_back(beta(rank, {a, b}));
      }
    }
    rep.c_ok = std::all_of(rep.c_betas.begin(), rep.c_betas.end(),
                           [](const Rat& v) { return v == 0; });
  }
  rep.pass = rep.a_ok && rep.b_ok && (!rep.c_applicable || rep.c_ok);
  return rep;
}

}  // namespace sdual
