#include "sdual/markovmut.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

namespace sdual {

MarkovTriple::MarkovTriple(Int x_, Int y_, Int z_)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
  require(x > 0 && y > 0 && z > 0, "MarkovTriple: entries must be positive");
  require(x * x + y * y + z * z == 3 * x * y * z,
          "MarkovTriple: x^2 + y^2 + z^2 = 3xyz fails");
}

bool operator==(const MarkovTriple& a, const MarkovTriple& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

MarkovTriple mutate(const MarkovTriple& t, Slot slot) {
  switch (slot) {
    case Slot::x: return MarkovTriple(3 * t.y * t.z - t.x, t.y, t.z);
    case Slot::y: return MarkovTriple(t.x, 3 * t.x * t.z - t.y, t.z);
    case Slot::z: return MarkovTriple(t.x, t.y, 3 * t.x * t.y - t.z);
  }
  throw InternalError("mutate: unhandled slot");
}

MarkovTriple canonical(const MarkovTriple& t) {
  Int a = t.x, b = t.y, c = t.z;
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  return MarkovTriple(std::move(a), std::move(b), std::move(c));
}

std::vector<MarkovTriple> enumerate_triples(const Int& max_value) {
  std::vector<MarkovTriple> out;
  if (max_value < 1) return out;
  using Key = std::tuple<Int, Int, Int>;
  std::set<Key> seen;
  std::queue<MarkovTriple> frontier;
  frontier.push(MarkovTriple(1, 1, 1));
  seen.emplace(1, 1, 1);
  while (!frontier.empty()) {
    const MarkovTriple t = frontier.front();
    frontier.pop();
    out.push_back(t);
    for (const Slot s : {Slot::x, Slot::y, Slot::z}) {
      const MarkovTriple child = canonical(mutate(t, s));
      if (child.x > max_value) continue;
      if (seen.emplace(child.x, child.y, child.z).second) frontier.push(child);
    }
  }
  std::sort(out.begin(), out.end(), [](const MarkovTriple& a, const MarkovTriple& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  return out;
}

ExceptionalDatum::ExceptionalDatum(long long n_, Int rank_, Int c1_)
    : n(n_), rank(std::move(rank_)), c1(std::move(c1_)) {
  require(rank > 0, "ExceptionalDatum: rank must be positive");
  c2 = exact_div((rank - 1) * c1 * c1 + rank * rank - 1, 2 * rank,
                 "ExceptionalDatum c2 (rigidity)");
  internal_check(c2 >= 0, "ExceptionalDatum: negative c2");
  if (n >= 1) {
    internal_check(rank * rank + c1 * c1 + 1 == 3 * rank * (-c1),
                   "ExceptionalDatum: (rank, -c1, 1) is not a Markov triple");
  }
}

namespace {

std::pair<Int, Int> next_rc(const Int& rank, const Int& c1) {
  return {3 * rank + c1, -rank};
}

std::pair<Int, Int> prev_rc(const Int& rank, const Int& c1) {
  return {-c1, rank + 3 * c1};
}

}  // namespace

ExceptionalDatum exceptional_term(long long n) {
  Int rank = 2, c1 = -1;  // index 1
  for (long long i = 1; i < n; ++i) std::tie(rank, c1) = next_rc(rank, c1);
  for (long long i = 1; i > n; --i) std::tie(rank, c1) = prev_rc(rank, c1);
  return ExceptionalDatum(n, std::move(rank), std::move(c1));
}

std::vector<ExceptionalDatum> exceptional_sequence(long long n_min, long long n_max) {
  require(n_min <= n_max, "exceptional_sequence: empty index range");
  std::vector<ExceptionalDatum> out;
  out.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  ExceptionalDatum cur = exceptional_term(n_min);
  for (long long n = n_min; n <= n_max; ++n) {
    if (n > n_min) {
      const auto [rank, c1] = next_rc(cur.rank, cur.c1);
      cur = ExceptionalDatum(n, rank, c1);
    }
    // Round-trip consistency of the two recurrence directions.
    const auto fwd = next_rc(cur.rank, cur.c1);
    const auto back = prev_rc(fwd.first, fwd.second);
    internal_check(back.first == cur.rank && back.second == cur.c1,
                   "exceptional_sequence: prev(next(E)) != E");
    out.push_back(cur);
  }
  return out;
}

MutationTripleReport verify_mutation_triple(long long n) {
  const ExceptionalDatum before = exceptional_term(n - 1);
  const ExceptionalDatum at = exceptional_term(n);
  const ExceptionalDatum after = exceptional_term(n + 1);
  MutationTripleReport rep;
  rep.n = n;
  rep.h = exact_div(before.rank + after.rank, at.rank, "verify_mutation_triple h");
  rep.rank_ok = rep.h == 3;
  rep.c1_ok = rep.h * at.c1 == before.c1 + after.c1;
  rep.pass = rep.rank_ok && rep.c1_ok;
  return rep;
}

}  // namespace sdual
