#include "sdual/dioph.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "sdual/errors.hpp"

namespace sdual {

namespace {

constexpr long long kMaxSearchCells = 1LL << 31;

std::vector<std::pair<long long, long long>> effective_ranges(const SurfaceModel& s,
                                                              const SearchWindow& w) {
  const auto n = static_cast<std::size_t>(s.picard_rank());
  if (!w.coord_ranges.empty()) {
    require(w.coord_ranges.size() == n,
            "search window: coord_ranges size " + std::to_string(w.coord_ranges.size()) +
                " does not match Picard rank " + std::to_string(n));
    return w.coord_ranges;
  }
  const long long bound = 3 * w.r_max;
  return std::vector<std::pair<long long, long long>>(n, {-bound, bound});
}

// Sweeps every (r, coords) cell of the window in (r, lex coords) order.
template <class Fn>
void for_each_lattice_point(const SurfaceModel& s, const SearchWindow& w, Fn&& fn) {
  w.validate();
  const auto ranges = effective_ranges(s, w);
  const auto n = ranges.size();

  Int cells = w.r_max - w.r_min + 1;
  for (const auto& [lo, hi] : ranges) cells *= Int(hi) - Int(lo) + 1;
  if (cells > kMaxSearchCells)
    throw ResourceError("lattice search: window has " + cells.str() + " cells, limit " +
                        std::to_string(kMaxSearchCells));

  std::vector<long long> cur(n);
  IntVec v(static_cast<Eigen::Index>(n));
  for (long long r = w.r_min; r <= w.r_max; ++r) {
    const Int rr(r);
    for (std::size_t i = 0; i < n; ++i) {
      cur[i] = ranges[i].first;
      v(static_cast<Eigen::Index>(i)) = cur[i];
    }
    bool done = false;
    while (!done) {
      fn(rr, v);
      std::size_t i = n;
      for (;;) {  // odometer step, last coordinate fastest
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (cur[i] < ranges[i].second) {
          ++cur[i];
          v(static_cast<Eigen::Index>(i)) = cur[i];
          break;
        }
        cur[i] = ranges[i].first;
        v(static_cast<Eigen::Index>(i)) = cur[i];
      }
    }
  }
}

template <class Cond>
std::vector<ConditionHit> search_condition(const SurfaceModel& s, const SearchWindow& w,
                                           Cond cond) {
  std::vector<ConditionHit> hits;
  for_each_lattice_point(s, w, [&](const Int& r, const IntVec& coords) {
    DivisorClass c1(s, coords);
    if (!cond(r, c1)) return;
    const Rat mu = slope(r, c1);
    hits.push_back({r, c1, mu, slope_window_b(s, mu), slope_window_c(s, mu),
                    smooth_compactification(r, c1)});
  });
  return hits;  // already in (r, lex coords) order by construction
}

Int factorial(long long n) {
  Int f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

// Orderings of the multiset b: m! / prod(run length!).
Int multiset_orderings(const std::vector<Int>& b) {
  Int count = factorial(static_cast<long long>(b.size()));
  std::size_t i = 0;
  while (i < b.size()) {
    std::size_t j = i;
    while (j < b.size() && b[j] == b[i]) ++j;
    count = exact_div(count, factorial(static_cast<long long>(j - i)),
                      "multiset_orderings: run factorial");
    i = j;
  }
  return count;
}

}  // namespace

void SearchWindow::validate() const {
  require(r_min >= 1, "search window: r_min must be >= 1");
  require(r_min <= r_max, "search window: empty rank range");
  for (const auto& [lo, hi] : coord_ranges)
    require(lo <= hi, "search window: empty coordinate range");
  require(m_min >= 1 && m_max <= 8 && m_min <= m_max,
          "search window: m range must sit inside 1..8");
}

std::vector<ConditionHit> search_condition_b(const SurfaceModel& surface,
                                             const SearchWindow& window) {
  return search_condition(surface, window, [](const Int& r, const DivisorClass& c1) {
    return dim_condition_b(r, c1);
  });
}

std::vector<ConditionHit> search_condition_c(const SurfaceModel& surface,
                                             const SearchWindow& window) {
  return search_condition(surface, window, [](const Int& r, const DivisorClass& c1) {
    return dim_condition_c(r, c1);
  });
}

SysSolution::SysSolution(long long m_in, Int r_in, Int A_in, Int a_in, std::vector<Int> b_in)
    : m(m_in), r(std::move(r_in)), A(std::move(A_in)), a(std::move(a_in)), b(std::move(b_in)) {
  require(m >= 1 && m <= 8, "sys solution: m must lie in 1..8");
  require(r >= 3, "sys solution: r must be >= 3");
  require(static_cast<long long>(b.size()) == m, "sys solution: b must have length m");
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    require(b[i] >= b[i + 1], "sys solution: b must be non-increasing");

  const Int rA = r * A;
  require(!is_even(rA), "sys solution: rA must be odd");
  const Int half = exact_div(rA - 1, 2, "sys solution: (rA-1)/2");

  Int sum = 0, sumsq = 0;
  for (const Int& v : b) {
    sum += v;
    sumsq += v * v;
  }
  require(sum + 3 * a + A == 0, "sys solution: linear equation violated");
  require(sumsq == a * a - half, "sys solution: quadratic equation violated");
  require(A > 0 && 2 * A < r * (9 - m), "sys solution: A outside its open interval");

  vector_count = multiset_orderings(b);
}

bool operator==(const SysSolution& s1, const SysSolution& s2) {
  return s1.m == s2.m && s1.r == s2.r && s1.A == s2.A && s1.a == s2.a && s1.b == s2.b;
}

namespace {

// Canonical non-increasing b with prescribed sum T and sum of squares S;
// every partial choice is cut by the exact Cauchy-Schwarz necessity
// (T')^2 <= n' S' on the remainder, which never removes a solution.
void enumerate_b(std::size_t idx, std::size_t mlen, const Int& T, const Int& S, const Int& upper,
                 std::vector<Int>& buf, const std::function<void(const std::vector<Int>&)>& emit) {
  if (idx == mlen) {
    if (T == 0 && S == 0) emit(buf);
    return;
  }
  if (S < 0) return;
  const Int root = isqrt_floor(S);
  const long long n = static_cast<long long>(mlen - idx);
  Int vmax = upper < root ? upper : root;
  const Int vmin_sum = rat_ceil(Rat(T) / Rat(n));  // need n values <= v summing to T
  Int vmin = -root;
  if (vmin_sum > vmin) vmin = vmin_sum;
  for (Int v = vmax; v >= vmin; --v) {
    const Int S2 = S - v * v;
    if (S2 < 0) continue;
    const Int T2 = T - v;
    if (n > 1 && T2 * T2 > (n - 1) * S2) continue;
    buf[idx] = v;
    enumerate_b(idx + 1, mlen, T2, S2, v, buf, emit);
  }
}

}  // namespace

std::vector<SysSolution> search_sys(long long m_min, long long m_max, long long r_min,
                                    long long r_max, bool interval_pruning) {
  require(1 <= m_min && m_min <= m_max && m_max <= 8, "search_sys: m range must sit inside 1..8");
  require(3 <= r_min && r_min <= r_max, "search_sys: need 3 <= r_min <= r_max");

  std::vector<SysSolution> out;
  for (long long m = m_min; m <= m_max; ++m) {
    for (long long rl = r_min; rl <= r_max; ++rl) {
      const Int r(rl);
      for (Int A = 1; 2 * A < r * (9 - m); ++A) {
        const Int rA = r * A;
        if (is_even(rA)) continue;  // (rA-1)/2 integrality is a filter, not an error
        if (interval_pruning) {
          const IntervalReport rep = interval_argument(r, A);
          if (Rat(m) < rep.left || !(Rat(m) < rep.right)) continue;
        }
        const Int half = exact_div(rA - 1, 2, "search_sys: (rA-1)/2");
        const Int c9 = 9 - m;
        // Real-a feasibility: (9-m)a^2 + 6A a + A^2 + m(rA-1)/2 <= 0.
        const Int D = 36 * A * A - 4 * c9 * (A * A + m * half);
        if (D < 0) continue;
        const Int sq = isqrt_floor(D);
        const Int num_lo = -6 * A - sq;
        const Int num_hi = -6 * A + sq;
        const Int den = 2 * c9;
        const Int a_lo = rat_floor(Rat(num_lo) / Rat(den)) - 1;
        const Int a_hi = rat_ceil(Rat(num_hi) / Rat(den)) + 1;
        for (Int a = a_lo; a <= a_hi; ++a) {
          if (c9 * a * a + 6 * A * a + A * A + m * half > 0) continue;  // exact filter
          const Int S = a * a - half;
          if (S < 0) continue;
          const Int T = -(3 * a + A);
          std::vector<Int> buf(static_cast<std::size_t>(m));
          enumerate_b(0, static_cast<std::size_t>(m), T, S, isqrt_floor(S), buf,
                      [&](const std::vector<Int>& b) { out.emplace_back(m, r, A, a, b); });
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const SysSolution& s1, const SysSolution& s2) {
    return std::tie(s1.m, s1.r, s1.A, s1.a, s1.b) < std::tie(s2.m, s2.r, s2.A, s2.a, s2.b);
  });
  return out;
}

IntervalReport interval_argument(const Int& r, const Int& A) {
  require(r >= 3, "interval: r must be >= 3");
  require(A >= 1, "interval: A must be >= 1");
  require(r * A > 1, "interval: rA must exceed 1");

  IntervalReport rep;
  rep.r = r;
  rep.A = A;
  const Int rA1 = r * A - 1;
  const Int twoA2 = 2 * A * A;
  rep.left = Rat(9) - Rat(twoA2) / Rat(rA1);
  rep.right = Rat(9) - Rat(2 * A) / Rat(r);
  rep.length = rep.right - rep.left;
  const Int lden = Int(r * rA1);
  internal_check(rep.length == Rat(2 * A) / Rat(lden), "interval: length identity 2A/(r(rA-1))");
  rep.length_bound = Rat(2) / Rat(Int(r * (r - 1)));
  rep.bound_ok = rep.length <= rep.length_bound;
  for (int mm = 1; mm <= 8; ++mm)
    if (!(Rat(mm) < rep.left) && Rat(mm) < rep.right) rep.integer_ms.push_back(mm);
  rep.contains_integer = !rep.integer_ms.empty();
  return rep;
}

}  // namespace sdual
