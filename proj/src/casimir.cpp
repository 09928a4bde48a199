#include "sdual/casimir.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace sdual {

namespace {

void validate_named(const NamedRep& nr) {
  require(nr.rank >= 2, "named rep: rank must be at least 2");
  switch (nr.kind) {
    case RepKind::ext:
      require(nr.k >= 1 && nr.k <= Int(static_cast<long long>(nr.rank - 1)),
              "ext(k): requires 1 <= k <= r-1");
      break;
    case RepKind::sym:
    case RepKind::sym_dual:
      require(nr.k >= 1, "sym(k): requires k >= 1");
      break;
    default:
      break;
  }
}

Int int128_to_int(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  Int out = Int(static_cast<std::uint64_t>(u >> 64));
  out <<= 64;
  out |= Int(static_cast<std::uint64_t>(u));
  return neg ? -out : out;
}

}  // namespace

HighestWeight::HighestWeight(Eigen::Index rank, IntVec ks) : ks_(std::move(ks)) {
  require(rank >= 2, "HighestWeight: rank must be at least 2");
  require(ks_.size() == rank - 1, "HighestWeight: expected r-1 coefficients");
  for (Eigen::Index i = 0; i < ks_.size(); ++i) {
    require(ks_(i) >= 0, "HighestWeight: coefficients must be nonnegative");
  }
}

HighestWeight::HighestWeight(Eigen::Index rank, const std::vector<long long>& ks)
    : HighestWeight(rank, [&] {
        IntVec v(static_cast<Eigen::Index>(ks.size()));
        for (std::size_t i = 0; i < ks.size(); ++i) v(static_cast<Eigen::Index>(i)) = ks[i];
        return v;
      }()) {}

HighestWeight HighestWeight::trivial(Eigen::Index rank) {
  require(rank >= 2, "HighestWeight: rank must be at least 2");
  return HighestWeight(rank, IntVec(IntVec::Zero(rank - 1)));
}

bool HighestWeight::is_trivial() const {
  for (Eigen::Index i = 0; i < ks_.size(); ++i) {
    if (ks_(i) != 0) return false;
  }
  return true;
}

WeightVector HighestWeight::weight() const {
  const Eigen::Index r = rank();
  WeightVector w(r);
  Int acc = 0;
  w(r - 1) = 0;
  for (Eigen::Index t = r - 2; t >= 0; --t) {
    acc += ks_(t);
    w(t) = Rat(acc);
  }
  return w;
}

bool operator==(const HighestWeight& a, const HighestWeight& b) {
  if (a.ks_.size() != b.ks_.size()) return false;
  for (Eigen::Index i = 0; i < a.ks_.size(); ++i) {
    if (a.ks_(i) != b.ks_(i)) return false;
  }
  return true;
}

bool operator!=(const HighestWeight& a, const HighestWeight& b) { return !(a == b); }

bool lex_less(const HighestWeight& a, const HighestWeight& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (Eigen::Index i = 0; i < a.ks().size(); ++i) {
    if (a.ks()(i) != b.ks()(i)) return a.ks()(i) < b.ks()(i);
  }
  return false;
}

HighestWeight resolve(const NamedRep& nr) {
  validate_named(nr);
  const Eigen::Index r = nr.rank;
  IntVec ks = IntVec::Zero(r - 1);
  switch (nr.kind) {
    case RepKind::can: ks(0) = 1; break;
    case RepKind::can_dual: ks(r - 2) = 1; break;
    case RepKind::ext: ks(static_cast<Eigen::Index>(nr.k.convert_to<long long>()) - 1) = 1; break;
    case RepKind::sym: ks(0) = nr.k; break;
    case RepKind::sym_dual: ks(r - 2) = nr.k; break;
    case RepKind::ad:
      ks(0) += 1;
      ks(r - 2) += 1;  // r = 2 collapses to ks = (2)
      break;
  }
  return HighestWeight(r, std::move(ks));
}

NamedRep parse_named_rep(const std::string& text, Eigen::Index rank) {
  NamedRep nr{RepKind::can, rank, 0};
  std::string head = text;
  std::string arg;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    head = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  if (head == "can" && arg.empty()) {
    nr.kind = RepKind::can;
  } else if (head == "can*" && arg.empty()) {
    nr.kind = RepKind::can_dual;
  } else if (head == "ad" && arg.empty()) {
    nr.kind = RepKind::ad;
  } else if (head == "ext" || head == "sym" || head == "sym*") {
    require(!arg.empty(), "named rep '" + head + "' needs a parameter, e.g. " + head + ":2");
    try {
      nr.k = Int(arg);
    } catch (const std::exception&) {
      throw DomainError("named rep parameter is not an integer: " + arg);
    }
    nr.kind = head == "ext" ? RepKind::ext : (head == "sym" ? RepKind::sym : RepKind::sym_dual);
  } else {
    throw DomainError("unknown named rep '" + text +
                      "' (expected can, can*, ext:k, sym:k, sym*:k, ad)");
  }
  validate_named(nr);
  return nr;
}

std::optional<std::string> rep_name(const HighestWeight& hw) {
  const Eigen::Index r = hw.rank();
  const IntVec& ks = hw.ks();
  Eigen::Index nonzero = 0, pos = -1;
  for (Eigen::Index i = 0; i < ks.size(); ++i) {
    if (ks(i) != 0) {
      ++nonzero;
      pos = i;
    }
  }
  if (nonzero == 0) return std::nullopt;
  if (r == 2) {
    if (ks(0) == 1) return "can";
    if (ks(0) == 2) return "ad";
    return "sym:" + ks(0).str();
  }
  if (nonzero == 2 && ks(0) == 1 && ks(r - 2) == 1) return "ad";
  if (nonzero != 1) return std::nullopt;
  if (pos == 0) return ks(0) == 1 ? "can" : "sym:" + ks(0).str();
  if (pos == r - 2) return ks(pos) == 1 ? "can*" : "sym*:" + ks(pos).str();
  if (ks(pos) == 1) return "ext:" + std::to_string(pos + 1);
  return std::nullopt;
}

namespace {

// Weyl quotient with every factor below the threshold: accumulate prime
// exponents of numerator minus denominator and rebuild only the (small)
// quotient. Avoids the multi-hundred-kilobit intermediate products the
// plain product form creates at large rank.
Int dim_weyl_factored(const std::vector<long long>& l) {
  const std::size_t r = l.size();
  const long long maxv = l[0];  // l is strictly decreasing with l[r-1] = 0
  std::vector<std::int32_t> spf(static_cast<std::size_t>(maxv) + 1, 0);
  for (long long p = 2; p <= maxv; ++p) {
    if (spf[static_cast<std::size_t>(p)] != 0) continue;
    for (long long q = p; q <= maxv; q += p) {
      if (spf[static_cast<std::size_t>(q)] == 0) spf[static_cast<std::size_t>(q)] = static_cast<std::int32_t>(p);
    }
  }
  // The r(r-1)/2 factors take at most maxv distinct values, so histogram
  // them first and factor each distinct value once.
  std::vector<std::int64_t> counts(static_cast<std::size_t>(maxv) + 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) ++counts[static_cast<std::size_t>(l[i] - l[j])];
  }
  for (std::size_t gap = 1; gap < r; ++gap) counts[gap] -= static_cast<std::int64_t>(r - gap);
  std::vector<std::int64_t> expo(static_cast<std::size_t>(maxv) + 1, 0);
  for (long long v = 2; v <= maxv; ++v) {
    const std::int64_t c = counts[static_cast<std::size_t>(v)];
    if (c == 0) continue;
    long long w = v;
    while (w > 1) {
      const long long p = spf[static_cast<std::size_t>(w)];
      std::int64_t e = 0;
      while (w % p == 0) {
        w /= p;
        ++e;
      }
      expo[static_cast<std::size_t>(p)] += c * e;
    }
  }
  Int result = 1;
  for (long long p = 2; p <= maxv; ++p) {
    const std::int64_t e = expo[static_cast<std::size_t>(p)];
    internal_check(e >= 0, "dim_weyl: denominator prime does not cancel");
    if (e > 0) result *= boost::multiprecision::pow(Int(p), static_cast<unsigned>(e));
  }
  return result;
}

}  // namespace

Int dim_weyl(const HighestWeight& hw) {
  const Eigen::Index r = hw.rank();
  std::vector<Int> l(static_cast<std::size_t>(r));
  {
    Int acc = 0;
    l[static_cast<std::size_t>(r - 1)] = 0;
    for (Eigen::Index t = r - 2; t >= 0; --t) {
      acc += hw.ks()(t);
      l[static_cast<std::size_t>(t)] = acc + (r - 1 - t);
    }
  }
  constexpr long long kFactorSieveMax = 1000000;
  if (l[0] <= kFactorSieveMax) {
    std::vector<long long> lv(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < lv.size(); ++i) lv[i] = l[i].convert_to<long long>();
    return dim_weyl_factored(lv);
  }
  std::vector<Int> num, den;
  num.reserve(static_cast<std::size_t>(r * (r - 1) / 2));
  den.reserve(num.capacity());
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i + 1; j < r; ++j) {
      num.push_back(l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)]);
      den.push_back(Int(static_cast<long long>(j - i)));
    }
  }
  return exact_div(balanced_product(std::move(num)), balanced_product(std::move(den)),
                   "dim_weyl");
}

Rat casimir_pairing(const HighestWeight& hw) {
  const Eigen::Index r = hw.rank();
  const Int rr = static_cast<long long>(r);
  // Integer-sum evaluation of both routes; coordinates are integers.
  std::vector<Int> lam(static_cast<std::size_t>(r), 0);
  {
    Int acc = 0;
    for (Eigen::Index t = r - 2; t >= 0; --t) {
      acc += hw.ks()(t);
      lam[static_cast<std::size_t>(t)] = acc;
    }
  }
  Int dot = 0, s_lam = 0, norm_lamrho = 0, norm_rho = 0;
  for (Eigen::Index t = 0; t < r; ++t) {
    const Int& x = lam[static_cast<std::size_t>(t)];
    const Int rho_t = static_cast<long long>(r - 1 - t);
    dot += x * (x + 2 * rho_t);
    s_lam += x;
    norm_lamrho += (x + rho_t) * (x + rho_t);
    norm_rho += rho_t * rho_t;
  }
  const Int s_rho = rr * (rr - 1) / 2;
  const Rat direct = Rat(dot) - Rat(s_lam) * Rat(s_lam + 2 * s_rho) / Rat(rr);
  const Rat via_norms = Rat(norm_lamrho) - Rat(s_lam + s_rho) * Rat(s_lam + s_rho) / Rat(rr) -
                        (Rat(norm_rho) - Rat(s_rho) * Rat(s_rho) / Rat(rr));
  internal_check(direct == via_norms,
                 "casimir_pairing: the two evaluation routes disagree");
  if (r <= 32) {
    // Cross-check against the generic trace-form pairing at small rank.
    const WeightVector lamv = hw.weight();
    const WeightVector rv = rho(r);
    const WeightVector lam2rho = lamv + Rat(2) * rv;
    internal_check(direct == pairing(lamv, lam2rho),
                   "casimir_pairing: disagrees with the trace-form pairing");
  }
  return direct;
}

Rat c2(const HighestWeight& hw) {
  if (hw.is_trivial()) return 0;
  const Eigen::Index r = hw.rank();
  return casimir_pairing(hw) * Rat(dim_weyl(hw)) /
         Rat(static_cast<long long>(r * r - 1));
}

Rat c2_closed_form(const NamedRep& nr) {
  validate_named(nr);
  const Int r = static_cast<long long>(nr.rank);
  switch (nr.kind) {
    case RepKind::can:
    case RepKind::can_dual:
      return 1;
    case RepKind::ext:
      return Rat(binomial(r - 2, nr.k - 1));
    case RepKind::sym:
    case RepKind::sym_dual:
      return Rat(binomial(r + nr.k, nr.k - 1));
    case RepKind::ad:
      return Rat(2 * r);
  }
  throw InternalError("c2_closed_form: unhandled kind");
}

HighestWeight dual(const HighestWeight& hw) {
  return HighestWeight(hw.rank(), IntVec(hw.ks().reverse()));
}

namespace {

struct DominantEntry {
  std::vector<std::int64_t> nu;  // epsilon coords, nonincreasing
  std::int64_t mult;
};

// Number of distinct coordinate permutations of a nonincreasing vector.
Int distinct_permutations(const std::vector<std::int64_t>& v) {
  Int perms = 1;
  for (std::size_t i = 1; i <= v.size(); ++i) perms *= static_cast<long long>(i);
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    Int run = 1;
    for (std::size_t t = 1; t <= j - i; ++t) run *= static_cast<long long>(t);
    perms = exact_div(perms, run, "distinct_permutations");
    i = j;
  }
  return perms;
}

// Freudenthal recursion on the dense box of root-lattice offsets from lambda.
// Cells are indexed by the coordinates c of lambda - mu in the simple-root
// basis, 0 <= c_i <= cmax_i, where cmax encodes the lowest weight. Cells are
// processed in increasing offset height (= decreasing weight height), ties in
// lexicographic digit order. Per positive root alpha a running string sum
//   S_alpha(mu) = sum_{j>=1} m(mu + j alpha) (mu + j alpha; alpha)
// is maintained via S_alpha(mu) = S_alpha(mu+alpha) + m(mu+alpha)(mu+alpha; alpha),
// so each cell costs O(roots) instead of a full string walk.
std::vector<DominantEntry> freudenthal_dominant(const HighestWeight& hw, long long cap) {
  require(cap >= 1, "multiplicity cap must be positive");
  require(cap <= kMaxMultiplicityCap,
          "multiplicity cap above supported maximum " + std::to_string(kMaxMultiplicityCap));
  const Int dim = dim_weyl(hw);
  if (dim > cap) {
    throw ResourceError("weight system of dimension " + dim.str() +
                        " exceeds the multiplicity cap " + std::to_string(cap) +
                        " (override with SDUAL_MULT_CAP or --mult-cap)");
  }
  const int r = static_cast<int>(hw.rank());

  // dim <= cap bounds each coefficient, so epsilon coordinates fit int64.
  std::vector<std::int64_t> lam(static_cast<std::size_t>(r), 0);
  {
    Int acc = 0;
    for (int t = r - 2; t >= 0; --t) {
      acc += hw.ks()(t);
      lam[static_cast<std::size_t>(t)] = to_int64(acc, "freudenthal lambda");
    }
  }

  const int nd = r - 1;  // digits = simple-root coordinates
  std::vector<std::int64_t> cmax(static_cast<std::size_t>(nd), 0);
  {
    std::int64_t acc = 0;
    for (int t = 0; t < nd; ++t) {
      acc += lam[static_cast<std::size_t>(t)] - lam[static_cast<std::size_t>(r - 1 - t)];
      cmax[static_cast<std::size_t>(t)] = acc;
    }
  }

  const int nroots = r * (r - 1) / 2;
  std::size_t box = 1;
  for (int t = 0; t < nd; ++t) {
    const auto width = static_cast<std::size_t>(cmax[static_cast<std::size_t>(t)]) + 1;
    if (box > (static_cast<std::size_t>(1) << 62) / width) {
      throw ResourceError("weight system box exceeds the supported size");
    }
    box *= width;
  }
  // Memory guard: mult + per-root string sums + height buckets, 8 bytes each.
  constexpr std::size_t kMaxCells = 32u * 1000 * 1000;
  if (box > kMaxCells / static_cast<std::size_t>(nroots + 3)) {
    throw ResourceError("weight system box of " + std::to_string(box) +
                        " cells x " + std::to_string(nroots) +
                        " roots exceeds the memory guard");
  }

  std::vector<std::int64_t> stride(static_cast<std::size_t>(nd), 1);
  for (int t = nd - 2; t >= 0; --t) {
    stride[static_cast<std::size_t>(t)] =
        stride[static_cast<std::size_t>(t + 1)] * (cmax[static_cast<std::size_t>(t + 1)] + 1);
  }

  struct Root {
    int i, j;            // alpha = eps_i - eps_j
    std::int64_t delta;  // cell index offset of +alpha
  };
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(nroots));
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      std::int64_t delta = 0;
      for (int t = i; t < j; ++t) delta += stride[static_cast<std::size_t>(t)];
      roots.push_back({i, j, delta});
    }
  }

  // Height-bucket processing order (ascending sum of digits = descending
  // weight height); within a bucket ascending cell index = lexicographic.
  std::vector<std::int64_t> height(box, 0);
  std::int64_t max_h = 0;
  for (int t = 0; t < nd; ++t) max_h += cmax[static_cast<std::size_t>(t)];
  {
    // height of cell = sum of its digits; fill incrementally per digit.
    for (std::size_t cell = 0; cell < box; ++cell) {
      std::int64_t h = 0;
      std::size_t rest = cell;
      for (int t = 0; t < nd; ++t) {
        const std::int64_t w = cmax[static_cast<std::size_t>(t)] + 1;
        h += static_cast<std::int64_t>(rest / static_cast<std::size_t>(stride[static_cast<std::size_t>(t)])) % w;
        rest %= static_cast<std::size_t>(stride[static_cast<std::size_t>(t)]);
      }
      height[cell] = h;
    }
  }
  std::vector<std::size_t> bucket_start(static_cast<std::size_t>(max_h) + 2, 0);
  for (std::size_t cell = 0; cell < box; ++cell) ++bucket_start[static_cast<std::size_t>(height[cell]) + 1];
  for (std::size_t h = 1; h < bucket_start.size(); ++h) bucket_start[h] += bucket_start[h - 1];
  std::vector<std::size_t> order(box);
  {
    std::vector<std::size_t> fill = bucket_start;
    for (std::size_t cell = 0; cell < box; ++cell) order[fill[static_cast<std::size_t>(height[cell])]++] = cell;
  }

  std::vector<std::int64_t> mult(box, 0);
  std::vector<std::vector<std::int64_t>> strsum(
      static_cast<std::size_t>(nroots), std::vector<std::int64_t>(box, 0));

  const std::int64_t lamrho_norm = [&] {
    std::int64_t s = 0;
    for (int t = 0; t < r; ++t) {
      const std::int64_t v = lam[static_cast<std::size_t>(t)] + (r - 1 - t);
      s += v * v;
    }
    return s;
  }();

  // Reused per-cell buffers.
  std::vector<std::int64_t> d(static_cast<std::size_t>(nd));
  std::vector<std::int64_t> nu(static_cast<std::size_t>(r));
  std::vector<std::int64_t> up(static_cast<std::size_t>(r));
  std::vector<std::int64_t> cpos(static_cast<std::size_t>(nd));

  // Multiplicity of the weight with epsilon coords w (any order), or 0.
  const auto mult_of = [&](std::vector<std::int64_t>& w) -> std::int64_t {
    std::sort(w.begin(), w.end(), std::greater<>());
    std::int64_t acc = 0;
    std::int64_t cell = 0;
    for (int t = 0; t < nd; ++t) {
      acc += lam[static_cast<std::size_t>(t)] - w[static_cast<std::size_t>(t)];
      if (acc < 0 || acc > cmax[static_cast<std::size_t>(t)]) return 0;
      cell += acc * stride[static_cast<std::size_t>(t)];
    }
    return mult[static_cast<std::size_t>(cell)];
  };

  std::vector<DominantEntry> dominant;
  for (const std::size_t cell : order) {
    {
      std::size_t rest = cell;
      for (int t = 0; t < nd; ++t) {
        d[static_cast<std::size_t>(t)] =
            static_cast<std::int64_t>(rest / static_cast<std::size_t>(stride[static_cast<std::size_t>(t)]));
        rest %= static_cast<std::size_t>(stride[static_cast<std::size_t>(t)]);
      }
    }
    for (int t = 0; t < r; ++t) {
      const std::int64_t dt = t < nd ? d[static_cast<std::size_t>(t)] : 0;
      const std::int64_t dprev = t > 0 ? d[static_cast<std::size_t>(t - 1)] : 0;
      nu[static_cast<std::size_t>(t)] = lam[static_cast<std::size_t>(t)] - dt + dprev;
    }

    for (int ridx = 0; ridx < nroots; ++ridx) {
      const Root& rt = roots[static_cast<std::size_t>(ridx)];
      bool inside = true;
      for (int t = rt.i; t < rt.j; ++t) {
        if (d[static_cast<std::size_t>(t)] < 1) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;  // mu + alpha outside the box: string ends here
      const std::size_t prev = cell - static_cast<std::size_t>(rt.delta);
      for (int t = 0; t < r; ++t) up[static_cast<std::size_t>(t)] = nu[static_cast<std::size_t>(t)];
      up[static_cast<std::size_t>(rt.i)] += 1;
      up[static_cast<std::size_t>(rt.j)] -= 1;
      const std::int64_t pair_up =
          up[static_cast<std::size_t>(rt.i)] - up[static_cast<std::size_t>(rt.j)];
      strsum[static_cast<std::size_t>(ridx)][cell] =
          strsum[static_cast<std::size_t>(ridx)][prev] + mult_of(up) * pair_up;
    }

    bool dom = true;
    for (int t = 0; t + 1 < r; ++t) {
      if (nu[static_cast<std::size_t>(t)] < nu[static_cast<std::size_t>(t + 1)]) {
        dom = false;
        break;
      }
    }
    if (!dom) continue;

    std::int64_t m;
    if (cell == 0) {
      m = 1;
    } else {
      __int128 num = 0;
      for (int ridx = 0; ridx < nroots; ++ridx) num += strsum[static_cast<std::size_t>(ridx)][cell];
      num *= 2;
      std::int64_t nurho_norm = 0;
      for (int t = 0; t < r; ++t) {
        const std::int64_t v = nu[static_cast<std::size_t>(t)] + (r - 1 - t);
        nurho_norm += v * v;
      }
      const std::int64_t den = lamrho_norm - nurho_norm;
      internal_check(den > 0, "freudenthal: nonpositive denominator");
      internal_check(num % den == 0, "freudenthal: non-exact multiplicity division");
      const __int128 m128 = num / den;
      internal_check(m128 >= 1 && m128 <= cap, "freudenthal: multiplicity out of range");
      m = static_cast<std::int64_t>(m128);
    }
    mult[cell] = m;
    dominant.push_back({nu, m});
  }

  // Dimension conservation across the full Weyl-orbit expansion.
  Int total = 0;
  for (const auto& e : dominant) total += Int(e.mult) * distinct_permutations(e.nu);
  internal_check(total == dim, "freudenthal: weight multiplicities do not sum to the dimension");

  return dominant;
}

}  // namespace

Int WeightSystem::multiplicity(const WeightVector& w) const {
  const WeightVector key = normalized(w);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, const WeightVector& k) {
                               return weight_less(e.first, k);
                             });
  if (it == entries_.end() || !weights_equal(it->first, key)) return 0;
  return it->second;
}

Int WeightSystem::total() const {
  Int t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

WeightSystem weight_multiplicities(const HighestWeight& hw, long long cap) {
  const auto dominant = freudenthal_dominant(hw, cap);
  const Eigen::Index r = hw.rank();
  std::vector<WeightSystem::Entry> entries;
  for (const auto& e : dominant) {
    std::vector<std::int64_t> p = e.nu;
    std::sort(p.begin(), p.end());
    do {
      WeightVector w(r);
      const std::int64_t last = p[static_cast<std::size_t>(r - 1)];
      for (Eigen::Index t = 0; t < r; ++t) w(t) = Rat(p[static_cast<std::size_t>(t)] - last);
      entries.emplace_back(std::move(w), Int(e.mult));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::sort(entries.begin(), entries.end(),
            [](const WeightSystem::Entry& a, const WeightSystem::Entry& b) {
              return weight_less(a.first, b.first);
            });
  return WeightSystem(std::move(entries));
}

Rat c2_trace_oracle(const HighestWeight& hw, long long cap) {
  const auto dominant = freudenthal_dominant(hw, cap);
  __int128 acc = 0;
  for (const auto& e : dominant) {
    std::vector<std::int64_t> p = e.nu;
    std::sort(p.begin(), p.end());
    do {
      const std::int64_t h1 = p[0] - p[1];
      acc += static_cast<__int128>(e.mult) * h1 * h1;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return Rat(int128_to_int(acc)) / Rat(2);
}

}  // namespace sdual
