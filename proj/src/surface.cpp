#include "sdual/surface.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "sdual/errors.hpp"

namespace sdual {

namespace {

std::shared_ptr<const SurfaceModel::Data> make_data(SurfaceKind kind, int m) {
  auto d = std::make_shared<SurfaceModel::Data>();
  d->kind = kind;
  d->m = m;
  switch (kind) {
    case SurfaceKind::P2: {
      d->gram = IntMat::Zero(1, 1);
      d->gram(0, 0) = 1;
      d->canonical = IntVec::Zero(1);
      d->canonical(0) = -3;
      break;
    }
    case SurfaceKind::Quadric: {
      d->gram = IntMat::Zero(2, 2);
      d->gram(0, 1) = 1;
      d->gram(1, 0) = 1;
      d->canonical = IntVec::Zero(2);
      d->canonical(0) = -2;
      d->canonical(1) = -2;
      break;
    }
    case SurfaceKind::BlownPlane: {
      d->gram = IntMat::Zero(m + 1, m + 1);
      d->gram(0, 0) = 1;
      for (int i = 1; i <= m; ++i) d->gram(i, i) = -1;
      d->canonical = IntVec::Zero(m + 1);
      d->canonical(0) = -3;
      for (int i = 1; i <= m; ++i) d->canonical(i) = 1;
      break;
    }
  }
  return d;
}

}  // namespace

SurfaceModel SurfaceModel::p2() {
  static const auto data = make_data(SurfaceKind::P2, 0);
  return SurfaceModel(data);
}

SurfaceModel SurfaceModel::quadric() {
  static const auto data = make_data(SurfaceKind::Quadric, 0);
  return SurfaceModel(data);
}

SurfaceModel SurfaceModel::blown_plane(int m) {
  require(m >= 1 && m <= 8, "blown_plane: need 1 <= m <= 8, got m = " + std::to_string(m));
  static const std::shared_ptr<const Data> cache[9] = {
      nullptr,
      make_data(SurfaceKind::BlownPlane, 1), make_data(SurfaceKind::BlownPlane, 2),
      make_data(SurfaceKind::BlownPlane, 3), make_data(SurfaceKind::BlownPlane, 4),
      make_data(SurfaceKind::BlownPlane, 5), make_data(SurfaceKind::BlownPlane, 6),
      make_data(SurfaceKind::BlownPlane, 7), make_data(SurfaceKind::BlownPlane, 8)};
  return SurfaceModel(cache[m]);
}

DivisorClass SurfaceModel::canonical_class() const {
  return DivisorClass(*this, d_->canonical);
}

Int SurfaceModel::k_squared() const {
  switch (d_->kind) {
    case SurfaceKind::P2: return 9;
    case SurfaceKind::Quadric: return 8;
    case SurfaceKind::BlownPlane: return 9 - d_->m;
  }
  throw InternalError("k_squared: unhandled surface kind");
}

std::string SurfaceModel::name() const {
  switch (d_->kind) {
    case SurfaceKind::P2: return "P2";
    case SurfaceKind::Quadric: return "P1xP1";
    case SurfaceKind::BlownPlane: return "X" + std::to_string(d_->m);
  }
  throw InternalError("name: unhandled surface kind");
}

DivisorClass SurfaceModel::divisor(IntVec coords) const {
  return DivisorClass(*this, std::move(coords));
}

DivisorClass SurfaceModel::divisor(const std::vector<long long>& coords) const {
  IntVec v(static_cast<Eigen::Index>(coords.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = coords[static_cast<std::size_t>(i)];
  return DivisorClass(*this, std::move(v));
}

DivisorClass::DivisorClass(SurfaceModel surface, IntVec coords)
    : surface_(std::move(surface)), coords_(std::move(coords)) {
  if (coords_.size() != surface_.picard_rank())  // message built only on failure
    throw DomainError("divisor: coordinate count " + std::to_string(coords_.size()) +
                      " does not match Picard rank " + std::to_string(surface_.picard_rank()));
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2) {
  require(d1.surface() == d2.surface(), "intersect: divisors live on different surfaces");
  const IntMat& g = d1.surface().gram();
  // Loop rather than a matrix product: bilinear forms over multiprecision
  // scalars stay out of Eigen's product kernels (see numeric.hpp).
  Int acc = 0;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    if (d1.coords()(i) == 0) continue;
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (g(i, j) == 0) continue;
      acc += d1.coords()(i) * g(i, j) * d2.coords()(j);
    }
  }
  return acc;
}

Rat slope(const Int& r, const DivisorClass& c1) {
  require(r > 0, "slope: rank must be positive");
  const Int deg = intersect(c1, c1.surface().canonical_class());
  return Rat(-deg) / Rat(r);
}

namespace {

struct C1Products {
  Int c1c1;
  Int c1k;
};

C1Products products(const DivisorClass& c1) {
  return {intersect(c1, c1), intersect(c1, c1.surface().canonical_class())};
}

}  // namespace

Int h1_dim(const Int& r, const DivisorClass& c1, const Int& k) {
  require(r > 0, "h1_dim: rank must be positive");
  const auto [c1c1, c1k] = products(c1);
  // c1^2 + c1.K is even on every del Pezzo lattice point (adjunction).
  const Int half = exact_div(c1c1 - c1k, 2, "h1_dim: c1.(c1-K) parity");
  return k - half - r;
}

Int moduli_dim(const Int& r, const DivisorClass& c1, const Int& k) {
  require(r > 0, "moduli_dim: rank must be positive");
  const auto [c1c1, c1k] = products(c1);
  (void)c1k;
  return 2 * r * k - (r - 1) * c1c1 - r * r + 1;
}

Int sym2_h1(const Int& r, const DivisorClass& c1, const Int& k) {
  require(r > 0, "sym2_h1: rank must be positive");
  const auto [c1c1, c1k] = products(c1);
  const Int twice = 2 * (r + 2) * k - (r + 3) * c1c1 + (r + 1) * c1k - r * (r + 1);
  return exact_div(twice, 2, "sym2_h1: parity");
}

Int lam2_h1(const Int& r, const DivisorClass& c1, const Int& k) {
  require(r > 0, "lam2_h1: rank must be positive");
  const auto [c1c1, c1k] = products(c1);
  const Int twice = 2 * (r - 2) * k - (r - 1) * c1c1 + (r - 1) * c1k - r * (r - 1);
  return exact_div(twice, 2, "lam2_h1: parity");
}

bool dim_condition_b(const Int& r, const DivisorClass& c1) {
  const auto [c1c1, c1k] = products(c1);
  return c1c1 - r * c1k + r * r + 1 == 0;
}

bool dim_condition_c(const Int& r, const DivisorClass& c1) {
  const auto [c1c1, c1k] = products(c1);
  return 2 * c1c1 - r * c1k + 1 == 0;
}

bool smooth_compactification(const Int& r, const DivisorClass& c1) {
  require(r > 0, "smooth_compactification: rank must be positive");
  const Int c1k = intersect(c1, c1.surface().canonical_class());
  return boost::multiprecision::gcd(r, c1k) == 1;
}

bool slope_window_b(const SurfaceModel& s, const Rat& mu) {
  return Rat(-s.k_squared()) < mu && mu < 0;
}

bool slope_window_c(const SurfaceModel& s, const Rat& mu) {
  return Rat(-s.k_squared()) / 2 < mu && mu < 0;
}

ModuliSpec ModuliSpec::make(const Int& r, const DivisorClass& c1, const Int& k) {
  require(r > 0, "ModuliSpec: rank must be positive");
  ModuliSpec spec{c1.surface(), r, c1, k,
                  slope(r, c1),
                  h1_dim(r, c1, k),
                  moduli_dim(r, c1, k),
                  sym2_h1(r, c1, k),
                  lam2_h1(r, c1, k),
                  false, false, false, false, false};
  spec.window_b = slope_window_b(spec.surface, spec.mu);
  spec.window_c = slope_window_c(spec.surface, spec.mu);
  spec.cond_b = dim_condition_b(r, c1);
  spec.cond_c = dim_condition_c(r, c1);
  spec.smooth = smooth_compactification(r, c1);
  return spec;
}

ObstructionReport obstruction_rank_check(const ModuliSpec& spec) {
  ObstructionReport rep;
  rep.dim_m = spec.dim_m;
  rep.rhs = 2 * spec.r * spec.h1;
  rep.pass = rep.dim_m == rep.rhs;
  rep.k_independent = spec.cond_b;
  // dim M - 2r h1 = c1^2 - r c1.K + r^2 + 1 identically: no k term survives,
  // so passing at any single k is equivalent to the dimension condition.
  internal_check(spec.cond_b == rep.pass,
                 "obstruction_rank_check: rank identity disagrees with dimension condition");
  return rep;
}

}  // namespace sdual
