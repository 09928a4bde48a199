#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sdual/numeric.hpp"

namespace sdual {

enum class SurfaceKind { P2, Quadric, BlownPlane };

class DivisorClass;

/// Del Pezzo Picard-lattice model: basis, intersection form, canonical class.
///   P2:            rank 1, gram (1), K = -3 H
///   Quadric:       rank 2, gram ((0,1),(1,0)), K = (-2,-2)
///   BlownPlane(m): rank m+1, gram diag(1,-1,...,-1), K = (-3,1,...,1),
///                  1 <= m <= 8, basis (l0, l1, ..., lm).
/// Immutable and cheap to copy (shared payload); equality is structural.
class SurfaceModel {
 public:
  static SurfaceModel p2();
  static SurfaceModel quadric();
  static SurfaceModel blown_plane(int m);

  SurfaceKind kind() const { return d_->kind; }
  int blown_points() const { return d_->m; }
  Eigen::Index picard_rank() const { return d_->gram.rows(); }
  const IntMat& gram() const { return d_->gram; }
  DivisorClass canonical_class() const;
  Int k_squared() const;  // 9, 8, 9 - m: positive on every model here
  std::string name() const;

  DivisorClass divisor(IntVec coords) const;
  DivisorClass divisor(const std::vector<long long>& coords) const;

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
    return a.d_->kind == b.d_->kind && a.d_->m == b.d_->m;
  }

  struct Data {  // shared immutable payload; public only for the factories
    SurfaceKind kind;
    int m;
    IntMat gram;
    IntVec canonical;
  };

 private:
  explicit SurfaceModel(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Integer divisor class in the Picard lattice of its surface.
class DivisorClass {
 public:
  DivisorClass(SurfaceModel surface, IntVec coords);
  const SurfaceModel& surface() const { return surface_; }
  const IntVec& coords() const { return coords_; }

 private:
  SurfaceModel surface_;
  IntVec coords_;
};

/// Intersection number d1 . d2 through the Gram form. Same surface required.
Int intersect(const DivisorClass& d1, const DivisorClass& d2);

/// Slope mu = c1 . (-K) / r.
Rat slope(const Int& r, const DivisorClass& c1);

/// Riemann-Roch value for H^1(E): k - (1/2) c1 . (c1 - K) - r.
/// The half-product is an integer on every lattice point (adjunction parity);
/// this is asserted, never rounded. Validity as an actual H^1 dimension
/// additionally needs the slope window -K^2 < mu < 0 (see ModuliSpec flags).
Int h1_dim(const Int& r, const DivisorClass& c1, const Int& k);

/// Expected moduli dimension 2rk - (r-1) c1^2 - r^2 + 1.
Int moduli_dim(const Int& r, const DivisorClass& c1, const Int& k);

/// Riemann-Roch values for H^1 of the symmetric and exterior squares:
///   sym2: (r+2)k - (r+3)/2 c1^2 + (r+1)/2 c1.K - r(r+1)/2
///   lam2: (r-2)k - (r-1)/2 c1^2 + (r-1)/2 c1.K - r(r-1)/2
/// Exact integers on every lattice point (asserted). Validity as dimensions
/// needs r >= 3 and the window -K^2/2 < mu < 0.
Int sym2_h1(const Int& r, const DivisorClass& c1, const Int& k);
Int lam2_h1(const Int& r, const DivisorClass& c1, const Int& k);

/// Dimension condition of the 2r-copies series: c1^2 - r c1.K + r^2 + 1 = 0.
bool dim_condition_b(const Int& r, const DivisorClass& c1);

/// Dimension condition of the square series: 2 c1^2 - r c1.K + 1 = 0.
bool dim_condition_c(const Int& r, const DivisorClass& c1);

/// gcd(r, c1.K) = 1: every semistable sheaf with these invariants is stable,
/// so the compactified moduli space is smooth.
bool smooth_compactification(const Int& r, const DivisorClass& c1);

/// Slope windows: -K^2 < mu < 0 and -K^2/2 < mu < 0.
bool slope_window_b(const SurfaceModel& s, const Rat& mu);
bool slope_window_c(const SurfaceModel& s, const Rat& mu);

/// Moduli-space descriptor with every derived quantity precomputed.
/// All derived fields are plain recomputations of the free functions above.
struct ModuliSpec {
  SurfaceModel surface;
  Int r;
  DivisorClass c1;
  Int k;
  Rat mu;
  Int h1;
  Int dim_m;
  Int sym2;
  Int lam2;
  bool window_b;
  bool window_c;
  bool cond_b;
  bool cond_c;
  bool smooth;

  static ModuliSpec make(const Int& r, const DivisorClass& c1, const Int& k);
};

/// Checks dim M = 2r h1 at this k. The identity holds for every k exactly
/// when dim_condition_b does; k_independent reports that condition.
struct ObstructionReport {
  Int dim_m;
  Int rhs;  // 2r h1
  bool pass = false;
  bool k_independent = false;
};

ObstructionReport obstruction_rank_check(const ModuliSpec& spec);

}  // namespace sdual
