#include "sdual/weightlat.hpp"

namespace sdual {

WeightVector fundamental_weight(Eigen::Index r, Eigen::Index i) {
  require(r >= 2, "fundamental_weight: rank must be at least 2");
  require(i >= 1 && i <= r - 1, "fundamental_weight: index out of range 1..r-1");
  WeightVector w = WeightVector::Zero(r);
  for (Eigen::Index t = 0; t < i; ++t) w(t) = 1;
  return w;
}

WeightVector rho(Eigen::Index r) {
  require(r >= 2, "rho: rank must be at least 2");
  WeightVector w(r);
  for (Eigen::Index t = 0; t < r; ++t) w(t) = Rat(static_cast<long long>(r - 1 - t));
  return w;
}

std::vector<WeightVector> positive_roots(Eigen::Index r) {
  require(r >= 2, "positive_roots: rank must be at least 2");
  std::vector<WeightVector> roots;
  roots.reserve(static_cast<std::size_t>(r * (r - 1) / 2));
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i + 1; j < r; ++j) {
      WeightVector w = WeightVector::Zero(r);
      w(i) = 1;
      w(j) = -1;
      roots.push_back(std::move(w));
    }
  }
  return roots;
}

WeightVector normalized(const WeightVector& w) {
  require(w.size() >= 2, "normalized: rank must be at least 2");
  WeightVector out(w.size());
  const Rat last = w(w.size() - 1);
  for (Eigen::Index t = 0; t < w.size(); ++t) out(t) = w(t) - last;
  return out;
}

bool weights_equal(const WeightVector& a, const WeightVector& b) {
  require(a.size() == b.size(), "weights_equal: rank mismatch");
  const Rat shift = a(a.size() - 1) - b(b.size() - 1);
  for (Eigen::Index t = 0; t < a.size(); ++t) {
    if (a(t) - b(t) != shift) return false;
  }
  return true;
}

bool weight_less(const WeightVector& a, const WeightVector& b) {
  require(a.size() == b.size(), "weight_less: rank mismatch");
  const WeightVector na = normalized(a);
  const WeightVector nb = normalized(b);
  for (Eigen::Index t = 0; t < na.size(); ++t) {
    if (na(t) != nb(t)) return na(t) < nb(t);
  }
  return false;
}

}  // namespace sdual
