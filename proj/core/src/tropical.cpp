#include "cluster/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace cluster {

namespace {
void require_same_rank(const TropicalElement& a, const TropicalElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("tropical: dimension mismatch");
}
}  // namespace

TropicalElement TropicalElement::generator(std::size_t r, std::size_t i) {
  if (i >= r) throw std::out_of_range("TropicalElement::generator: index out of range");
  std::vector<int> e(r, 0);
  e[i] = 1;
  return TropicalElement(std::move(e));
}

bool TropicalElement::is_identity() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int v) { return v == 0; });
}

TropicalElement TropicalElement::inverse() const { return pow(-1); }

TropicalElement TropicalElement::pow(int e) const {
  std::vector<int> r(exps_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = exps_[i] * e;
  return TropicalElement(std::move(r));
}

TropicalElement trop_mul(const TropicalElement& a, const TropicalElement& b) {
  require_same_rank(a, b);
  std::vector<int> r(a.rank());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return TropicalElement(std::move(r));
}

TropicalElement trop_oplus(const TropicalElement& a, const TropicalElement& b) {
  require_same_rank(a, b);
  std::vector<int> r(a.rank());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  return TropicalElement(std::move(r));
}

TropicalElement one_oplus(const TropicalElement& a) { return trop_oplus(TropicalElement::identity(a.rank()), a); }

SplitCoefficient split_pm(const TropicalElement& y) {
  const TropicalElement denom = one_oplus(y);
  return {trop_mul(y, denom.inverse()), denom.inverse()};
}

}  // namespace cluster
