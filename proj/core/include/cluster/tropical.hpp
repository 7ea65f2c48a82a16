#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace cluster {

/// Element of the free tropical semifield Trop(u_1, ..., u_r), stored as the
/// exponent vector of the Laurent monomial u^a. Multiplication adds exponents,
/// the semifield sum takes componentwise minima. The trivial semifield is the
/// r = 0 case.
class TropicalElement {
 public:
  TropicalElement() = default;
  explicit TropicalElement(std::vector<int> exponents) : exps_(std::move(exponents)) {}

  static TropicalElement identity(std::size_t r) { return TropicalElement(std::vector<int>(r, 0)); }
  /// The generator u_{i+1}.
  static TropicalElement generator(std::size_t r, std::size_t i);

  std::size_t rank() const { return exps_.size(); }
  const std::vector<int>& exponents() const { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  bool is_identity() const;

  TropicalElement inverse() const;
  TropicalElement pow(int e) const;

  friend bool operator==(const TropicalElement&, const TropicalElement&) = default;
  friend auto operator<=>(const TropicalElement&, const TropicalElement&) = default;

 private:
  std::vector<int> exps_;
};

TropicalElement trop_mul(const TropicalElement& a, const TropicalElement& b);
TropicalElement trop_oplus(const TropicalElement& a, const TropicalElement& b);
/// 1 (+) a.
TropicalElement one_oplus(const TropicalElement& a);

struct SplitCoefficient {
  TropicalElement plus;   // y / (y (+) 1)
  TropicalElement minus;  // 1 / (y (+) 1)
};

/// Recovers the (p+, p-) pair with p+ (+) p- = 1 from y = p+ / p-.
SplitCoefficient split_pm(const TropicalElement& y);

}  // namespace cluster
