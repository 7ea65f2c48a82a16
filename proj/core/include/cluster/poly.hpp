#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cluster {

using Integer = mpz_class;

/// Exponent of each ambient variable; index j is variable x_{j+1}. Entries
/// may be negative.
using ExponentVector = std::vector<int>;

/// Sparse Laurent polynomial over Z in a fixed number of variables.
///
/// Terms are kept in a std::map keyed by exponent vector, so iteration is in
/// lexicographic exponent order; that order is also the serialization order.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, Integer>;

  explicit LaurentPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static LaurentPoly constant(std::size_t num_vars, const Integer& c);
  static LaurentPoly monomial(ExponentVector exponent, const Integer& c = 1);
  /// The variable x_{j+1} (j is 0-based).
  static LaurentPoly variable(std::size_t num_vars, std::size_t j);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Integer coeff(const ExponentVector& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  LaurentPoly pow(unsigned e) const;
  /// Multiplies every exponent vector by x^shift.
  LaurentPoly shifted(const ExponentVector& shift) const;

  /// Lex-largest / lex-smallest exponent in the support.
  const ExponentVector& leading_exponent() const;
  const ExponentVector& trailing_exponent() const;

  /// Human-readable rendering with variables named x1..xm, e.g.
  /// "(x2^2 + 2*x2 + 1)/(x1*x3)".
  std::string to_string(const std::vector<std::string>& names = {}) const;
  /// Canonical machine key: terms in lex order, unambiguous and stable.
  std::string canonical_key() const;

 private:
  std::size_t num_vars_ = 0;
  TermMap terms_;
};

/// Thrown when a divisor does not divide the dividend in the Laurent ring.
/// During seed mutation this falsifies the Laurent phenomenon.
class InexactDivision : public std::runtime_error {
 public:
  InexactDivision(const std::string& what, LaurentPoly remainder)
      : std::runtime_error(what), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Exact quotient p / q in the Laurent ring. Throws InexactDivision, carrying
/// the partially reduced remainder, when q does not divide p.
LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q);

struct DenominatorForm {
  LaurentPoly numerator;          // nonnegative exponents, not divisible by x_1..x_n
  std::vector<int> d_vector;      // length n
};

/// Writes p = numerator / (x_1^{d_1} ... x_n^{d_n}) where only the first n
/// variables are factored.
DenominatorForm normalize_denominator(const LaurentPoly& p, std::size_t n);

struct LogConcavityViolation {
  ExponentVector point;  // the middle lattice point
  std::size_t axis = 0;  // 0-based variable index
  Integer middle, below, above;
};

struct LogConcavityResult {
  bool log_concave = true;
  std::optional<LogConcavityViolation> violation;  // lex-first violating point
  explicit operator bool() const { return log_concave; }
};

/// Checks a^2 >= a_{-e_j} * a_{+e_j} for every axis j and every lattice point
/// in the bounding box of the support (absent coefficients count as zero).
/// Throws std::domain_error for the zero polynomial or a negative coefficient.
LogConcavityResult is_log_concave(const LaurentPoly& p);

/// Sets the given variables (0-based) to 1 and drops them from the ambient
/// space; the remaining variables keep their relative order.
LaurentPoly substitute_ones(const LaurentPoly& p, const std::vector<std::size_t>& vars);

/// Maximum exponent of each listed variable over the support.
std::vector<int> max_degrees(const LaurentPoly& p, const std::vector<std::size_t>& vars);

/// Substitutes a Laurent monomial x^{images[k]} for the k-th variable of p.
/// All images must share one ambient size, which becomes the result's.
LaurentPoly substitute_monomials(const LaurentPoly& p, const std::vector<ExponentVector>& images,
                                 std::size_t target_vars);

Integer binomial(unsigned n, unsigned k);

}  // namespace cluster
