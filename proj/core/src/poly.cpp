#include "cluster/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace cluster {

namespace {

void require_same_vars(const LaurentPoly& p, const LaurentPoly& q, const char* op) {
  if (p.num_vars() != q.num_vars()) {
    std::ostringstream os;
    os << op << ": dimension mismatch (" << p.num_vars() << " vs " << q.num_vars() << " variables)";
    throw std::invalid_argument(os.str());
  }
}

ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVector sub_exponents(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

struct Box {
  ExponentVector lo, hi;
};

Box bounding_box(const LaurentPoly& p) {
  const std::size_t m = p.num_vars();
  Box box{ExponentVector(m, std::numeric_limits<int>::max()),
          ExponentVector(m, std::numeric_limits<int>::min())};
  for (const auto& [e, c] : p.terms())
    for (std::size_t j = 0; j < m; ++j) {
      box.lo[j] = std::min(box.lo[j], e[j]);
      box.hi[j] = std::max(box.hi[j], e[j]);
    }
  return box;
}

std::string render_monomial(const ExponentVector& e, const std::vector<std::string>& names, bool positive_only) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const int k = positive_only ? e[j] : -e[j];
    if (k <= 0) continue;
    if (!out.empty()) out += '*';
    out += names[j];
    if (k != 1) out += '^' + std::to_string(k);
  }
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t num_vars, const Integer& c) {
  LaurentPoly p(num_vars);
  p.add_term(ExponentVector(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(ExponentVector exponent, const Integer& c) {
  LaurentPoly p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t num_vars, std::size_t j) {
  if (j >= num_vars) throw std::out_of_range("LaurentPoly::variable: index out of range");
  ExponentVector e(num_vars, 0);
  e[j] = 1;
  return monomial(std::move(e));
}

Integer LaurentPoly::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& e, const Integer& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("add_term: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_vars(*this, other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_vars(*this, other, "sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b, "mul");
  LaurentPoly r(a.num_vars_);
  Integer prod;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(add_exponents(ea, eb), prod);
    }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(num_vars_, 1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& shift) const {
  if (shift.size() != num_vars_) throw std::invalid_argument("shifted: exponent length mismatch");
  LaurentPoly r(num_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add_exponents(e, shift), c);
  return r;
}

const ExponentVector& LaurentPoly::leading_exponent() const {
  if (terms_.empty()) throw std::domain_error("leading_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

const ExponentVector& LaurentPoly::trailing_exponent() const {
  if (terms_.empty()) throw std::domain_error("trailing_exponent of zero polynomial");
  return terms_.begin()->first;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names = names_in;
  for (std::size_t j = names.size(); j < num_vars_; ++j) names.push_back("x" + std::to_string(j + 1));

  // Factor out the monomial denominator.
  ExponentVector den(num_vars_, 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t j = 0; j < num_vars_; ++j) den[j] = std::max(den[j], -e[j]);

  std::string num;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const ExponentVector e = add_exponents(it->first, den);
    Integer c = it->second;
    if (!num.empty()) {
      num += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0) {
      num += "-";
      c = -c;
    }
    const std::string mono = render_monomial(e, names, true);
    if (mono.empty()) {
      num += c.get_str();
    } else {
      if (c != 1) num += c.get_str() + "*";
      num += mono;
    }
  }
  const std::string d = render_monomial(den, names, true);
  if (d.empty()) return num;
  const std::string numer = terms_.size() > 1 ? "(" + num + ")" : num;
  const bool compound = std::count(d.begin(), d.end(), '*') > 0;
  return numer + "/" + (compound ? "(" + d + ")" : d);
}

std::string LaurentPoly::canonical_key() const {
  std::string key = std::to_string(num_vars_) + "|";
  for (const auto& [e, c] : terms_) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) key += ',';
      key += std::to_string(e[j]);
    }
    key += ':';
    key += c.get_str();
    key += ';';
  }
  return key;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_vars(p, q, "div_exact");
  if (q.is_zero()) throw std::domain_error("div_exact: division by zero polynomial");
  const std::size_t m = p.num_vars();
  if (p.is_zero()) return LaurentPoly(m);

  if (q.is_monomial()) {
    const auto& [qe, qc] = *q.terms().begin();
    LaurentPoly r(m);
    for (const auto& [e, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), qc.get_mpz_t()))
        throw InexactDivision("div_exact: coefficient not divisible by monomial divisor", p);
      r.add_term(sub_exponents(e, qe), c / qc);
    }
    return r;
  }

  // Per-coordinate exponent ranges add under multiplication, so every term of
  // the quotient lies in [min p - min q, max p - max q].
  const Box bp = bounding_box(p), bq = bounding_box(q);
  Box allowed{sub_exponents(bp.lo, bq.lo), sub_exponents(bp.hi, bq.hi)};
  for (std::size_t j = 0; j < m; ++j)
    if (allowed.lo[j] > allowed.hi[j]) throw InexactDivision("div_exact: exponent ranges incompatible", p);

  const ExponentVector& q_lead = q.leading_exponent();
  const Integer& q_lc = q.terms().rbegin()->second;

  LaurentPoly quotient(m);
  LaurentPoly rem = p;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    ExponentVector te = sub_exponents(re, q_lead);
    bool inside = true;
    for (std::size_t j = 0; j < m && inside; ++j) inside = te[j] >= allowed.lo[j] && te[j] <= allowed.hi[j];
    if (!inside || !mpz_divisible_p(rc.get_mpz_t(), q_lc.get_mpz_t()))
      throw InexactDivision("div_exact: divisor does not divide dividend", rem);
    const Integer tc = rc / q_lc;
    quotient.add_term(te, tc);
    for (const auto& [e, c] : q.terms()) rem.add_term(add_exponents(e, te), -(c * tc));
  }
  return quotient;
}

DenominatorForm normalize_denominator(const LaurentPoly& p, std::size_t n) {
  if (p.is_zero()) throw std::domain_error("normalize_denominator: zero polynomial");
  if (n > p.num_vars()) throw std::invalid_argument("normalize_denominator: n exceeds variable count");
  const Box box = bounding_box(p);
  for (std::size_t j = n; j < p.num_vars(); ++j)
    if (box.lo[j] < 0) throw std::invalid_argument("normalize_denominator: frozen variable with negative exponent");
  DenominatorForm form;
  form.d_vector.assign(n, 0);
  ExponentVector shift(p.num_vars(), 0);
  for (std::size_t j = 0; j < n; ++j) {
    form.d_vector[j] = -box.lo[j];
    shift[j] = -box.lo[j];
  }
  form.numerator = p.shifted(shift);
  return form;
}

LogConcavityResult is_log_concave(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("is_log_concave: zero polynomial");
  for (const auto& [e, c] : p.terms())
    if (c < 0) throw std::domain_error("is_log_concave: negative coefficient");

  // Only triples whose outer points both carry a positive coefficient can fail,
  // so it suffices to pair each support point with its +2e_j neighbour.
  LogConcavityResult result;
  const std::size_t m = p.num_vars();
  Integer lhs, rhs;
  for (const auto& [e, below] : p.terms()) {
    for (std::size_t j = 0; j < m; ++j) {
      ExponentVector top = e;
      top[j] += 2;
      auto it = p.terms().find(top);
      if (it == p.terms().end()) continue;
      ExponentVector mid = e;
      mid[j] += 1;
      const Integer middle = p.coeff(mid);
      lhs = middle * middle;
      rhs = below * it->second;
      if (lhs >= rhs) continue;
      if (!result.violation || mid < result.violation->point ||
          (mid == result.violation->point && j < result.violation->axis)) {
        result.log_concave = false;
        result.violation = LogConcavityViolation{mid, j, middle, below, it->second};
      }
    }
  }
  return result;
}

LaurentPoly substitute_ones(const LaurentPoly& p, const std::vector<std::size_t>& vars) {
  std::vector<bool> drop(p.num_vars(), false);
  for (auto v : vars) {
    if (v >= p.num_vars()) throw std::out_of_range("substitute_ones: variable index out of range");
    drop[v] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < p.num_vars(); ++j)
    if (!drop[j]) keep.push_back(j);
  LaurentPoly r(keep.size());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector pe(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) pe[i] = e[keep[i]];
    r.add_term(pe, c);
  }
  return r;
}

std::vector<int> max_degrees(const LaurentPoly& p, const std::vector<std::size_t>& vars) {
  if (p.is_zero()) throw std::domain_error("max_degrees: zero polynomial");
  std::vector<int> out(vars.size(), std::numeric_limits<int>::min());
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] >= p.num_vars()) throw std::out_of_range("max_degrees: variable index out of range");
      out[i] = std::max(out[i], e[vars[i]]);
    }
  return out;
}

LaurentPoly substitute_monomials(const LaurentPoly& p, const std::vector<ExponentVector>& images,
                                 std::size_t target_vars) {
  if (images.size() != p.num_vars()) throw std::invalid_argument("substitute_monomials: image count mismatch");
  for (const auto& img : images)
    if (img.size() != target_vars) throw std::invalid_argument("substitute_monomials: image length mismatch");
  LaurentPoly r(target_vars);
  for (const auto& [e, c] : p.terms()) {
    ExponentVector out(target_vars, 0);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0)
        for (std::size_t j = 0; j < target_vars; ++j) out[j] += e[k] * images[k][j];
    r.add_term(out, c);
  }
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace cluster
