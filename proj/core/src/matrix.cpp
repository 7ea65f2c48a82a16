#include "cluster/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace cluster {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, long fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::sign_flip(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw std::out_of_range("sign_flip: index out of range");
  IntMatrix m = identity(n);
  m(k - 1, k - 1) = -1;
  return m;
}

std::vector<long> IntMatrix::column(std::size_t j) const {
  std::vector<long> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<long> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_),
          data_.begin() + static_cast<long>((i + 1) * cols_)};
}

void IntMatrix::set_column(std::size_t j, const std::vector<long>& values) {
  if (values.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::positive_part() const {
  IntMatrix p = *this;
  for (auto& v : p.data_) v = std::max(v, 0L);
  return p;
}

IntMatrix IntMatrix::row_slice(std::size_t k) const {
  if (k < 1 || k > rows_) throw std::out_of_range("row_slice: index out of range");
  IntMatrix s(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) s(k - 1, j) = (*this)(k - 1, j);
  return s;
}

IntMatrix IntMatrix::column_slice(std::size_t k) const {
  if (k < 1 || k > cols_) throw std::out_of_range("column_slice: index out of range");
  IntMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) s(i, k - 1) = (*this)(i, k - 1);
  return s;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
  if (count > rows_) throw std::out_of_range("top_rows: too many rows");
  IntMatrix s(count, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<long>(count * cols_), s.data_.begin());
  return s;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix +: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix *: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const long aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<std::vector<long>> IntMatrix::to_rows() const {
  std::vector<std::vector<long>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<long> skew_symmetrizer(const IntMatrix& b) {
  if (!b.is_square()) return {};
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) return {};
    for (std::size_t j = 0; j < n; ++j) {
      const long x = b(i, j), y = b(j, i);
      if ((x == 0) != (y == 0)) return {};
      if (x != 0 && (x > 0) == (y > 0)) return {};
    }
  }

  // d_i as reduced fractions num/den, propagated across each connected component
  // using d_j = d_i * b_ij / (-b_ji).
  std::vector<long> num(n, 0), den(n, 1);
  for (std::size_t root = 0; root < n; ++root) {
    if (num[root] != 0) continue;
    num[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        long nn = num[i] * b(i, j);
        long dd = den[i] * -b(j, i);
        const long g = std::gcd(nn, dd);
        nn /= g;
        dd /= g;
        if (num[j] == 0) {
          num[j] = nn;
          den[j] = dd;
          q.push(j);
        } else if (num[j] * dd != nn * den[j]) {
          return {};
        }
      }
    }
  }
  long scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale = std::lcm(scale, den[i]);
  std::vector<long> d(n);
  long g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = num[i] * (scale / den[i]);
    g = std::gcd(g, d[i]);
  }
  for (auto& v : d) v /= g;
  return d;
}

bool is_skew_symmetrizable(const IntMatrix& b) { return !skew_symmetrizer(b).empty() || b.rows() == 0; }

}  // namespace cluster
