#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cluster {

/// Dense row-major integer matrix. Used for exchange matrices and the
/// C/G/D/F matrices attached to vertices of a cluster pattern.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, long fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Identity with the k-th diagonal entry replaced by -1 (k is 1-based).
  static IntMatrix sign_flip(std::size_t n, std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  long& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<long> column(std::size_t j) const;
  std::vector<long> row(std::size_t i) const;
  void set_column(std::size_t j, const std::vector<long>& values);

  IntMatrix transpose() const;
  /// Entrywise max(., 0).
  IntMatrix positive_part() const;
  /// Keeps only row k (1-based); every other entry becomes zero.
  IntMatrix row_slice(std::size_t k) const;
  /// Keeps only column k (1-based); every other entry becomes zero.
  IntMatrix column_slice(std::size_t k) const;
  /// First `count` rows.
  IntMatrix top_rows(std::size_t count) const;

  IntMatrix operator-() const;
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::vector<std::vector<long>> to_rows() const;
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long> data_;
};

/// Searches for a positive diagonal D with D*B skew-symmetric. Returns the
/// diagonal on success, an empty vector otherwise.
std::vector<long> skew_symmetrizer(const IntMatrix& b);
bool is_skew_symmetrizable(const IntMatrix& b);

}  // namespace cluster
