#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <algorithm>
#include <vector>

#include "kproper/rational.hpp"

namespace kproper {

/// Element of the lattice N or its dual M.
using IntVector = std::vector<std::int64_t>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    const std::size_t r = cols.empty() ? 0 : cols.front().size();
    Matrix m(r, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    return p;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<Rational>;

/// v divided by the gcd of its entries. Throws DomainError for the zero vector.
IntVector primitive(std::span<const std::int64_t> v);

/// Unique solution of A x = b, or nullopt when A is singular. Throws
/// DomainError when A is not square or b has the wrong length.
std::optional<RatVector> solve_exact(const RatMatrix& a, std::span<const Rational> b);

/// Unique solution of a (possibly overdetermined) system: nullopt when the
/// system is inconsistent or the solution is not unique.
std::optional<RatVector> solve_system(const RatMatrix& a, std::span<const Rational> b);

/// True iff det(m) = ±1. Non-square input is never unimodular.
bool is_unimodular(const IntMatrix& m);

Rational determinant(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
/// Basis of {x : m x = 0}.
std::vector<RatVector> nullspace(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);
/// Throws DomainError if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
RatVector to_rational(std::span<const std::int64_t> v);

IntVector matvec(const IntMatrix& m, std::span<const std::int64_t> v);
RatVector matvec(const RatMatrix& m, std::span<const Rational> v);
RatVector matvec(const IntMatrix& m, std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const std::int64_t> b);

std::int64_t floor_to_int(const Rational& x);
std::int64_t ceil_to_int(const Rational& x);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);

}  // namespace kproper
