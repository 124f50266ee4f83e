#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twalex/polynomial.hpp"

namespace twalex {

/// Dense row-major matrix over a ring T constructible from int.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), T(0)) {}
  Matrix(int rows, int cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(rows * cols)) throw std::invalid_argument("matrix data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Copy of the rectangular block [r0, r0+nr) x [c0, c0+nc).
  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(int r0, int c0, const Matrix& b) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// Same matrix with columns [c0, c0+nc) removed.
  Matrix without_columns(int c0, int nc) const {
    Matrix m(rows_, cols_ - nc);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0, k = 0; j < cols_; ++j)
        if (j < c0 || j >= c0 + nc) m(i, k++) = (*this)(i, j);
    return m;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> d;
    d.reserve(data_.size());
    for (const T& x : data_) d.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(d));
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x = s * x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

/// Determinant over an exact field by fraction-free (Bareiss) elimination
/// with row pivoting. Every division is exact. det of the 0x0 matrix is 1.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return T(1);
  int sign = 1;
  T prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(m(k, k))) {
      int p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      for (int j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (sign < 0) det = T(0) - det;
  return det;
}

}  // namespace twalex
