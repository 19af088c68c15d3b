#pragma once

// Dense matrices over an exact field and the handful of elimination routines
// the rest of the library is built on.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gprojlab/field.hpp"

namespace gprojlab {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!gprojlab::is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (gprojlab::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!gprojlab::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const K& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix column(std::size_t j) const { return columns({j}); }

  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
    return m;
  }

  Matrix row_block(std::size_t first, std::size_t count) const {
    Matrix m(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
  }

  Matrix col_block(std::size_t first, std::size_t count) const {
    Matrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
  }

  /// Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows_; ++i)
      for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
  }

  K trace() const {
    K t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  const std::vector<K>& data() const { return data_; }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <class K>
Matrix<K> hstack(const std::vector<Matrix<K>>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += p.cols();
  }
  Matrix<K> m(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

template <class K>
Matrix<K> vstack(const std::vector<Matrix<K>>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += p.rows();
  }
  Matrix<K> m(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

template <class K>
Matrix<K> block_diagonal(const std::vector<Matrix<K>>& parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) rows += p.rows(), cols += p.cols();
  Matrix<K> m(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return m;
}

template <class K>
struct Echelon {
  Matrix<K> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class K>
Echelon<K> row_reduce(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    K inv = K(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      K factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  if (m.empty()) return 0;
  return row_reduce(m).rank();
}

/// Columns form a basis of the null space of `m`.
template <class K>
Matrix<K> nullspace(const Matrix<K>& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix<K>::identity(n);
  Echelon<K> e = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<K> basis(n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = K(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return basis;
}

/// A subset of the columns of `m` forming a basis of its column space.
template <class K>
Matrix<K> column_basis(const Matrix<K>& m) {
  if (m.empty()) return Matrix<K>(m.rows(), 0);
  return m.columns(row_reduce(m).pivots);
}

/// Standard basis vectors completing the columns of `basis` (full column rank) to a basis.
template <class K>
Matrix<K> complement_basis(const Matrix<K>& basis) {
  const std::size_t n = basis.rows();
  Matrix<K> aug = hstack<K>({basis, Matrix<K>::identity(n)}, n);
  auto pivots = row_reduce(aug).pivots;
  std::vector<std::size_t> extra;
  for (auto p : pivots)
    if (p >= basis.cols()) extra.push_back(p - basis.cols());
  return Matrix<K>::identity(n).columns(extra);
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix<K>(0, 0);
  Echelon<K> e = row_reduce(hstack<K>({m, Matrix<K>::identity(n)}, n));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.col_block(n, n);
}

/// Solves a * x = b; nullopt when inconsistent.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.cols();
  Matrix<K> x(n, b.cols());
  if (a.rows() == 0) return x;
  Echelon<K> e = row_reduce(hstack<K>({a, b}, a.rows()));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  }
  return x;
}

/// Left inverse of a full-column-rank matrix: l * basis = identity.
template <class K>
Matrix<K> left_inverse(const Matrix<K>& basis) {
  const std::size_t n = basis.rows(), r = basis.cols();
  if (r == 0) return Matrix<K>(0, n);
  Matrix<K> full = hstack<K>({basis, complement_basis(basis)}, n);
  auto inv = inverse(full);
  if (!inv) throw std::logic_error("left_inverse: columns are dependent");
  return inv->row_block(0, r);
}

/// Quotient by a column space: rows of `projection` kill `span(basis)`;
/// `section` is a right inverse of `projection`.
template <class K>
struct Quotient {
  Matrix<K> projection;
  Matrix<K> section;
};

template <class K>
Quotient<K> quotient_by(const Matrix<K>& basis) {
  const std::size_t n = basis.rows(), r = basis.cols();
  Matrix<K> comp = complement_basis(basis);
  Matrix<K> full = hstack<K>({basis, comp}, n);
  auto inv = inverse(full);
  if (!inv) throw std::logic_error("quotient_by: columns are dependent");
  return {inv->row_block(r, n - r), comp};
}

/// Basis of the intersection of two column spaces (inputs have full column rank).
template <class K>
Matrix<K> intersect_spans(const Matrix<K>& a, const Matrix<K>& b) {
  const std::size_t n = a.rows();
  Matrix<K> stacked = hstack<K>({a, K(-1) * b}, n);
  Matrix<K> null = nullspace(stacked);
  Matrix<K> coeff = null.row_block(0, a.cols());
  return column_basis(a * coeff);
}

/// Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1), Faddeev-LeVerrier.
/// Only valid in characteristic 0 or characteristic larger than n.
template <class K>
std::vector<K> characteristic_polynomial(const Matrix<K>& a) {
  const std::size_t n = a.rows();
  std::vector<K> c(n + 1, K(0));
  c[n] = K(1);
  Matrix<K> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<K> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    c[n - k] = -(a * m).trace() / K(static_cast<long>(k));
  }
  return c;
}

}  // namespace gprojlab
