#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace homlie {

/// Dense rational matrix, row-major. Small dimensions, exact arithmetic.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Build from a list of rows (all of equal length).
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw input_error("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  /// M * v
  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw input_error("matrix-vector size mismatch");
    Vec r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] == 0) continue;
      for (std::size_t i = 0; i < rows_; ++i) r[i] += at(i, j) * v[j];
    }
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product size mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Matrix& o) const = default;

  /// Flatten row-major into one vector.
  Vec flatten() const { return a_; }

  static Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    m.a_ = v;
    return m;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec a_;
};

struct RrefResult {
  Matrix mat;                       // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot columns, one per remaining row
};

/// Exact Gauss-Jordan elimination to reduced row echelon form.
inline RrefResult rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    const Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
  return {std::move(out), std::move(pivots)};
}

/// Basis of {v : m v = 0}, returned as rref rows. dim = cols - rank.
inline Matrix nullspace(const Matrix& m) {
  auto [r, piv] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return rref(Matrix::from_rows(basis, cols)).mat;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto [r, piv] = rref(std::move(aug));
  if (piv.size() != n || piv.back() != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

inline Matrix mat_pow(const Matrix& m, unsigned k) {
  Matrix r = Matrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

} // namespace homlie
