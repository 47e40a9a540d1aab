#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isohopf/error.hpp"
#include "isohopf/rational.hpp"

namespace isohopf {

inline bool field_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool field_is_zero(const Gauss& z) { return z.is_zero(); }

// Dense matrix over Q or Q(i).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c, F(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }
  Matrix column(std::size_t j) const { return columns(j, j + 1); }
  Matrix columns(std::size_t from, std::size_t to) const {
    Matrix m(rows_, to - from);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = from; j < to; ++j) m.at(i, j - from) = at(i, j);
    return m;
  }
  Matrix hcat(const Matrix& o) const {
    if (o.rows_ != rows_) fail(Errc::DimensionMismatch, "hcat row mismatch");
    Matrix m(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
  }
  void set_column(std::size_t j, const Matrix& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
  }
  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_is_zero(x)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (field_is_zero(a.at(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += F(a.at(i, k) * b.at(k, j));
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.data_) x = F(s * x);
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

using RatMatrix = Matrix<Rational>;
using GaussMatrix = Matrix<Gauss>;

// Row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && field_is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    F inv = F(F(1) / m.at(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = F(m.at(r, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || field_is_zero(m.at(i, c))) continue;
      F f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= F(f * m.at(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) fail(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<F> aug = a.hcat(Matrix<F>::identity(n));
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) fail(Errc::Singular, "matrix is singular");
  return aug.columns(n, 2 * n);
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "determinant of a non-square matrix");
  F det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && field_is_zero(m.at(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = F(-det);
    }
    det = F(det * m.at(c, c));
    F inv = F(F(1) / m.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (field_is_zero(m.at(i, c))) continue;
      F f = F(m.at(i, c) * inv);
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= F(f * m.at(c, j));
    }
  }
  return det;
}

// Columns form a basis of {x : m x = 0}.
template <class F>
Matrix<F> nullspace(Matrix<F> m) {
  auto piv = row_reduce(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  Matrix<F> ns(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    ns.at(free[k], k) = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) ns.at(piv[r], k) = F(-m.at(r, free[k]));
  }
  return ns;
}

// Solve a x = b for square invertible a.
template <class F>
Matrix<F> solve(const Matrix<F>& a, const Matrix<F>& b) {
  return inverse(a) * b;
}

// Basis for the column span (a subset of the columns).
template <class F>
Matrix<F> column_basis(const Matrix<F>& m) {
  Matrix<F> r = m;
  auto piv = row_reduce(r);
  Matrix<F> out(m.rows(), piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k) out.set_column(k, m.column(piv[k]));
  return out;
}

// dim(span a intersect span b) for column spans
template <class F>
std::size_t intersection_dim(const Matrix<F>& a, const Matrix<F>& b) {
  return rank(a) + rank(b) - rank(a.hcat(b));
}

GaussMatrix to_gauss(const RatMatrix& m);
std::optional<RatMatrix> to_rational(const GaussMatrix& m);
std::string to_string(const RatMatrix& m);
std::string to_string(const GaussMatrix& m);

}  // namespace isohopf
