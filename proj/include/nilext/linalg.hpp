#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "nilext/error.hpp"
#include "nilext/field.hpp"

namespace nilext {

template <class F>
using Vec = std::vector<F>;

template <class F>
Vec<F> zero_vec(std::size_t n) {
  return Vec<F>(n, F(0));
}

template <class F>
Vec<F> unit_vec(std::size_t n, std::size_t i) {
  Vec<F> v(n, F(0));
  v.at(i) = F(1);
  return v;
}

template <class F>
bool is_zero_vec(const Vec<F>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class F>
Vec<F> add(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vec<F> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

template <class F>
Vec<F> scale(const F& c, const Vec<F>& a) {
  Vec<F> r(a);
  for (auto& x : r) x = c * x;
  return r;
}

template <class F>
Vec<F> axpy(const F& c, const Vec<F>& x, Vec<F> y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector lengths differ");
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] = y[i] + c * x[i];
  return y;
}

template <class F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

template <class F>
std::string vec_str(const Vec<F>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

/// Dense row-major matrix.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec<F>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<F>& entries() const { return a_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  F& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
    return a_[i * cols_ + j];
  }
  const F& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
    return a_[i * cols_ + j];
  }

  Vec<F> row(std::size_t i) const { return Vec<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec<F> column(std::size_t j) const {
    Vec<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + x * b(k, j);
      }
    return r;
  }
  friend Vec<F> operator*(const Matrix& a, const Vec<F>& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec<F> r(a.rows_, F(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) r[i] = r[i] + a(i, k) * v[k];
    return r;
  }
  friend Matrix operator*(Matrix a, const F& s) {
    for (auto& x : a.a_) x = x * s;
    return a;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] = a.a_[k] + b.a_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] = a.a_[k] - b.a_[k];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class F>
Echelon<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  F det(1);
  std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    F inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// A particular solution of M x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve_linear(const Matrix<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = rref(aug);
  Vec<F> x(m.cols(), F(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

/// Subspace of F^n stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}

  Subspace(std::size_t ambient, const std::vector<Vec<F>>& spanning) : n_(ambient) {
    if (spanning.empty()) return;
    auto e = rref(Matrix<F>::from_rows(spanning, ambient));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis_.push_back(e.reduced.row(r));
    pivots_ = std::move(e.pivots);
  }

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) {
    std::vector<Vec<F>> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vec<F>(n, i));
    return Subspace(n, b);
  }

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (v.size() != n_) throw DimensionMismatch("vector length differs from ambient dimension");
    Vec<F> coords(basis_.size(), F(0));
    Vec<F> rest = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      F c = rest[pivots_[r]];
      coords[r] = c;
      if (!c.is_zero()) rest = axpy(-c, basis_[r], rest);
    }
    if (!is_zero_vec(rest)) return std::nullopt;
    return coords;
  }

  bool contains(const Vec<F>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& w) const {
    check_ambient(w);
    for (const auto& b : w.basis_)
      if (!contains(b)) return false;
    return true;
  }

  Subspace sum(const Subspace& w) const {
    check_ambient(w);
    std::vector<Vec<F>> all = basis_;
    all.insert(all.end(), w.basis_.begin(), w.basis_.end());
    return Subspace(n_, all);
  }

  /// Basis of the annihilator {h : h.v = 0 for all v in this subspace}.
  std::vector<Vec<F>> equations() const {
    if (basis_.empty()) return Subspace::full(n_).basis_;
    return kernel_vectors(Matrix<F>::from_rows(basis_, n_));
  }

  Subspace intersect(const Subspace& w) const {
    check_ambient(w);
    std::vector<Vec<F>> eq = equations();
    auto more = w.equations();
    eq.insert(eq.end(), more.begin(), more.end());
    if (eq.empty()) return Subspace::full(n_);
    return Subspace(n_, kernel_vectors(Matrix<F>::from_rows(eq, n_)));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

  std::string str() const {
    std::string s = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? ", " : "") + vec_str(basis_[i]);
    return s + "}";
  }

  static std::vector<Vec<F>> kernel_vectors(const Matrix<F>& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec<F>> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) continue;
      Vec<F> v(m.cols(), F(0));
      v[free] = F(1);
      for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  void check_ambient(const Subspace& w) const {
    if (w.n_ != n_)
      throw DimensionMismatch("ambient dimensions " + std::to_string(n_) + " and " + std::to_string(w.n_) + " differ");
  }

  std::size_t n_ = 0;
  std::vector<Vec<F>> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  return Subspace<F>(m.cols(), Subspace<F>::kernel_vectors(m));
}

template <class F>
Subspace<F> span_of(std::size_t ambient, const std::vector<Vec<F>>& vectors) {
  return Subspace<F>(ambient, vectors);
}

/// Vectors whose classes form a basis of U/W, chosen greedily from U's
/// echelon basis. Requires W inside U.
template <class F>
std::vector<Vec<F>> complement_reps(const Subspace<F>& u, const Subspace<F>& w) {
  if (!u.contains(w)) throw PreconditionFailed("complement_reps: W is not contained in U");
  std::vector<Vec<F>> reps;
  Subspace<F> acc = w;
  for (const auto& b : u.basis()) {
    if (acc.contains(b)) continue;
    reps.push_back(b);
    acc = acc.sum(Subspace<F>(u.ambient_dim(), {b}));
  }
  return reps;
}

/// Greedy complement drawing candidates from an explicit ordered list.
template <class F>
std::vector<Vec<F>> complement_from(const Subspace<F>& w, const std::vector<Vec<F>>& candidates) {
  std::vector<Vec<F>> reps;
  Subspace<F> acc = w;
  for (const auto& b : candidates) {
    if (acc.contains(b)) continue;
    reps.push_back(b);
    acc = acc.sum(Subspace<F>(w.ambient_dim(), {b}));
  }
  return reps;
}

}  // namespace nilext
