#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nilext/error.hpp"
#include "nilext/field.hpp"
#include "nilext/linalg.hpp"

namespace nilext {

/// Finite-dimensional algebra given by structure constants:
/// e_i e_j = sum_k c(i,j,k) e_k, indices zero-based.
template <class F>
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::size_t dim, std::string label = {})
      : n_(dim), c_(dim * dim * dim, F(0)), label_(std::move(label)) {
    if (dim == 0) throw PreconditionFailed("algebra dimension must be at least 1");
  }

  static Algebra zero(std::size_t dim) { return Algebra(dim, "zero" + std::to_string(dim)); }

  std::size_t dim() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  const F& coeff(std::size_t i, std::size_t j, std::size_t k) const { return c_.at((i * n_ + j) * n_ + k); }
  void set(std::size_t i, std::size_t j, std::size_t k, const F& v) { c_.at((i * n_ + j) * n_ + k) = v; }
  /// Adds v e_k to the product e_i e_j.
  void add_to(std::size_t i, std::size_t j, std::size_t k, const F& v) {
    auto& slot = c_.at((i * n_ + j) * n_ + k);
    slot = slot + v;
  }
  const std::vector<F>& constants() const { return c_; }

  Vec<F> product(std::size_t i, std::size_t j) const {
    return Vec<F>(c_.begin() + (i * n_ + j) * n_, c_.begin() + (i * n_ + j + 1) * n_);
  }

  Vec<F> multiply(const Vec<F>& u, const Vec<F>& v) const {
    if (u.size() != n_ || v.size() != n_)
      throw DimensionMismatch("multiply: vectors must have length " + std::to_string(n_));
    Vec<F> r(n_, F(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (v[j].is_zero()) continue;
        F w = u[i] * v[j];
        const F* row = &c_[(i * n_ + j) * n_];
        for (std::size_t k = 0; k < n_; ++k)
          if (!row[k].is_zero()) r[k] = r[k] + w * row[k];
      }
    }
    return r;
  }

  bool is_zero_product() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  template <class G>
  Algebra<G> map(const std::function<G(const F&)>& f) const {
    Algebra<G> out(n_, label_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) out.set(i, j, k, f(coeff(i, j, k)));
    return out;
  }

  /// Nonzero products, e.g. "e1e1 = e2, e2e1 = -1/2*e3".
  std::string table_str() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::string rhs;
        for (std::size_t k = 0; k < n_; ++k) {
          const F& c = coeff(i, j, k);
          if (c.is_zero()) continue;
          std::string cs = c.str();
          bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
          std::string mag = neg ? cs.substr(1) : cs;
          if (mag.find_first_of("+-") != std::string::npos) mag = "(" + mag + ")";
          if (!rhs.empty())
            rhs += neg ? " - " : " + ";
          else if (neg)
            rhs += "-";
          rhs += (mag == "1" ? "" : mag + "*") + "e" + std::to_string(k + 1);
        }
        if (rhs.empty()) continue;
        if (!s.empty()) s += ", ";
        s += "e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + " = " + rhs;
      }
    return s.empty() ? "(zero product)" : s;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t n_ = 0;
  std::vector<F> c_;
  std::string label_;
};

/// span{u w : u in U, w in W}
template <class F>
Subspace<F> product_space(const Algebra<F>& a, const Subspace<F>& u, const Subspace<F>& w) {
  std::vector<Vec<F>> prods;
  for (const auto& x : u.basis())
    for (const auto& y : w.basis()) {
      auto p = a.multiply(x, y);
      if (!is_zero_vec(p)) prods.push_back(std::move(p));
    }
  return Subspace<F>(a.dim(), prods);
}

/// Distinct members of A = A^1, A^2, ... with A^k = sum_{i+j=k} A^i A^j,
/// ending with the zero subspace when A is nilpotent.
template <class F>
std::vector<Subspace<F>> power_chain(const Algebra<F>& a) {
  std::size_t n = a.dim();
  std::vector<Subspace<F>> pw{Subspace<F>::full(n)};
  std::vector<Subspace<F>> chain{pw[0]};
  std::size_t limit = 4 * n + 4;
  for (std::size_t k = 2; k <= limit; ++k) {
    Subspace<F> s(n);
    for (std::size_t i = 1; i < k; ++i) s = s.sum(product_space(a, pw[i - 1], pw[k - i - 1]));
    pw.push_back(s);
    if (!(s == chain.back())) chain.push_back(s);
    if (s.is_zero()) break;
  }
  return chain;
}

template <class F>
bool is_nilpotent(const Algebra<F>& a) {
  return power_chain(a).back().is_zero();
}

enum class Side { left, right, two_sided };

/// {x : xA = 0}, {x : Ax = 0} or their intersection.
template <class F>
Subspace<F> annihilator(const Algebra<F>& a, Side side) {
  std::size_t n = a.dim();
  std::vector<Vec<F>> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (side != Side::right) {
        Vec<F> r(n, F(0));
        for (std::size_t i = 0; i < n; ++i) r[i] = a.coeff(i, j, k);
        rows.push_back(std::move(r));
      }
      if (side != Side::left) {
        Vec<F> r(n, F(0));
        for (std::size_t i = 0; i < n; ++i) r[i] = a.coeff(j, i, k);
        rows.push_back(std::move(r));
      }
    }
  return kernel_basis(Matrix<F>::from_rows(rows, n));
}

template <class F>
Subspace<F> annihilator(const Algebra<F>& a) {
  return annihilator(a, Side::two_sided);
}

/// Derivations D(xy) = D(x)y + xD(y); D(e_j) is column j.
template <class F>
std::vector<Matrix<F>> derivations(const Algebra<F>& a) {
  std::size_t n = a.dim();
  std::size_t unknowns = n * n;  // index r*n+c for D(r,c)
  std::vector<Vec<F>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<F> row(unknowns, F(0));
        for (std::size_t m = 0; m < n; ++m) row[k * n + m] = row[k * n + m] + a.coeff(i, j, m);
        for (std::size_t s = 0; s < n; ++s) {
          row[s * n + i] = row[s * n + i] - a.coeff(s, j, k);
          row[s * n + j] = row[s * n + j] - a.coeff(i, s, k);
        }
        rows.push_back(std::move(row));
      }
  std::vector<Matrix<F>> out;
  for (auto& v : Subspace<F>::kernel_vectors(Matrix<F>::from_rows(rows, unknowns)))
    out.emplace_back(n, n, std::move(v));
  return out;
}

template <class F>
Matrix<F> left_multiplication(const Algebra<F>& a, std::size_t x) {
  std::size_t n = a.dim();
  Matrix<F> m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = a.coeff(x, j, k);
  return m;
}

template <class F>
Matrix<F> right_multiplication(const Algebra<F>& a, std::size_t x) {
  std::size_t n = a.dim();
  Matrix<F> m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = a.coeff(j, x, k);
  return m;
}

/// Commutators of multiplication operators all lie in the derivation algebra.
template <class F>
bool is_cd_by_derivations(const Algebra<F>& a) {
  std::size_t n = a.dim();
  std::vector<Vec<F>> der;
  for (const auto& d : derivations(a)) der.push_back(d.entries());
  Subspace<F> span(n * n, der);
  std::vector<Matrix<F>> ops;
  for (std::size_t x = 0; x < n; ++x) {
    ops.push_back(left_multiplication(a, x));
    ops.push_back(right_multiplication(a, x));
  }
  for (std::size_t p = 0; p < ops.size(); ++p)
    for (std::size_t q = p + 1; q < ops.size(); ++q) {
      Matrix<F> c = ops[p] * ops[q] - ops[q] * ops[p];
      if (!span.contains(c.entries())) return false;
    }
  return true;
}

/// phi(e_i e_j) = phi(e_i) phi(e_j) for all basis pairs; column i of phi is phi(e_i).
template <class F>
bool is_homomorphism(const Algebra<F>& a, const Algebra<F>& b, const Matrix<F>& phi) {
  if (phi.rows() != b.dim() || phi.cols() != a.dim())
    throw DimensionMismatch("homomorphism matrix must be dim B x dim A");
  std::vector<Vec<F>> img;
  for (std::size_t i = 0; i < a.dim(); ++i) img.push_back(phi.column(i));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (phi * a.product(i, j) != b.multiply(img[i], img[j])) return false;
  return true;
}

template <class F>
bool is_automorphism(const Algebra<F>& a, const Matrix<F>& phi) {
  return is_invertible(phi) && is_homomorphism(a, a, phi);
}

}  // namespace nilext
