#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilext/algebra.hpp"
#include "nilext/error.hpp"
#include "nilext/expr.hpp"
#include "nilext/identities.hpp"
#include "nilext/linalg.hpp"

namespace nilext {

/// Bilinear form stored as its Gram matrix, entry (i,j) = theta(e_i, e_j).
template <class F>
using Form = Matrix<F>;

/// D(i,j) in zero-based indices.
template <class F>
Form<F> delta(std::size_t n, std::size_t i, std::size_t j) {
  Form<F> g(n, n);
  g.at(i, j) = F(1);
  return g;
}

/// Flattening in lexicographic D(i,j) order.
template <class F>
Vec<F> form_vec(const Form<F>& g) {
  return g.entries();
}

template <class F>
Form<F> vec_form(std::size_t n, const Vec<F>& v) {
  if (v.size() != n * n) throw DimensionMismatch("form vector must have n^2 entries");
  return Form<F>(n, n, v);
}

/// delta f (x,y) = f(xy)
template <class F>
Form<F> coboundary(const Algebra<F>& a, const Vec<F>& f) {
  std::size_t n = a.dim();
  if (f.size() != n) throw DimensionMismatch("functional must have dim A components");
  Form<F> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      F s(0);
      for (std::size_t k = 0; k < n; ++k) s = s + a.coeff(i, j, k) * f[k];
      g(i, j) = s;
    }
  return g;
}

template <class F>
Subspace<F> b2_basis(const Algebra<F>& a) {
  std::size_t n = a.dim();
  std::vector<Vec<F>> gens;
  for (std::size_t k = 0; k < n; ++k) gens.push_back(form_vec(coboundary(a, unit_vec<F>(n, k))));
  return Subspace<F>(n * n, gens);
}

/// Forms whose extension is a CD-algebra; requires A itself to be one.
template <class F>
Subspace<F> cd_cocycles(const Algebra<F>& a) {
  return induced_cocycle_constraints(a, builtin_set("cd"));
}

template <class F>
struct CocycleBasis {
  Algebra<F> base;
  Subspace<F> b2;
  std::vector<Form<F>> h2_reps;
  std::vector<bool> cd_flags;  // parallel to h2_reps
  std::vector<std::string> labels;

  std::size_t h2_dim() const { return h2_reps.size(); }
  std::size_t h2_cd_dim() const {
    std::size_t k = 0;
    for (bool f : cd_flags) k += f;
    return k;
  }
  std::vector<Form<F>> cd_reps() const {
    std::vector<Form<F>> out;
    for (std::size_t i = 0; i < h2_reps.size(); ++i)
      if (cd_flags[i]) out.push_back(h2_reps[i]);
    return out;
  }
};

/// Named representatives for H^2 of a known base algebra, in order.
template <class F>
using NablaList = std::vector<std::pair<std::string, Form<F>>>;

/// B^2, a complement basis of H^2 and the CD-flagged part. With `named`, the
/// given forms are used as representatives when their classes form a basis of
/// H^2; a CD-flag is set on those lying in the CD-cocycle space. Otherwise
/// representatives come from echelon complements (CD part first).
template <class F>
CocycleBasis<F> cohomology(const Algebra<F>& a, const NablaList<F>* named = nullptr) {
  std::size_t n = a.dim();
  CocycleBasis<F> cb{a, b2_basis(a), {}, {}, {}};
  bool cd_base = is_cd(a);
  std::optional<Subspace<F>> zcd;
  if (cd_base) zcd = cd_cocycles(a);

  if (named) {
    std::vector<Vec<F>> vs;
    for (const auto& [label, f] : *named) vs.push_back(form_vec(f));
    auto reps = complement_from(cb.b2, vs);
    if (reps.size() == vs.size() && cb.b2.dim() + reps.size() == n * n) {
      for (const auto& [label, f] : *named) {
        cb.h2_reps.push_back(f);
        cb.cd_flags.push_back(zcd && zcd->contains(form_vec(f)));
        cb.labels.push_back(label);
      }
      return cb;
    }
  }
  std::vector<Vec<F>> cd_part;
  if (zcd) cd_part = complement_reps(*zcd, cb.b2);
  Subspace<F> acc = cb.b2;
  for (const auto& v : cd_part) acc = acc.sum(Subspace<F>(n * n, {v}));
  auto rest = complement_reps(Subspace<F>::full(n * n), acc);
  std::size_t label = 1;
  for (const auto& v : cd_part) {
    cb.h2_reps.push_back(vec_form(n, v));
    cb.cd_flags.push_back(true);
    cb.labels.push_back("N(" + std::to_string(label++) + ")");
  }
  for (const auto& v : rest) {
    cb.h2_reps.push_back(vec_form(n, v));
    cb.cd_flags.push_back(false);
    cb.labels.push_back("N(" + std::to_string(label++) + ")");
  }
  return cb;
}

/// {x : theta(x, A) = theta(A, x) = 0 for every theta}
template <class F>
Subspace<F> theta_perp(std::size_t n, const std::vector<Form<F>>& thetas) {
  std::vector<Vec<F>> rows;
  for (const auto& g : thetas) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("form size differs from algebra dimension");
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(g.row(i));
      rows.push_back(g.column(i));
    }
  }
  if (rows.empty()) return Subspace<F>::full(n);
  return kernel_basis(Matrix<F>::from_rows(rows, n));
}

template <class F>
Subspace<F> theta_perp(const Algebra<F>& a, const std::vector<Form<F>>& thetas) {
  return theta_perp(a.dim(), thetas);
}

enum class LineClass { NotInT1, R1, U1 };

inline std::string to_string(LineClass c) {
  switch (c) {
    case LineClass::NotInT1: return "NotInT1";
    case LineClass::R1: return "R1";
    case LineClass::U1: return "U1";
  }
  return "?";
}

namespace detail {

template <class F>
struct LineContext {
  Subspace<F> b2, ann;
  std::optional<Subspace<F>> zcd;
};

template <class F>
LineContext<F> line_context(const Algebra<F>& a) {
  LineContext<F> ctx{b2_basis(a), annihilator(a), std::nullopt};
  if (is_cd(a)) ctx.zcd = cd_cocycles(a);
  return ctx;
}

template <class F>
LineClass classify_with(const LineContext<F>& ctx, std::size_t n, const Form<F>& theta) {
  if (ctx.b2.contains(form_vec(theta))) throw PreconditionFailed("classify_line: theta lies in B^2");
  if (!theta_perp(n, std::vector<Form<F>>{theta}).intersect(ctx.ann).is_zero()) return LineClass::NotInT1;
  if (ctx.zcd && ctx.zcd->contains(form_vec(theta))) return LineClass::R1;
  return LineClass::U1;
}

}  // namespace detail

/// NotInT1 when theta-perp meets Ann(A); R1 when the class lies in H^2_cd;
/// U1 otherwise. theta must not be a coboundary.
template <class F>
LineClass classify_line(const Algebra<F>& a, const Form<F>& theta) {
  return detail::classify_with(detail::line_context(a), a.dim(), theta);
}

/// A + V with V spanned by s new annihilating basis vectors and
/// e_i e_j = (old product) + sum_t theta_t(e_i, e_j) e_{n+t}.
template <class F>
Algebra<F> central_extension(const Algebra<F>& a, const std::vector<Form<F>>& thetas) {
  std::size_t n = a.dim(), s = thetas.size();
  Algebra<F> out(n + s, a.label().empty() ? std::string() : a.label() + "_ext");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, a.coeff(i, j, k));
      for (std::size_t t = 0; t < s; ++t) {
        if (thetas[t].rows() != n || thetas[t].cols() != n)
          throw DimensionMismatch("form size differs from algebra dimension");
        out.set(i, j, n + t, thetas[t](i, j));
      }
    }
  return out;
}

template <class F>
Algebra<F> central_extension(const Algebra<F>& a, const Form<F>& theta) {
  return central_extension(a, std::vector<Form<F>>{theta});
}

/// The classes of the thetas in H^2 are linearly dependent.
template <class F>
bool is_split(const Algebra<F>& a, const std::vector<Form<F>>& thetas) {
  if (!theta_perp(a, thetas).intersect(annihilator(a)).is_zero())
    throw PreconditionFailed("is_split: theta-perp meets Ann(A)");
  std::size_t n = a.dim();
  Subspace<F> b2 = b2_basis(a);
  std::vector<Vec<F>> vs = b2.basis();
  for (const auto& t : thetas) vs.push_back(form_vec(t));
  return Subspace<F>(n * n, vs).dim() - b2.dim() < thetas.size();
}

/// (phi theta)(x, y) = theta(phi x, phi y), i.e. gram -> phi^T gram phi.
template <class F>
Form<F> act(const Matrix<F>& phi, const Form<F>& theta) {
  if (phi.rows() != phi.cols() || phi.rows() != theta.rows() || theta.rows() != theta.cols())
    throw DimensionMismatch("act: phi and theta must be square of the same size");
  return phi.transpose() * theta * phi;
}

/// Sparse rendering "a*D(i,j)+..." with one-based indices; "0" for the zero form.
template <class F>
std::string form_str(const Form<F>& g) {
  std::string s;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const F& c = g(i, j);
      if (c.is_zero()) continue;
      std::string cs = c.str();
      bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find(' ') != std::string::npos;
      bool neg = !compound && cs[0] == '-';
      std::string mag = compound ? "(" + cs + ")" : (neg ? cs.substr(1) : cs);
      if (!s.empty()) s += neg ? "-" : "+";
      else if (neg) s += "-";
      if (mag != "1") s += mag + "*";
      s += "D(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  return s.empty() ? "0" : s;
}

namespace detail {

/// Value in a cocycle expression: a scalar or a form, never mixed.
template <class F>
struct FormValue {
  F scalar{0};
  std::optional<Vec<F>> form;

  friend FormValue operator+(const FormValue& a, const FormValue& b) { return combine(a, b, F(1)); }
  friend FormValue operator-(const FormValue& a, const FormValue& b) { return combine(a, b, F(-1)); }
  friend FormValue operator-(const FormValue& a) {
    FormValue r;
    r.scalar = -a.scalar;
    if (a.form) r.form = scale(F(-1), *a.form);
    return r;
  }
  friend FormValue operator*(const FormValue& a, const FormValue& b) {
    if (a.form && b.form) throw ParseError("cocycle expression multiplies two forms");
    FormValue r;
    if (a.form) r.form = scale(b.scalar, *a.form);
    else if (b.form) r.form = scale(a.scalar, *b.form);
    else r.scalar = a.scalar * b.scalar;
    return r;
  }
  static FormValue combine(const FormValue& a, const FormValue& b, const F& sign) {
    if (a.form.has_value() != b.form.has_value())
      throw ParseError("cocycle expression adds a scalar to a form");
    FormValue r;
    if (a.form) r.form = axpy(sign, *b.form, *a.form);
    else r.scalar = a.scalar + sign * b.scalar;
    return r;
  }
};

}  // namespace detail

/// Parses "a*D(i,j)+b*N(k)" (one-based indices) into a form on an n-dim
/// algebra. N(k) refers to nablas[k-1]; identifiers take values from `params`.
template <class F>
Form<F> parse_form(std::string_view text, std::size_t n, const std::vector<Form<F>>& nablas = {},
                   const std::map<std::string, F>& params = {}) {
  using V = detail::FormValue<F>;
  ExprEnv<V> env;
  env.number = [](const Rational& r) { V v; v.scalar = from_rational<F>(r); return v; };
  env.name = [&](const std::string& name) {
    V v;
    auto it = params.find(name);
    if (it != params.end()) v.scalar = it->second;
    else if (!field_constant<F>(name, v.scalar)) throw UnknownName("no value for '" + name + "'");
    return v;
  };
  env.call = [&](const std::string& name, const std::vector<int>& args) {
    V v;
    if (name == "D") {
      if (args.size() != 2) throw ParseError("D takes two indices");
      for (int x : args)
        if (x < 1 || static_cast<std::size_t>(x) > n)
          throw ParseError("D index " + std::to_string(x) + " outside 1.." + std::to_string(n));
      v.form = form_vec(delta<F>(n, args[0] - 1, args[1] - 1));
      return v;
    }
    if (name == "N") {
      if (args.size() != 1) throw ParseError("N takes one index");
      if (args[0] < 1 || static_cast<std::size_t>(args[0]) > nablas.size())
        throw UnknownName("N(" + std::to_string(args[0]) + ") is not defined for this base algebra");
      v.form = form_vec(nablas[args[0] - 1]);
      return v;
    }
    throw UnknownName("unknown cocycle atom '" + name + "'");
  };
  env.divide = [](const V& a, const V& b) {
    if (b.form) throw ParseError("cocycle expression divides by a form");
    V r;
    if (a.form) r.form = scale(b.scalar.inverse(), *a.form);
    else r.scalar = a.scalar / b.scalar;
    return r;
  };
  env.one = [] { V v; v.scalar = F(1); return v; };
  V v = evaluate(Expr::parse(text), env);
  if (!v.form) {
    if (v.scalar.is_zero()) return Form<F>(n, n);
    throw ParseError("cocycle expression '" + std::string(text) + "' is a nonzero scalar, not a form");
  }
  return vec_form(n, *v.form);
}

}  // namespace nilext
