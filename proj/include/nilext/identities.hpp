#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilext/algebra.hpp"
#include "nilext/error.hpp"
#include "nilext/linalg.hpp"
#include "nilext/rational.hpp"

namespace nilext {

/// Parenthesized product: a leaf carries a zero-based variable index, an inner
/// node has exactly two children.
struct Word {
  int var = -1;
  std::vector<Word> kids;

  static Word leaf(int v) {
    if (v < 0) throw PreconditionFailed("variable index must be non-negative");
    Word w;
    w.var = v;
    return w;
  }
  static Word mul(Word a, Word b) {
    Word w;
    w.kids.push_back(std::move(a));
    w.kids.push_back(std::move(b));
    return w;
  }

  bool is_leaf() const { return kids.empty(); }
  const Word& left() const { return kids.at(0); }
  const Word& right() const { return kids.at(1); }

  void leaves(std::vector<int>& out) const {
    if (is_leaf()) {
      out.push_back(var);
      return;
    }
    kids[0].leaves(out);
    kids[1].leaves(out);
  }

  std::string str() const {
    if (is_leaf()) return "x" + std::to_string(var + 1);
    return "(" + kids[0].str() + "*" + kids[1].str() + ")";
  }

  friend bool operator==(const Word& a, const Word& b) { return a.var == b.var && a.kids == b.kids; }
};

/// Multilinear identity sum c_t w_t = 0 in `arity` variables.
class Identity {
 public:
  using Term = std::pair<Rational, Word>;

  Identity(std::string name, int arity, std::vector<Term> terms)
      : name_(std::move(name)), arity_(arity), terms_(std::move(terms)) {
    if (arity_ < 1) throw PreconditionFailed("identity arity must be positive");
    for (const auto& [c, w] : terms_) {
      std::vector<int> seen;
      w.leaves(seen);
      std::vector<int> count(arity_, 0);
      for (int v : seen) {
        if (v >= arity_) throw PreconditionFailed(name_ + ": variable index beyond arity in " + w.str());
        ++count[v];
      }
      for (int k = 0; k < arity_; ++k)
        if (count[k] != 1) throw PreconditionFailed(name_ + ": word " + w.str() + " is not multilinear");
    }
  }

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// "+((x1*x2)*x3) -(x3*(x1*x2))"
  std::string str() const {
    std::string s;
    for (const auto& [c, w] : terms_) {
      if (!s.empty()) s += " ";
      Rational mag = c.sign() < 0 ? -c : c;
      s += c.sign() < 0 ? "-" : "+";
      if (!mag.is_one()) s += mag.str() + "*";
      s += w.str();
    }
    return s;
  }

 private:
  std::string name_;
  int arity_;
  std::vector<Term> terms_;
};

namespace detail {

inline Word X(int v) { return Word::leaf(v); }
inline Word M(Word a, Word b) { return Word::mul(std::move(a), std::move(b)); }

/// Appends c * P([a,b], c3) with P given by `p`, expanding [a,b] = ab - ba.
template <class P>
void add_bracket_term(std::vector<Identity::Term>& out, int a, int b, int c, P p) {
  for (auto& [k, w] : p(M(X(a), X(b)), X(c))) out.emplace_back(k, std::move(w));
  for (auto& [k, w] : p(M(X(b), X(a)), X(c))) out.emplace_back(-k, std::move(w));
}

template <class P>
std::vector<Identity::Term> cyclic_t(P p) {
  std::vector<Identity::Term> out;
  add_bracket_term(out, 0, 1, 2, p);
  add_bracket_term(out, 1, 2, 0, p);
  add_bracket_term(out, 2, 0, 1, p);
  return out;
}

}  // namespace detail

inline std::vector<std::string> builtin_names() {
  return {"commutative", "anticommutative", "cd1", "cd2", "cd3", "xy_z", "x_yz",
          "jacobi_commutator", "alia0", "alia1", "alia_opp"};
}

/// Built-in identities; brackets and Jordan products are expanded into words.
inline Identity builtin(const std::string& name) {
  using detail::M;
  using detail::X;
  using T = Identity::Term;
  const Rational one(1), minus(-1);
  if (name == "commutative") return Identity(name, 2, {T{one, M(X(0), X(1))}, T{minus, M(X(1), X(0))}});
  if (name == "anticommutative") return Identity(name, 2, {T{one, M(X(0), X(1))}, T{one, M(X(1), X(0))}});
  if (name == "xy_z") return Identity(name, 3, {T{one, M(M(X(0), X(1)), X(2))}});
  if (name == "x_yz") return Identity(name, 3, {T{one, M(X(0), M(X(1), X(2)))}});

  // Variables: x = 0, y = 1, a = 2, b = 3.
  const int x = 0, y = 1, a = 2, b = 3;
  if (name == "cd1")
    return Identity(name, 4,
                    {T{one, M(M(M(X(x), X(y)), X(a)), X(b))}, T{minus, M(M(M(X(x), X(y)), X(b)), X(a))},
                     T{minus, M(M(M(X(x), X(a)), X(b)), X(y))}, T{one, M(M(M(X(x), X(b)), X(a)), X(y))},
                     T{minus, M(X(x), M(M(X(y), X(a)), X(b)))}, T{one, M(X(x), M(M(X(y), X(b)), X(a)))}});
  if (name == "cd2")
    return Identity(name, 4,
                    {T{one, M(M(X(a), M(X(x), X(y))), X(b))}, T{minus, M(X(a), M(M(X(x), X(y)), X(b)))},
                     T{minus, M(M(M(X(a), X(x)), X(b)), X(y))}, T{one, M(M(X(a), M(X(x), X(b))), X(y))},
                     T{minus, M(X(x), M(M(X(a), X(y)), X(b)))}, T{one, M(X(x), M(X(a), M(X(y), X(b))))}});
  if (name == "cd3")
    return Identity(name, 4,
                    {T{one, M(X(a), M(X(b), M(X(x), X(y))))}, T{minus, M(X(b), M(X(a), M(X(x), X(y))))},
                     T{minus, M(M(X(a), M(X(b), X(x))), X(y))}, T{one, M(M(X(b), M(X(a), X(x))), X(y))},
                     T{minus, M(X(x), M(X(a), M(X(b), X(y))))}, T{one, M(X(x), M(X(b), M(X(a), X(y))))}});

  auto standard = [](Word u, Word v) { return std::vector<T>{T{Rational(1), M(std::move(u), std::move(v))}}; };
  auto opposite = [](Word u, Word v) { return std::vector<T>{T{Rational(1), M(std::move(v), std::move(u))}}; };
  auto jordan = [](Word u, Word v) {
    return std::vector<T>{T{Rational(1), M(u, v)}, T{Rational(1), M(v, u)}};
  };
  auto bracket = [](Word u, Word v) {
    return std::vector<T>{T{Rational(1), M(u, v)}, T{Rational(-1), M(v, u)}};
  };
  if (name == "alia0") return Identity(name, 3, detail::cyclic_t(standard));
  if (name == "alia1") return Identity(name, 3, detail::cyclic_t(jordan));
  if (name == "alia_opp") return Identity(name, 3, detail::cyclic_t(opposite));
  if (name == "jacobi_commutator") return Identity(name, 3, detail::cyclic_t(bracket));
  throw UnknownName("unknown identity '" + name + "'");
}

/// Named families of identities: "cd" = cd1, cd2, cd3 and "two_sided_alia" =
/// alia0 with alia_opp; any single built-in name is also accepted.
inline std::vector<Identity> builtin_set(const std::string& name) {
  if (name == "cd") return {builtin("cd1"), builtin("cd2"), builtin("cd3")};
  if (name == "two_sided_alia") return {builtin("alia0"), builtin("alia_opp")};
  return {builtin(name)};
}

template <class F>
Vec<F> evaluate_word(const Algebra<F>& a, const Word& w, const std::vector<Vec<F>>& assignment) {
  if (w.is_leaf()) {
    if (static_cast<std::size_t>(w.var) >= assignment.size())
      throw DimensionMismatch("assignment shorter than the word's variables");
    return assignment[w.var];
  }
  return a.multiply(evaluate_word(a, w.left(), assignment), evaluate_word(a, w.right(), assignment));
}

namespace detail {

/// Calls f(indices) for every tuple in {0..n-1}^k.
template <class Fn>
void for_each_tuple(std::size_t n, int k, Fn&& f) {
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    f(idx);
    int p = k - 1;
    while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
    if (p < 0) return;
  }
}

}  // namespace detail

template <class F>
Vec<F> evaluate_identity(const Algebra<F>& a, const Identity& id, const std::vector<Vec<F>>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(id.arity()))
    throw DimensionMismatch("identity " + id.name() + " takes " + std::to_string(id.arity()) + " arguments");
  Vec<F> acc(a.dim(), F(0));
  for (const auto& [c, w] : id.terms()) acc = axpy(from_rational<F>(c), evaluate_word(a, w, assignment), acc);
  return acc;
}

/// Checks the identity on all basis tuples, which suffices by multilinearity.
template <class F>
bool holds(const Algebra<F>& a, const Identity& id) {
  bool ok = true;
  std::size_t n = a.dim();
  detail::for_each_tuple(n, id.arity(), [&](const std::vector<std::size_t>& t) {
    if (!ok) return;
    std::vector<Vec<F>> args;
    for (auto i : t) args.push_back(unit_vec<F>(n, i));
    if (!is_zero_vec(evaluate_identity(a, id, args))) ok = false;
  });
  return ok;
}

template <class F>
bool holds(const Algebra<F>& a, const std::vector<Identity>& ids) {
  for (const auto& id : ids)
    if (!holds(a, id)) return false;
  return true;
}

/// First basis tuple (zero-based) on which the identity fails, if any.
template <class F>
std::optional<std::vector<std::size_t>> counterexample(const Algebra<F>& a, const Identity& id) {
  std::optional<std::vector<std::size_t>> found;
  std::size_t n = a.dim();
  detail::for_each_tuple(n, id.arity(), [&](const std::vector<std::size_t>& t) {
    if (found) return;
    std::vector<Vec<F>> args;
    for (auto i : t) args.push_back(unit_vec<F>(n, i));
    if (!is_zero_vec(evaluate_identity(a, id, args))) found = t;
  });
  return found;
}

/// Bilinear forms theta (flattened, lexicographic D(i,j) order) for which the
/// one-dimensional central extension by theta still satisfies the identity.
/// In each word the outermost product becomes theta and inner products are
/// computed in A.
template <class F>
Subspace<F> induced_cocycle_constraints(const Algebra<F>& a, const Identity& id) {
  if (!holds(a, id))
    throw PreconditionFailed("induced_cocycle_constraints: the base algebra does not satisfy " + id.name());
  std::size_t n = a.dim();
  std::vector<Vec<F>> rows;
  detail::for_each_tuple(n, id.arity(), [&](const std::vector<std::size_t>& t) {
    std::vector<Vec<F>> args;
    for (auto i : t) args.push_back(unit_vec<F>(n, i));
    Vec<F> row(n * n, F(0));
    for (const auto& [c, w] : id.terms()) {
      if (w.is_leaf()) throw PreconditionFailed("identity of degree one has no cocycle condition");
      Vec<F> l = evaluate_word(a, w.left(), args);
      Vec<F> r = evaluate_word(a, w.right(), args);
      F cf = from_rational<F>(c);
      for (std::size_t p = 0; p < n; ++p) {
        if (l[p].is_zero()) continue;
        for (std::size_t q = 0; q < n; ++q)
          if (!r[q].is_zero()) row[p * n + q] = row[p * n + q] + cf * l[p] * r[q];
      }
    }
    if (!is_zero_vec(row)) rows.push_back(std::move(row));
  });
  if (rows.empty()) return Subspace<F>::full(n * n);
  return kernel_basis(Matrix<F>::from_rows(rows, n * n));
}

template <class F>
Subspace<F> induced_cocycle_constraints(const Algebra<F>& a, const std::vector<Identity>& ids) {
  Subspace<F> s = Subspace<F>::full(a.dim() * a.dim());
  for (const auto& id : ids) s = s.intersect(induced_cocycle_constraints(a, id));
  return s;
}

template <class F>
bool is_cd(const Algebra<F>& a) {
  return holds(a, builtin_set("cd"));
}

}  // namespace nilext
