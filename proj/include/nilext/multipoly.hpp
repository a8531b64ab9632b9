#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilext/error.hpp"
#include "nilext/field.hpp"
#include "nilext/rational.hpp"

namespace nilext {

/// Polynomial in named variables with rational coefficients.
///
/// Monomials are sparse maps from variable name to a positive exponent, so the
/// term order is the lexicographic order on those maps and two equal
/// polynomials always hold identical term maps. The declared variable set is
/// kept separately: substitution into an undeclared name is an error even when
/// the polynomial happens not to depend on it.
class MultiPoly {
 public:
  using Monomial = std::map<std::string, int>;
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  template <std::integral I>
  MultiPoly(I c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.terms_[Monomial{{name, 1}}] = Rational(1);
    p.vars_.insert(name);
    return p;
  }

  /// c * prod(name^exp)
  static MultiPoly monomial(const Rational& c, const Monomial& m) {
    MultiPoly p;
    for (const auto& [v, e] : m) {
      if (e < 0) throw PreconditionFailed("negative exponent in monomial");
      p.vars_.insert(v);
    }
    Monomial clean;
    for (const auto& [v, e] : m)
      if (e > 0) clean[v] = e;
    if (!c.is_zero()) p.terms_[clean] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  const std::set<std::string>& variables() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (const auto& [v, e] : m) t += e;
      d = std::max(d, t);
    }
    return d;
  }
  int degree_in(const std::string& var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
  }

  /// Declares extra variables without changing the value.
  MultiPoly& declare(const std::set<std::string>& names) {
    vars_.insert(names.begin(), names.end());
    return *this;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    vars_.insert(o.vars_.begin(), o.vars_.end());
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    vars_.insert(o.vars_.begin(), o.vars_.end());
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly() - a; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.vars_ = a.vars_;
    r.vars_.insert(b.vars_.begin(), b.vars_.end());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (const auto& [v, e] : mb) m[v] += e;
        r.accumulate(m, ca * cb);
      }
    return r;
  }

  /// Division by a nonzero constant.
  MultiPoly divided_by(const Rational& c) const {
    if (c.is_zero()) throw DivisionByZero();
    MultiPoly r = *this;
    for (auto& [m, v] : r.terms_) v /= c;
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r(1), base = *this;
    r.vars_ = vars_;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return r;
  }

  /// Canonical-form comparison (declared variables are ignored).
  bool equals(const MultiPoly& o) const { return terms_ == o.terms_; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.equals(b); }

  /// Simultaneous substitution. Every key must be a declared variable.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const {
    for (const auto& [v, p] : values)
      if (!vars_.count(v)) throw UnknownName("substitution target '" + v + "' is not a variable of the polynomial");
    MultiPoly r;
    for (const auto& v : vars_)
      if (!values.count(v)) r.vars_.insert(v);
    for (const auto& [v, p] : values) r.vars_.insert(p.vars_.begin(), p.vars_.end());
    for (const auto& [m, c] : terms_) {
      MultiPoly t(c);
      Monomial rest;
      for (const auto& [v, e] : m) {
        auto it = values.find(v);
        if (it == values.end())
          rest[v] = e;
        else
          t *= it->second.pow(static_cast<unsigned>(e));
      }
      r += t * monomial(Rational(1), rest);
    }
    return r;
  }

  /// Full evaluation in a field; every variable occurring in a term must be bound.
  template <class F>
  F evaluate(const std::map<std::string, F>& values) const {
    F acc(0);
    for (const auto& [m, c] : terms_) {
      F t = from_rational<F>(c);
      for (const auto& [v, e] : m) {
        auto it = values.find(v);
        if (it == values.end()) throw UnknownName("no value for variable '" + v + "'");
        for (int k = 0; k < e; ++k) t = t * it->second;
      }
      acc = acc + t;
    }
    return acc;
  }

  /// Coefficient of a variable in a polynomial that is linear in that set;
  /// returns the polynomial obtained by differentiating once in var.
  MultiPoly coefficient_of(const std::string& var) const {
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(var);
      if (it == m.end() || it->second != 1) continue;
      Monomial rest = m;
      rest.erase(var);
      r.accumulate(rest, c);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      int da = 0, db = 0;
      for (const auto& [v, e] : a.first) da += e;
      for (const auto& [v, e] : b.first) db += e;
      return da > db;
    });
    for (const auto& [m, c] : ordered) {
      bool neg = c.sign() < 0;
      Rational mag = neg ? -c : c;
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      std::string body;
      for (const auto& [v, e] : m) {
        if (!body.empty()) body += "*";
        body += v;
        if (e > 1) body += "^" + std::to_string(e);
      }
      if (body.empty())
        out += mag.str();
      else if (mag.is_one())
        out += body;
      else
        out += mag.str() + "*" + body;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

 private:
  void accumulate(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [v, e] : m) vars_.insert(v);
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
  std::set<std::string> vars_;
};

}  // namespace nilext
