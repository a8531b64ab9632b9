#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "nilext/error.hpp"
#include "nilext/field.hpp"
#include "nilext/multipoly.hpp"
#include "nilext/rational.hpp"

namespace nilext {

/// Replaces the Unicode spellings used in printed tables (Greek parameter
/// names, minus sign, superscripts, middle dot) by their ASCII forms.
inline std::string ascii_expression(std::string_view text) {
  static const std::pair<std::string_view, std::string_view> table[] = {
      {"\xCE\xBB", "lambda"}, {"\xCE\xB1", "alpha"},  {"\xCE\xB2", "beta"},
      {"\xCE\xB3", "gamma"},  {"\xCE\xB4", "delta"},  {"\xCE\xB5", "epsilon"},
      {"\xCE\xB6", "zeta"},   {"\xCF\x89", "omega"},  {"\xE2\x88\x92", "-"},
      {"\xC2\xB7", "*"},      {"\xC2\xB2", "^2"},     {"\xC2\xB3", "^3"},
      {"\xE2\x81\xB4", "^4"},
  };
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    bool hit = false;
    for (const auto& [from, to] : table) {
      if (text.substr(i, from.size()) == from) {
        out += to;
        i += from.size();
        hit = true;
        break;
      }
    }
    if (!hit) out.push_back(text[i++]);
  }
  return out;
}

/// Parsed arithmetic expression: integers, identifiers, calls such as D(1,3)
/// or N(2) with integer arguments, + - * / ^ and parentheses.
struct Expr {
  enum class Kind { number, name, call, add, sub, mul, div, neg, pow };

  Kind kind = Kind::number;
  Rational value;
  std::string name;
  std::vector<int> call_args;
  int exponent = 0;
  std::vector<Expr> kids;

  static Expr parse(std::string_view text);

  /// Identifiers that occur outside call atoms.
  void collect_names(std::vector<std::string>& out) const {
    if (kind == Kind::name) {
      for (const auto& n : out)
        if (n == name) return;
      out.push_back(name);
    }
    for (const auto& k : kids) k.collect_names(out);
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    collect_names(out);
    return out;
  }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  Expr run() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("expression '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr binary(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.kids.push_back(std::move(a));
    e.kids.push_back(std::move(b));
    return e;
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (eat('+'))
        e = binary(Expr::Kind::add, std::move(e), product());
      else if (eat('-'))
        e = binary(Expr::Kind::sub, std::move(e), product());
      else
        return e;
    }
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      if (eat('*'))
        e = binary(Expr::Kind::mul, std::move(e), unary());
      else if (eat('/'))
        e = binary(Expr::Kind::div, std::move(e), unary());
      else
        return e;
    }
  }

  Expr unary() {
    if (eat('-')) {
      Expr e;
      e.kind = Expr::Kind::neg;
      e.kids.push_back(unary());
      return e;
    }
    if (eat('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!eat('^')) return base;
    bool negative = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer literal");
    Expr e;
    e.kind = Expr::Kind::pow;
    e.exponent = std::stoi(s_.substr(start, pos_ - start)) * (negative ? -1 : 1);
    e.kids.push_back(std::move(base));
    return e;
  }

  int integer_arg() {
    skip();
    bool negative = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("call arguments must be integer literals");
    return std::stoi(s_.substr(start, pos_ - start)) * (negative ? -1 : 1);
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Expr e;
      e.kind = Expr::Kind::number;
      e.value = Rational(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      Expr e;
      e.name = s_.substr(start, pos_ - start);
      if (eat('(')) {
        e.kind = Expr::Kind::call;
        if (!eat(')')) {
          do e.call_args.push_back(integer_arg());
          while (eat(','));
          if (!eat(')')) fail("missing ')' after call arguments");
        }
      } else {
        e.kind = Expr::Kind::name;
      }
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr Expr::parse(std::string_view text) {
  std::string s = ascii_expression(text);
  bool blank = true;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) throw ParseError("empty expression");
  return detail::ExprParser(s).run();
}

/// Evaluation environment. T must provide + - * unary-minus; division and
/// negative powers go through `divide`.
template <class T>
struct ExprEnv {
  std::function<T(const Rational&)> number;
  std::function<T(const std::string&)> name;
  std::function<T(const std::string&, const std::vector<int>&)> call;
  std::function<T(const T&, const T&)> divide;
  std::function<T()> one;
};

template <class T>
T evaluate(const Expr& e, const ExprEnv<T>& env) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return env.number(e.value);
    case K::name: return env.name(e.name);
    case K::call:
      if (!env.call) throw UnknownName("call '" + e.name + "(...)' is not allowed here");
      return env.call(e.name, e.call_args);
    case K::add: return evaluate(e.kids[0], env) + evaluate(e.kids[1], env);
    case K::sub: return evaluate(e.kids[0], env) - evaluate(e.kids[1], env);
    case K::mul: return evaluate(e.kids[0], env) * evaluate(e.kids[1], env);
    case K::div: return env.divide(evaluate(e.kids[0], env), evaluate(e.kids[1], env));
    case K::neg: return -evaluate(e.kids[0], env);
    case K::pow: {
      T base = evaluate(e.kids[0], env);
      T acc = env.one();
      int k = e.exponent < 0 ? -e.exponent : e.exponent;
      for (int j = 0; j < k; ++j) acc = acc * base;
      return e.exponent < 0 ? env.divide(env.one(), acc) : acc;
    }
  }
  throw ParseError("corrupt expression tree");
}

/// Field constants available to scalar expressions in F. Cyclotomic12 adds
/// zeta, i and omega.
template <class F>
inline bool field_constant(const std::string& name, F& out) {
  if constexpr (std::is_same_v<F, Cyclotomic12>) {
    if (name == "zeta" || name == "z") { out = Cyclotomic12::zeta(); return true; }
    if (name == "i") { out = Cyclotomic12::i(); return true; }
    if (name == "omega") { out = Cyclotomic12::omega(); return true; }
  }
  (void)name;
  (void)out;
  return false;
}

/// Evaluates a scalar expression with the given variable bindings.
template <class F>
F evaluate_scalar(const Expr& e, const std::map<std::string, F>& values) {
  ExprEnv<F> env;
  env.number = [](const Rational& r) { return from_rational<F>(r); };
  env.name = [&](const std::string& n) -> F {
    auto it = values.find(n);
    if (it != values.end()) return it->second;
    F c;
    if (field_constant<F>(n, c)) return c;
    throw UnknownName("no value for '" + n + "'");
  };
  env.divide = [](const F& a, const F& b) { return a / b; };
  env.one = [] { return F(1); };
  return evaluate(e, env);
}

template <class F>
F evaluate_scalar(std::string_view text, const std::map<std::string, F>& values) {
  return evaluate_scalar(Expr::parse(text), values);
}

/// Converts an expression into a polynomial; every division must be by a
/// nonzero constant.
inline MultiPoly to_multipoly(const Expr& e) {
  ExprEnv<MultiPoly> env;
  env.number = [](const Rational& r) { return MultiPoly(r); };
  env.name = [](const std::string& n) { return MultiPoly::variable(n); };
  env.divide = [](const MultiPoly& a, const MultiPoly& b) {
    if (!b.is_constant())
      throw ParseError("division by the non-constant polynomial " + b.str());
    return a.divided_by(b.constant_term());
  };
  env.one = [] { return MultiPoly(1); };
  return evaluate(e, env);
}

inline MultiPoly to_multipoly(std::string_view text) { return to_multipoly(Expr::parse(text)); }

}  // namespace nilext
