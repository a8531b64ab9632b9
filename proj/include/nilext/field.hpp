#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>
#include <variant>

#include "nilext/cyclotomic.hpp"
#include "nilext/error.hpp"
#include "nilext/prime_field.hpp"
#include "nilext/rational.hpp"

namespace nilext {

template <class F>
concept Field = std::regular<F> && requires(const F a, const F b) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<F>;
  { a.str() } -> std::convertible_to<std::string>;
  F(0);
  F(1);
};

template <class F>
struct field_traits;

template <>
struct field_traits<Rational> {
  static std::string name() { return "Q"; }
  static Rational from_rational(const Rational& r) { return r; }
  static Rational parse(std::string_view s) { return Rational::parse(s); }
  static constexpr bool is_finite = false;
  static constexpr int characteristic = 0;
};

template <>
struct field_traits<Cyclotomic12> {
  static std::string name() { return "QZ12"; }
  static Cyclotomic12 from_rational(const Rational& r) { return Cyclotomic12(r); }
  static Cyclotomic12 parse(std::string_view s) { return Cyclotomic12::parse(s); }
  static constexpr bool is_finite = false;
  static constexpr int characteristic = 0;
};

template <int P>
struct field_traits<PrimeField<P>> {
  static std::string name() { return "F" + std::to_string(P); }
  /// Reduction of p/q modulo P; throws DivisionByZero when P divides q.
  static PrimeField<P> from_rational(const Rational& r) {
    mpz_class num = r.numerator(), den = r.denominator();
    long n = static_cast<long>(mpz_fdiv_ui(num.get_mpz_t(), P));
    long d = static_cast<long>(mpz_fdiv_ui(den.get_mpz_t(), P));
    if (d == 0)
      throw DivisionByZero("denominator of " + r.str() + " vanishes in F" + std::to_string(P));
    return PrimeField<P>(n) / PrimeField<P>(d);
  }
  static PrimeField<P> parse(std::string_view s) { return PrimeField<P>::parse(s); }
  static constexpr bool is_finite = true;
  static constexpr int characteristic = P;
};

template <class F>
F from_rational(const Rational& r) {
  return field_traits<F>::from_rational(r);
}

/// A scalar whose field is only known at run time (CLI input).
using ScalarValue =
    std::variant<Rational, Cyclotomic12, PrimeField<2>, PrimeField<3>, PrimeField<5>, PrimeField<7>>;

enum class ArithOp { add, sub, mul, div };

inline std::string field_name(const ScalarValue& v) {
  return std::visit([](const auto& x) { return field_traits<std::decay_t<decltype(x)>>::name(); }, v);
}

inline ScalarValue field_arith(const ScalarValue& a, const ScalarValue& b, ArithOp op) {
  if (a.index() != b.index())
    throw FieldMismatch("operands live in " + field_name(a) + " and " + field_name(b));
  return std::visit(
      [&](const auto& x) -> ScalarValue {
        using F = std::decay_t<decltype(x)>;
        const F& y = std::get<F>(b);
        switch (op) {
          case ArithOp::add: return x + y;
          case ArithOp::sub: return x - y;
          case ArithOp::mul: return x * y;
          case ArithOp::div: return x / y;
        }
        return x;
      },
      a);
}

inline std::string to_string(const ScalarValue& v) {
  return std::visit([](const auto& x) { return x.str(); }, v);
}

/// Parses a literal for the named field ("Q", "QZ12", "F2", "F3", "F5", "F7").
inline ScalarValue parse_scalar(std::string_view field, std::string_view text) {
  if (field == "Q") return Rational::parse(text);
  if (field == "QZ12") return Cyclotomic12::parse(text);
  if (field == "F2") return PrimeField<2>::parse(text);
  if (field == "F3") return PrimeField<3>::parse(text);
  if (field == "F5") return PrimeField<5>::parse(text);
  if (field == "F7") return PrimeField<7>::parse(text);
  throw UnknownName("unknown field '" + std::string(field) + "'");
}

}  // namespace nilext
