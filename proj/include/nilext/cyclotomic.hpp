#pragma once

#include <array>
#include <cctype>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilext/error.hpp"
#include "nilext/rational.hpp"

namespace nilext {

/// Element a + b z + c z^2 + d z^3 of Q(z), z a primitive 12th root of unity.
///
/// The minimal polynomial of z is x^4 - x^2 + 1, so every element has a unique
/// reduced representation with four rational coordinates. The field contains
/// i = z^3 and the cube root of unity w = z^2 - 1.
class Cyclotomic12 {
 public:
  using Coefficients = std::array<Rational, 4>;

  Cyclotomic12() = default;

  template <std::integral I>
  Cyclotomic12(I n) : c_{Rational(n), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)

  Cyclotomic12(const Rational& r) : c_{r, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)

  explicit Cyclotomic12(Coefficients c) : c_(std::move(c)) {}

  static Cyclotomic12 zeta() { return Cyclotomic12(Coefficients{0, 1, 0, 0}); }
  static Cyclotomic12 i() { return Cyclotomic12(Coefficients{0, 0, 0, 1}); }
  static Cyclotomic12 omega() { return Cyclotomic12(Coefficients{-1, 0, 1, 0}); }

  /// z^k for any integer k (z^12 = 1).
  static Cyclotomic12 zeta_power(int k) {
    k %= 12;
    if (k < 0) k += 12;
    Cyclotomic12 r(1);
    for (int j = 0; j < k; ++j) r *= zeta();
    return r;
  }

  const Rational& coeff(std::size_t k) const { return c_.at(k); }
  const Coefficients& coefficients() const { return c_; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  const Rational& rational_part() const { return c_[0]; }

  Cyclotomic12& operator+=(const Cyclotomic12& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Cyclotomic12& operator-=(const Cyclotomic12& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Cyclotomic12& operator*=(const Cyclotomic12& o) {
    std::array<Rational, 7> p{};
    for (std::size_t a = 0; a < 4; ++a) {
      if (c_[a].is_zero()) continue;
      for (std::size_t b = 0; b < 4; ++b)
        if (!o.c_[b].is_zero()) p[a + b] += c_[a] * o.c_[b];
    }
    c_ = reduce(p);
    return *this;
  }
  Cyclotomic12& operator/=(const Cyclotomic12& o) { return *this *= o.inverse(); }

  friend Cyclotomic12 operator+(Cyclotomic12 a, const Cyclotomic12& b) { return a += b; }
  friend Cyclotomic12 operator-(Cyclotomic12 a, const Cyclotomic12& b) { return a -= b; }
  friend Cyclotomic12 operator*(Cyclotomic12 a, const Cyclotomic12& b) { return a *= b; }
  friend Cyclotomic12 operator/(Cyclotomic12 a, const Cyclotomic12& b) { return a /= b; }
  friend Cyclotomic12 operator-(const Cyclotomic12& a) {
    return Cyclotomic12(Coefficients{-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]});
  }
  friend bool operator==(const Cyclotomic12& a, const Cyclotomic12& b) { return a.c_ == b.c_; }

  /// Reduces an arbitrary-length coefficient list modulo x^4 - x^2 + 1.
  static Coefficients reduce(std::span<const Rational> poly) {
    std::vector<Rational> p(poly.begin(), poly.end());
    for (std::size_t d = p.size(); d-- > 4;) {
      if (p[d].is_zero()) continue;
      // x^d = x^(d-4) * (x^2 - 1)
      Rational c = p[d];
      p[d] = 0;
      p[d - 2] += c;
      p[d - 4] -= c;
    }
    p.resize(4);
    return Coefficients{p[0], p[1], p[2], p[3]};
  }

  Cyclotomic12 inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Solve (multiplication by *this) * b = 1 as a 4x4 rational system.
    std::array<std::array<Rational, 5>, 4> m{};
    Cyclotomic12 basis(1);
    for (std::size_t col = 0; col < 4; ++col) {
      Cyclotomic12 img = *this * basis;
      for (std::size_t row = 0; row < 4; ++row) m[row][col] = img.c_[row];
      basis *= zeta();
    }
    m[0][4] = 1;
    for (std::size_t col = 0; col < 4; ++col) {
      std::size_t piv = col;
      while (m[piv][col].is_zero()) ++piv;
      std::swap(m[piv], m[col]);
      Rational inv = m[col][col].inverse();
      for (auto& v : m[col]) v *= inv;
      for (std::size_t r = 0; r < 4; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        Rational f = m[r][col];
        for (std::size_t k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
      }
    }
    return Cyclotomic12(Coefficients{m[0][4], m[1][4], m[2][4], m[3][4]});
  }

  /// Sparse rendering, e.g. "1/2-z^2" or "3*z"; "0" for zero.
  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < 4; ++k) {
      const Rational& c = c_[k];
      if (c.is_zero()) continue;
      std::string mag = c.sign() < 0 ? (-c).str() : c.str();
      if (!out.empty() || c.sign() < 0) out += c.sign() < 0 ? "-" : "+";
      if (k == 0) {
        out += mag;
      } else {
        if (mag != "1") out += mag + "*";
        out += k == 1 ? "z" : "z^" + std::to_string(k);
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Parses sums of terms "c", "c*z^k", "z^k", "c*z" (0 <= k, reduced mod the
  /// minimal polynomial). Coefficients are rational literals "p" or "p/q".
  static Cyclotomic12 parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty cyclotomic literal");
    std::vector<Rational> poly(4);
    std::size_t pos = 0;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      }
      std::size_t end = pos;
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
      std::string term = s.substr(pos, end - pos);
      if (term.empty()) throw ParseError("malformed cyclotomic literal '" + std::string(text) + "'");
      Rational coef(1);
      std::size_t power = 0;
      auto zpos = term.find('z');
      if (zpos == std::string::npos) {
        coef = Rational::parse(term);
      } else {
        std::string head = term.substr(0, zpos);
        std::string tail = term.substr(zpos + 1);
        if (!head.empty()) {
          if (head.back() != '*') throw ParseError("expected '*' before z in '" + term + "'");
          coef = Rational::parse(head.substr(0, head.size() - 1));
        }
        power = 1;
        if (!tail.empty()) {
          if (tail[0] != '^' || tail.size() < 2) throw ParseError("malformed power in '" + term + "'");
          for (std::size_t k = 1; k < tail.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(tail[k])))
              throw ParseError("malformed power in '" + term + "'");
          power = std::stoul(tail.substr(1));
        }
      }
      if (poly.size() <= power) poly.resize(power + 1);
      poly[power] += sign < 0 ? -coef : coef;
      pos = end;
    }
    return Cyclotomic12(reduce(poly));
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic12& x) { return os << x.str(); }

 private:
  Coefficients c_{0, 0, 0, 0};
};

/// All n-th roots of unity z^(12k/n), k = 0..n-1, for n dividing 12.
inline std::vector<Cyclotomic12> roots_of_unity(int n) {
  if (n <= 0 || 12 % n != 0) throw PreconditionFailed("roots_of_unity: n must divide 12");
  std::vector<Cyclotomic12> out;
  for (int k = 0; k < n; ++k) out.push_back(Cyclotomic12::zeta_power(12 / n * k));
  return out;
}

}  // namespace nilext
