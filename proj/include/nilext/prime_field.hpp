#pragma once

#include <cctype>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "nilext/error.hpp"

namespace nilext {

constexpr bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Residue class modulo a small prime P. The prime is part of the type.
template <int P>
class PrimeField {
  static_assert(is_prime(P) && P < 46341, "PrimeField needs a small prime modulus");

 public:
  static constexpr int modulus = P;

  PrimeField() = default;

  template <std::integral I>
  PrimeField(I n) : r_(normalize(static_cast<long long>(n))) {}  // NOLINT(google-explicit-constructor)

  int residue() const { return r_; }
  bool is_zero() const { return r_ == 0; }

  PrimeField inverse() const {
    if (r_ == 0) throw DivisionByZero();
    // a^(P-2) by square and multiply
    long long base = r_, acc = 1;
    for (int e = P - 2; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base % P;
      base = base * base % P;
    }
    return PrimeField(acc);
  }

  PrimeField& operator+=(PrimeField o) { r_ = (r_ + o.r_) % P; return *this; }
  PrimeField& operator-=(PrimeField o) { r_ = (r_ - o.r_ + P) % P; return *this; }
  PrimeField& operator*=(PrimeField o) { r_ = static_cast<int>(static_cast<long long>(r_) * o.r_ % P); return *this; }
  PrimeField& operator/=(PrimeField o) { return *this *= o.inverse(); }

  friend PrimeField operator+(PrimeField a, PrimeField b) { return a += b; }
  friend PrimeField operator-(PrimeField a, PrimeField b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, PrimeField b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, PrimeField b) { return a /= b; }
  friend PrimeField operator-(PrimeField a) { return PrimeField(-a.r_); }
  friend bool operator==(PrimeField a, PrimeField b) = default;

  /// "r mod p"
  std::string str() const { return std::to_string(r_) + " mod " + std::to_string(P); }

  /// Accepts "r mod p" (p must equal P) or a bare integer.
  static PrimeField parse(std::string_view text) {
    std::string s(text);
    auto at = s.find("mod");
    auto parse_int = [&](std::string t) -> long long {
      std::string u;
      for (char c : t)
        if (!std::isspace(static_cast<unsigned char>(c))) u.push_back(c);
      std::size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
      if (i == u.size()) throw ParseError("malformed prime-field literal '" + s + "'");
      for (std::size_t k = i; k < u.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(u[k])))
          throw ParseError("malformed prime-field literal '" + s + "'");
      return std::stoll(u);
    };
    if (at == std::string::npos) return PrimeField(parse_int(s));
    long long p = parse_int(s.substr(at + 3));
    if (p != P)
      throw FieldMismatch("literal '" + s + "' is not in F_" + std::to_string(P));
    return PrimeField(parse_int(s.substr(0, at)));
  }

  friend std::ostream& operator<<(std::ostream& os, PrimeField x) { return os << x.str(); }

 private:
  static int normalize(long long n) {
    long long r = n % P;
    return static_cast<int>(r < 0 ? r + P : r);
  }

  int r_ = 0;
};

}  // namespace nilext
