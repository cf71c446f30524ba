#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hwe/error.hpp"

namespace hwe {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num", "num/den" or "-num/den". The result is canonicalized.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorKind::ParseError, "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start >= part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  Rational out;
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw bad();
    out = Rational(Integer(s[0] == '+' ? s.substr(1) : s), 1);
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
    Integer d(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    out = Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
  }
  out.canonicalize();
  return out;
}

/// Canonical text: "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string format_rational(const Rational& value) { return value.get_str(); }

/// q^e for any integer e; negative exponents give the reciprocal.
inline Rational rational_power(const Integer& base, long exponent) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  Rational r(Integer(1), p);
  r.canonicalize();
  return r;
}

inline Integer integer_power(const Integer& base, unsigned long exponent) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), exponent);
  return p;
}

inline Integer integer_power(long base, unsigned long exponent) { return integer_power(Integer(base), exponent); }

}  // namespace hwe
