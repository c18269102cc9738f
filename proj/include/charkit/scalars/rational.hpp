#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <regex>
#include <string>

#include "charkit/errors.hpp"

namespace charkit {

// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

inline Rational make_rational(long num, unsigned long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_pow(const Rational& base, std::int64_t exp) {
  Rational result = 1;
  Rational b = exp < 0 ? Rational(1) / base : base;
  for (std::int64_t e = exp < 0 ? -exp : exp; e > 0; --e) result *= b;
  return result;
}

// "a/b" or "a" in lowest terms.
inline std::string format_rational(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw DataError("malformed rational \"" + text + "\"");
  mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den = 1;
  if (m[2].matched) den = mpz_class(m[2].str());
  if (den == 0) throw DataError("zero denominator in \"" + text + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace charkit
