#pragma once

#include <cstdint>

#include "charkit/core/ambient.hpp"

namespace charkit {

enum class QuadraticClass { zero, residue, non_residue };

inline const char* to_string(QuadraticClass c) {
  switch (c) {
    case QuadraticClass::zero: return "zero";
    case QuadraticClass::residue: return "residue";
    case QuadraticClass::non_residue: return "non-residue";
  }
  return "?";
}

// Euler's criterion.
inline QuadraticClass quadratic_class(std::uint64_t a, std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("quadratic_class requires a prime modulus");
  a %= p;
  if (a == 0) return QuadraticClass::zero;
  if (p == 2) return QuadraticClass::residue;
  return mod_pow(a, (p - 1) / 2, p) == 1 ? QuadraticClass::residue : QuadraticClass::non_residue;
}

// The smaller root of i^2 = -1 mod p, for p = 1 mod 4.
inline std::uint32_t sqrt_minus_one(std::uint32_t p) {
  if (!is_prime(p) || p % 4 != 1) throw DomainError("-1 has a square root only for primes p = 1 mod 4");
  for (std::uint64_t i = 1; i < p; ++i)
    if (i * i % p == p - 1) return static_cast<std::uint32_t>(i);
  throw InvariantViolation("no square root of -1 found");
}

// Smallest nonzero residue of the given class.
inline std::uint32_t smallest_of_class(std::uint32_t p, QuadraticClass c) {
  for (std::uint32_t a = 1; a < p; ++a)
    if (quadratic_class(a, p) == c) return a;
  throw DomainError("no element of class " + std::string(to_string(c)) + " mod " + std::to_string(p));
}

}  // namespace charkit
