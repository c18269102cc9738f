#pragma once

#include <string_view>

#include "charkit/core/ambient.hpp"
#include "charkit/scalars/complex.hpp"
#include "charkit/scalars/cyclotomic.hpp"
#include "charkit/scalars/rational.hpp"

namespace charkit {

// Uniform access to the three scalar kinds. `Spectral` is the type that
// Fourier coefficients of a function with values in the kind live in.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  using Spectral = Cyclotomic;
  static constexpr bool exact = true;
  static constexpr std::string_view kind = "rational";

  static Rational zero(const Ambient&) { return 0; }
  static Rational from_rational(const Rational& q, const Ambient&) { return q; }
  static bool is_zero(const Rational& x, double = kDefaultTolerance) { return sgn(x) == 0; }
  static bool equal(const Rational& a, const Rational& b, double = kDefaultTolerance) { return a == b; }
  static Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
  static Cyclotomic to_spectral(const Rational& x, const Ambient& amb) {
    return Cyclotomic::from_rational(x, amb.p(), amb.exponent());
  }
};

template <>
struct ScalarTraits<Cyclotomic> {
  using Spectral = Cyclotomic;
  static constexpr bool exact = true;
  static constexpr std::string_view kind = "cyclotomic";

  static Cyclotomic zero(const Ambient& amb) { return Cyclotomic::zero(amb.p(), amb.exponent()); }
  static Cyclotomic from_rational(const Rational& q, const Ambient& amb) {
    return Cyclotomic::from_rational(q, amb.p(), amb.exponent());
  }
  static bool is_zero(const Cyclotomic& x, double = kDefaultTolerance) { return x.is_zero(); }
  static bool equal(const Cyclotomic& a, const Cyclotomic& b, double = kDefaultTolerance) { return a == b; }
  static Complex to_complex(const Cyclotomic& x) { return x.embed(); }
  static Cyclotomic to_spectral(const Cyclotomic& x, const Ambient&) { return x; }
};

template <>
struct ScalarTraits<Complex> {
  using Spectral = Complex;
  static constexpr bool exact = false;
  static constexpr std::string_view kind = "complex";

  static Complex zero(const Ambient&) { return {}; }
  static Complex from_rational(const Rational& q, const Ambient&) { return {q.get_d(), 0.0}; }
  static bool is_zero(const Complex& x, double tol = kDefaultTolerance) { return approx_zero(x, tol); }
  static bool equal(const Complex& a, const Complex& b, double tol = kDefaultTolerance) {
    return approx_equal(a, b, tol);
  }
  static Complex to_complex(const Complex& x) { return x; }
  static Complex to_spectral(const Complex& x, const Ambient&) { return x; }
};

// x * xi^e in the spectral type of T.
inline Cyclotomic times_root(const Cyclotomic& x, std::int64_t e, const Ambient&) { return x.times_root(e); }
inline Complex times_root(const Complex& x, std::int64_t e, const Ambient& amb) {
  return x * root_of_unity(e, amb.modulus());
}

inline Rational scale_value(const Rational& x, const Rational& q) { return x * q; }
inline Cyclotomic scale_value(const Cyclotomic& x, const Rational& q) { return x * q; }
inline Complex scale_value(const Complex& x, const Rational& q) { return x * q.get_d(); }

}  // namespace charkit
