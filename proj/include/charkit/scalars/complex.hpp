#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "charkit/errors.hpp"

namespace charkit {

using Complex = std::complex<double>;

// Every approximate comparison in the library defaults to this tolerance.
inline constexpr double kDefaultTolerance = 1e-9;

inline bool approx_equal(const Complex& a, const Complex& b, double tol = kDefaultTolerance) {
  return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

inline bool approx_zero(const Complex& a, double tol = kDefaultTolerance) { return approx_equal(a, Complex{}, tol); }

inline Complex root_of_unity(std::int64_t e, std::uint32_t n) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(e % static_cast<std::int64_t>(n)) / n;
  return {std::cos(angle), std::sin(angle)};
}

inline void require_finite(const Complex& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DataError("non-finite complex value");
}

}  // namespace charkit
