#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "charkit/core/ambient.hpp"
#include "charkit/scalars/rational.hpp"

namespace charkit {

// An exact element of Q(xi_n), n = p^l, xi_n = exp(2 pi i / n), stored on
// the power basis xi^0 .. xi^(phi(n)-1). The minimal polynomial is
//   Phi_n(x) = sum_{k=0}^{p-1} x^(k p^(l-1)),
// so the representation is unique and is_zero() is an exact test.
class Cyclotomic {
 public:
  // Element of Q(xi_p); `coeffs` must have exactly p - 1 entries.
  Cyclotomic(std::uint32_t p, std::vector<Rational> coeffs) : Cyclotomic(p, 1, std::move(coeffs)) {}

  Cyclotomic(std::uint32_t p, std::uint32_t l, std::vector<Rational> coeffs) : p_(p), l_(l) {
    if (!is_prime(p)) throw DomainError("cyclotomic conductor base " + std::to_string(p) + " is not prime");
    if (l < 1) throw DomainError("cyclotomic conductor exponent must be at least 1");
    n_ = static_cast<std::uint32_t>(ipow(p, l));
    if (coeffs.size() != degree())
      throw DataError("cyclotomic element of conductor " + std::to_string(n_) + " needs " + std::to_string(degree()) +
                      " coefficients, got " + std::to_string(coeffs.size()));
    coeffs_ = std::move(coeffs);
  }

  static Cyclotomic zero(std::uint32_t p, std::uint32_t l = 1) { return from_rational(0, p, l); }

  static Cyclotomic from_rational(const Rational& q, std::uint32_t p, std::uint32_t l = 1) {
    Cyclotomic z(Unchecked{}, p, l);
    z.coeffs_[0] = q;
    return z;
  }

  // xi^e for any integer exponent.
  static Cyclotomic root_power(std::int64_t e, std::uint32_t p, std::uint32_t l = 1) {
    Cyclotomic z(Unchecked{}, p, l);
    std::vector<Rational> red(z.n_, 0);
    red[wrap(e, z.n_)] = 1;
    z.assign_reduced(red);
    return z;
  }

  // Reduces a redundant representation sum_{j<n} c_j xi^j.
  static Cyclotomic from_redundant(std::uint32_t p, std::uint32_t l, std::vector<Rational> redundant) {
    Cyclotomic z(Unchecked{}, p, l);
    if (redundant.size() != z.n_) throw DataError("redundant cyclotomic vector has the wrong length");
    z.assign_reduced(redundant);
    return z;
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t exponent() const { return l_; }
  std::uint32_t conductor() const { return n_; }
  std::size_t degree() const { return static_cast<std::size_t>(n_ - n_ / p_); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const Rational& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
      if (sgn(coeffs_[j]) != 0) return false;
    return true;
  }

  std::optional<Rational> rational_part() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
  }

  // Length-n coefficient vector (power basis padded with zeros).
  std::vector<Rational> redundant() const {
    std::vector<Rational> out(n_, 0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j] = coeffs_[j];
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    require_same(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    require_same(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  Cyclotomic& operator*=(const Rational& q) {
    for (Rational& c : coeffs_) c *= q;
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (Rational& c : a.coeffs_) c = -c;
    return a;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.require_same(b);
    std::vector<Rational> red(a.n_, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (sgn(b.coeffs_[j]) == 0) continue;
        red[(i + j) % a.n_] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    Cyclotomic z(Unchecked{}, a.p_, a.l_);
    z.assign_reduced(red);
    return z;
  }

  // Multiplication by xi^e.
  Cyclotomic times_root(std::int64_t e) const {
    std::vector<Rational> red(n_, 0);
    const std::uint32_t shift = wrap(e, n_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) red[(j + shift) % n_] = coeffs_[j];
    Cyclotomic z(Unchecked{}, p_, l_);
    z.assign_reduced(red);
    return z;
  }

  // Image under the automorphism xi -> xi^r (r a unit mod n).
  Cyclotomic galois(std::int64_t r) const {
    const std::uint32_t rr = wrap(r, n_);
    if (rr == 0 || rr % p_ == 0)
      throw DomainError("Galois index " + std::to_string(r) + " is not a unit mod " + std::to_string(n_));
    std::vector<Rational> red(n_, 0);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      red[static_cast<std::size_t>(std::uint64_t{j} * rr % n_)] += coeffs_[j];
    Cyclotomic z(Unchecked{}, p_, l_);
    z.assign_reduced(red);
    return z;
  }

  // Complex conjugation (the automorphism r = -1).
  Cyclotomic conj() const { return galois(static_cast<std::int64_t>(n_) - 1); }

  std::complex<double> embed() const {
    std::complex<double> z = 0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (sgn(coeffs_[j]) == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / n_;
      z += coeffs_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.p_ == b.p_ && a.l_ == b.l_ && a.coeffs_ == b.coeffs_;
  }

 private:
  struct Unchecked {};
  Cyclotomic(Unchecked, std::uint32_t p, std::uint32_t l)
      : p_(p), l_(l), n_(static_cast<std::uint32_t>(ipow(p, l))), coeffs_(n_ - n_ / p, 0) {}

  static std::uint32_t wrap(std::int64_t e, std::uint32_t n) {
    std::int64_t r = e % static_cast<std::int64_t>(n);
    if (r < 0) r += n;
    return static_cast<std::uint32_t>(r);
  }

  // x^j for j >= (p-1)m, m = p^(l-1), rewrites as -sum_{k<p-1} x^(j-(p-1)m+km).
  void assign_reduced(std::vector<Rational>& red) {
    const std::uint32_t m = n_ / p_;
    const std::size_t deg = degree();
    for (std::size_t j = deg; j < n_; ++j) {
      if (sgn(red[j]) == 0) continue;
      const std::size_t r = j - deg;
      for (std::uint32_t k = 0; k + 1 < p_; ++k) red[r + std::size_t{k} * m] -= red[j];
    }
    for (std::size_t j = 0; j < deg; ++j) coeffs_[j] = std::move(red[j]);
  }

  void require_same(const Cyclotomic& o) const {
    if (p_ != o.p_ || l_ != o.l_)
      throw DomainError("cyclotomic conductor mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }

  std::uint32_t p_;
  std::uint32_t l_;
  std::uint32_t n_;
  std::vector<Rational> coeffs_;
};

inline std::string to_string(const Cyclotomic& z) {
  std::string s;
  for (std::size_t j = 0; j < z.coeffs().size(); ++j) {
    if (sgn(z.coeffs()[j]) == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + z.coeffs()[j].get_str() + ")";
    if (j) s += "*xi^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

}  // namespace charkit
