#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "charkit/errors.hpp"

namespace charkit {

using Residue = std::uint32_t;

// Upper bound on the number of grid points an Ambient may describe. Dense
// exact grids above this size are far outside desk scale.
inline constexpr std::size_t kMaxGridPoints = std::size_t{1} << 24;

// Upper bound on the number of objects (lines, subspaces) produced by a
// single enumeration.
inline constexpr std::size_t kMaxEnumeration = std::size_t{1} << 22;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Inverse of a unit modulo `mod` (extended Euclid). Throws on non-units.
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(a % mod);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DomainError("element " + std::to_string(a) + " is not a unit mod " + std::to_string(mod));
  if (t < 0) t += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t);
}

// base^exp into `out`; false on 64-bit overflow.
inline bool checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t& out) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) return false;
    result *= base;
  }
  out = result;
  return true;
}

inline std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 0;
  if (!checked_pow(base, exp, out)) throw CapacityError("integer power overflow");
  return out;
}

// A point of (Z_n)^d, n = p^l. Coordinates are kept reduced.
struct Point {
  std::vector<Residue> coords;

  Point() = default;
  explicit Point(std::vector<Residue> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Residue> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  Residue operator[](std::size_t i) const { return coords[i]; }
  Residue& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const {
    for (Residue c : coords)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline std::string to_string(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

// The ambient group (Z_{p^l})^d. With l = 1 this is the vector space Z_p^d;
// the field-only geometry (lines, subspaces) requires l = 1.
class Ambient {
 public:
  Ambient(std::uint32_t p, std::uint32_t d) : Ambient(p, 1, d) {}

  static Ambient ring(std::uint32_t p, std::uint32_t l, std::uint32_t d) { return Ambient(p, l, d); }

  std::uint32_t p() const { return p_; }
  std::uint32_t d() const { return d_; }
  std::uint32_t exponent() const { return l_; }
  std::uint32_t modulus() const { return n_; }
  std::size_t size() const { return size_; }
  bool is_field() const { return l_ == 1; }

  void require_field(const char* what) const {
    if (!is_field())
      throw DomainError(std::string(what) + " requires a prime field (exponent 1), got modulus " +
                        std::to_string(n_));
  }

  std::size_t index(const Point& x) const {
    check(x);
    std::size_t idx = 0;
    for (Residue c : x.coords) idx = idx * n_ + c;
    return idx;
  }

  Point point(std::size_t idx) const {
    Point x;
    x.coords.assign(d_, 0);
    for (std::size_t i = d_; i-- > 0;) {
      x.coords[i] = static_cast<Residue>(idx % n_);
      idx /= n_;
    }
    return x;
  }

  void check(const Point& x) const {
    if (x.size() != d_)
      throw DataError("point " + to_string(x) + " has dimension " + std::to_string(x.size()) + ", expected " +
                      std::to_string(d_));
    for (Residue c : x.coords)
      if (c >= n_) throw DataError("point " + to_string(x) + " has a coordinate outside [0," + std::to_string(n_) + ")");
  }

  Point zero() const { return Point(std::vector<Residue>(d_, 0)); }

  Point reduce(const std::vector<std::int64_t>& raw) const {
    Point x;
    x.coords.reserve(raw.size());
    for (std::int64_t v : raw) {
      std::int64_t r = v % static_cast<std::int64_t>(n_);
      if (r < 0) r += n_;
      x.coords.push_back(static_cast<Residue>(r));
    }
    check(x);
    return x;
  }

  Residue dot(const Point& a, const Point& b) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < d_; ++i) s = (s + std::uint64_t{a[i]} * b[i]) % n_;
    return static_cast<Residue>(s);
  }

  Point add(const Point& a, const Point& b) const {
    Point r = a;
    for (std::size_t i = 0; i < d_; ++i) r[i] = static_cast<Residue>((std::uint64_t{a[i]} + b[i]) % n_);
    return r;
  }

  Point sub(const Point& a, const Point& b) const {
    Point r = a;
    for (std::size_t i = 0; i < d_; ++i) r[i] = static_cast<Residue>((std::uint64_t{a[i]} + n_ - b[i]) % n_);
    return r;
  }

  Point neg(const Point& a) const { return sub(zero(), a); }

  Point scale(std::uint64_t t, const Point& a) const {
    Point r = a;
    t %= n_;
    for (std::size_t i = 0; i < d_; ++i) r[i] = static_cast<Residue>(t * a[i] % n_);
    return r;
  }

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.p_ == b.p_ && a.l_ == b.l_ && a.d_ == b.d_;
  }

 private:
  Ambient(std::uint32_t p, std::uint32_t l, std::uint32_t d) : p_(p), l_(l), d_(d) {
    if (!is_prime(p)) throw DomainError("modulus base " + std::to_string(p) + " is not prime");
    if (d < 1) throw DomainError("dimension must be at least 1");
    if (l < 1) throw DomainError("modulus exponent must be at least 1");
    std::uint64_t n = 0, size = 0;
    if (!checked_pow(p, l, n) || n > std::numeric_limits<std::uint32_t>::max())
      throw CapacityError("modulus p^l does not fit in 32 bits");
    if (!checked_pow(n, d, size) || size > kMaxGridPoints)
      throw CapacityError("grid of " + std::to_string(n) + "^" + std::to_string(d) + " points exceeds the limit of " +
                          std::to_string(kMaxGridPoints));
    n_ = static_cast<std::uint32_t>(n);
    size_ = static_cast<std::size_t>(size);
  }

  std::uint32_t p_;
  std::uint32_t l_;
  std::uint32_t d_;
  std::uint32_t n_ = 0;
  std::size_t size_ = 0;
};

inline void require_same_ambient(const Ambient& a, const Ambient& b) {
  if (!(a == b)) throw DataError("ambient mismatch");
}

}  // namespace charkit
