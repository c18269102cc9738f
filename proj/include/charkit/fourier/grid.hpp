#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "charkit/core/ambient.hpp"
#include "charkit/scalars/traits.hpp"

namespace charkit {

// Dense function on the points of an Ambient, indexed lexicographically.
// Used for both spatial functions and their spectra.
template <class T>
class Grid {
 public:
  using value_type = T;

  Grid(const Ambient& amb, std::vector<T> values) : amb_(amb), values_(std::move(values)) {
    if (values_.size() != amb_.size())
      throw DataError("grid needs " + std::to_string(amb_.size()) + " values, got " + std::to_string(values_.size()));
    if constexpr (std::is_same_v<T, Cyclotomic>) {
      for (const Cyclotomic& z : values_)
        if (z.p() != amb_.p() || z.exponent() != amb_.exponent())
          throw DataError("cyclotomic value has conductor " + std::to_string(z.conductor()) + ", grid modulus is " +
                          std::to_string(amb_.modulus()));
    }
    if constexpr (std::is_same_v<T, Complex>) {
      for (const Complex& z : values_) require_finite(z);
    }
  }

  static Grid filled(const Ambient& amb, const T& value) { return Grid(amb, std::vector<T>(amb.size(), value)); }
  static Grid zeros(const Ambient& amb) { return filled(amb, ScalarTraits<T>::zero(amb)); }

  const Ambient& ambient() const { return amb_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }
  const T& operator[](std::size_t i) const { return values_[i]; }
  T& operator[](std::size_t i) { return values_[i]; }
  const T& at(const Point& x) const { return values_[amb_.index(x)]; }
  T& at(const Point& x) { return values_[amb_.index(x)]; }

  Grid& operator+=(const Grid& o) {
    require_same_ambient(amb_, o.amb_);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  Grid& operator-=(const Grid& o) {
    require_same_ambient(amb_, o.amb_);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  friend Grid operator+(Grid a, const Grid& b) { return a += b; }
  friend Grid operator-(Grid a, const Grid& b) { return a -= b; }

  Grid scaled(const Rational& q) const {
    Grid out = *this;
    for (T& v : out.values_) v = scale_value(v, q);
    return out;
  }

  friend bool operator==(const Grid& a, const Grid& b) { return a.amb_ == b.amb_ && a.values_ == b.values_; }

 private:
  Ambient amb_;
  std::vector<T> values_;
};

using RationalGrid = Grid<Rational>;
using CyclotomicGrid = Grid<Cyclotomic>;
using ComplexGrid = Grid<Complex>;
// Frequency-domain grids share the Grid layout.
using Spectrum = Grid<Cyclotomic>;
using ComplexSpectrum = Grid<Complex>;

inline RationalGrid indicator_from_mask(const Ambient& amb, const std::vector<bool>& mask) {
  if (mask.size() != amb.size()) throw DataError("indicator mask has the wrong length");
  std::vector<Rational> v(amb.size(), 0);
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) v[i] = 1;
  return RationalGrid(amb, std::move(v));
}

inline RationalGrid indicator(const Ambient& amb, const std::vector<Point>& points) {
  std::vector<bool> mask(amb.size(), false);
  for (const Point& x : points) mask[amb.index(x)] = true;
  return indicator_from_mask(amb, mask);
}

// Points where a 0/1 function equals 1; throws if the function is not 0/1.
inline std::vector<Point> indicator_support(const RationalGrid& f) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 1)
      out.push_back(f.ambient().point(i));
    else if (sgn(f[i]) != 0)
      throw DataError("function is not a 0/1 indicator");
  }
  return out;
}

inline bool is_indicator(const RationalGrid& f) {
  for (const Rational& v : f.values())
    if (sgn(v) != 0 && v != 1) return false;
  return true;
}

inline CyclotomicGrid to_cyclotomic(const RationalGrid& f) {
  std::vector<Cyclotomic> v;
  v.reserve(f.size());
  for (const Rational& q : f.values()) v.push_back(Cyclotomic::from_rational(q, f.ambient().p(), f.ambient().exponent()));
  return CyclotomicGrid(f.ambient(), std::move(v));
}

inline const CyclotomicGrid& to_cyclotomic(const CyclotomicGrid& f) { return f; }

template <class T>
ComplexGrid to_complex(const Grid<T>& f) {
  std::vector<Complex> v;
  v.reserve(f.size());
  for (const T& x : f.values()) v.push_back(ScalarTraits<T>::to_complex(x));
  return ComplexGrid(f.ambient(), std::move(v));
}

// Exact demotion: succeeds only when every value has vanishing irrational part.
inline std::optional<RationalGrid> demote_rational(const CyclotomicGrid& f) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const Cyclotomic& z : f.values()) {
    auto q = z.rational_part();
    if (!q) return std::nullopt;
    v.push_back(*q);
  }
  return RationalGrid(f.ambient(), std::move(v));
}

template <class T>
bool is_constant(const Grid<T>& f, double tol = kDefaultTolerance) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (!ScalarTraits<T>::equal(f[i], f[0], tol)) return false;
  return true;
}

// m(f): the sum of all values.
template <class T>
T total_mass(const Grid<T>& f) {
  T s = ScalarTraits<T>::zero(f.ambient());
  for (const T& v : f.values()) s += v;
  return s;
}

template <class T>
std::vector<std::size_t> support_indices(const Grid<T>& f, double tol = kDefaultTolerance) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!ScalarTraits<T>::is_zero(f[i], tol)) out.push_back(i);
  return out;
}

template <class T>
std::vector<std::size_t> zero_indices(const Grid<T>& f, double tol = kDefaultTolerance) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (ScalarTraits<T>::is_zero(f[i], tol)) out.push_back(i);
  return out;
}

// Max-norm distance between two complex grids.
inline double max_abs_diff(const ComplexGrid& a, const ComplexGrid& b) {
  require_same_ambient(a.ambient(), b.ambient());
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace charkit
