#pragma once

#include <vector>

#include "charkit/core/subspace.hpp"
#include "charkit/fourier/grid.hpp"

// Normalization: forward carries n^-d (n the modulus), inverse carries none,
//   F(m) = n^-d sum_x xi^(-x.m) f(x),   f(x) = sum_m xi^(x.m) F(m).
// The convolution theorem therefore reads forward(f*g) = n^d forward(f) forward(g).

namespace charkit {

namespace detail {

// sum_{j<n} c_j xi^j without reduction; multiplication by xi^e is a rotation.
using Redundant = std::vector<Rational>;

inline std::vector<Redundant> lift(const RationalGrid& f) {
  const std::uint32_t n = f.ambient().modulus();
  std::vector<Redundant> out(f.size(), Redundant(n, 0));
  for (std::size_t i = 0; i < f.size(); ++i) out[i][0] = f[i];
  return out;
}

inline std::vector<Redundant> lift(const CyclotomicGrid& f) {
  std::vector<Redundant> out;
  out.reserve(f.size());
  for (const Cyclotomic& z : f.values()) out.push_back(z.redundant());
  return out;
}

inline CyclotomicGrid lower(const Ambient& amb, std::vector<Redundant>& data, const Rational& scale) {
  std::vector<Cyclotomic> v;
  v.reserve(data.size());
  for (Redundant& r : data) {
    if (scale != 1)
      for (Rational& c : r) c *= scale;
    v.push_back(Cyclotomic::from_redundant(amb.p(), amb.exponent(), std::move(r)));
  }
  return CyclotomicGrid(amb, std::move(v));
}

template <class Visit>
void for_each_fiber(const Ambient& amb, std::uint32_t axis, Visit&& visit) {
  const std::size_t n = amb.modulus();
  std::size_t stride = 1;
  for (std::uint32_t i = axis + 1; i < amb.d(); ++i) stride *= n;
  const std::size_t outer = amb.size() / (stride * n);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t in = 0; in < stride; ++in) visit(o * stride * n + in, stride);
}

// One length-n transform along `axis` for every fiber; sign = -1 forward, +1 inverse.
inline void axis_pass(const Ambient& amb, std::vector<Redundant>& data, std::uint32_t axis, int sign) {
  const std::size_t n = amb.modulus();
  std::vector<Redundant> out(n, Redundant(n));
  for_each_fiber(amb, axis, [&](std::size_t base, std::size_t stride) {
    for (std::size_t k = 0; k < n; ++k) {
      Redundant& acc = out[k];
      for (Rational& c : acc) c = 0;
      for (std::size_t t = 0; t < n; ++t) {
        const Redundant& src = data[base + t * stride];
        const std::size_t kt = (k * t) % n;
        const std::size_t shift = sign < 0 ? (n - kt) % n : kt;
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(src[j]) != 0) acc[(j + shift) % n] += src[j];
      }
    }
    for (std::size_t k = 0; k < n; ++k) std::swap(data[base + k * stride], out[k]);
  });
}

inline void axis_pass(const Ambient& amb, std::vector<Complex>& data, std::uint32_t axis, int sign) {
  const std::size_t n = amb.modulus();
  std::vector<Complex> roots(n);
  for (std::size_t j = 0; j < n; ++j) roots[j] = root_of_unity(sign * static_cast<std::int64_t>(j), amb.modulus());
  std::vector<Complex> out(n);
  for_each_fiber(amb, axis, [&](std::size_t base, std::size_t stride) {
    for (std::size_t k = 0; k < n; ++k) {
      Complex acc = 0;
      for (std::size_t t = 0; t < n; ++t) acc += data[base + t * stride] * roots[(k * t) % n];
      out[k] = acc;
    }
    for (std::size_t k = 0; k < n; ++k) data[base + k * stride] = out[k];
  });
}

inline Rational inverse_volume(const Ambient& amb) { return Rational(1) / Rational(mpz_class(std::to_string(amb.size()))); }

template <class G>
CyclotomicGrid forward_exact(const G& f) {
  const Ambient& amb = f.ambient();
  auto data = lift(f);
  for (std::uint32_t a = 0; a < amb.d(); ++a) axis_pass(amb, data, a, -1);
  return lower(amb, data, inverse_volume(amb));
}

}  // namespace detail

// Exact transform via d axis passes of length-n transforms.
inline Spectrum forward(const RationalGrid& f) { return detail::forward_exact(f); }
inline Spectrum forward(const CyclotomicGrid& f) { return detail::forward_exact(f); }

inline ComplexSpectrum forward(const ComplexGrid& f) {
  const Ambient& amb = f.ambient();
  std::vector<Complex> data = f.values();
  for (std::uint32_t a = 0; a < amb.d(); ++a) detail::axis_pass(amb, data, a, -1);
  const double scale = 1.0 / static_cast<double>(amb.size());
  for (Complex& z : data) z *= scale;
  return ComplexSpectrum(amb, std::move(data));
}

inline CyclotomicGrid inverse(const Spectrum& spec) {
  const Ambient& amb = spec.ambient();
  auto data = detail::lift(spec);
  for (std::uint32_t a = 0; a < amb.d(); ++a) detail::axis_pass(amb, data, a, +1);
  return detail::lower(amb, data, 1);
}

inline ComplexGrid inverse(const ComplexSpectrum& spec) {
  const Ambient& amb = spec.ambient();
  std::vector<Complex> data = spec.values();
  for (std::uint32_t a = 0; a < amb.d(); ++a) detail::axis_pass(amb, data, a, +1);
  return ComplexGrid(amb, std::move(data));
}

// Inverse followed by exact demotion to rational values; throws if the
// result has a nonvanishing irrational part.
inline RationalGrid inverse_rational(const Spectrum& spec) {
  auto f = demote_rational(inverse(spec));
  if (!f) throw DataError("spectrum is not the transform of a rational-valued function");
  return *f;
}

// Reference transform: the direct n^d x n^d sum. Kept for differential testing.
template <class G>
Spectrum naive_forward(const G& f) {
  const Ambient& amb = f.ambient();
  const std::uint32_t n = amb.modulus();
  auto values = detail::lift(f);
  std::vector<detail::Redundant> out(amb.size(), detail::Redundant(n, 0));
  for (std::size_t mi = 0; mi < amb.size(); ++mi) {
    const Point m = amb.point(mi);
    for (std::size_t xi = 0; xi < amb.size(); ++xi) {
      const std::size_t e = (n - amb.dot(amb.point(xi), m)) % n;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(values[xi][j]) != 0) out[mi][(j + e) % n] += values[xi][j];
    }
  }
  return detail::lower(amb, out, detail::inverse_volume(amb));
}

inline ComplexSpectrum naive_forward(const ComplexGrid& f) {
  const Ambient& amb = f.ambient();
  std::vector<Complex> out(amb.size());
  for (std::size_t mi = 0; mi < amb.size(); ++mi) {
    const Point m = amb.point(mi);
    Complex acc = 0;
    for (std::size_t xi = 0; xi < amb.size(); ++xi)
      acc += f[xi] * root_of_unity(-static_cast<std::int64_t>(amb.dot(amb.point(xi), m)), amb.modulus());
    out[mi] = acc / static_cast<double>(amb.size());
  }
  return ComplexSpectrum(amb, std::move(out));
}

// (f * g)(x) = sum_y f(y) g(x - y).
template <class T>
Grid<T> convolve(const Grid<T>& f, const Grid<T>& g) {
  const Ambient& amb = f.ambient();
  require_same_ambient(amb, g.ambient());
  Grid<T> out = Grid<T>::zeros(amb);
  for (std::size_t yi = 0; yi < amb.size(); ++yi) {
    if (ScalarTraits<T>::is_zero(f[yi], 0.0)) continue;
    const Point y = amb.point(yi);
    for (std::size_t xi = 0; xi < amb.size(); ++xi) {
      const std::size_t diff = amb.index(amb.sub(amb.point(xi), y));
      out[xi] += f[yi] * g[diff];
    }
  }
  return out;
}

// Pointwise product.
template <class T>
Grid<T> multiply(const Grid<T>& f, const Grid<T>& g) {
  require_same_ambient(f.ambient(), g.ambient());
  Grid<T> out = f;
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

// phi_x(m) = xi^(-x.m).
inline CyclotomicGrid phase(const Ambient& amb, const Point& x) {
  amb.check(x);
  std::vector<Cyclotomic> v;
  v.reserve(amb.size());
  for (std::size_t i = 0; i < amb.size(); ++i)
    v.push_back(Cyclotomic::root_power(-static_cast<std::int64_t>(amb.dot(x, amb.point(i))), amb.p(),
                                       amb.exponent()));
  return CyclotomicGrid(amb, std::move(v));
}

inline RationalGrid subspace_indicator(const Subspace& v) { return indicator_from_mask(v.ambient(), v.mask()); }

inline RationalGrid affine_indicator(const AffineSubspace& a) { return indicator(a.direction.ambient(), a.points()); }

// Closed form of the transform of 1_V: (|V| / p^d) 1_{V^perp}.
inline Spectrum transform_subspace(const Subspace& v) {
  const Ambient& amb = v.ambient();
  const Rational weight = Rational(mpz_class(std::to_string(v.size()))) * detail::inverse_volume(amb);
  const std::vector<bool> mask = perp(v).mask();
  std::vector<Cyclotomic> out;
  out.reserve(amb.size());
  for (std::size_t i = 0; i < amb.size(); ++i)
    out.push_back(Cyclotomic::from_rational(mask[i] ? weight : Rational(0), amb.p()));
  return Spectrum(amb, std::move(out));
}

// Closed form of the transform of 1_{V+x}: (|V| / p^d) phi_x 1_{V^perp}.
inline Spectrum transform_affine(const Subspace& v, const Point& x) {
  const Ambient& amb = v.ambient();
  const Rational weight = Rational(mpz_class(std::to_string(v.size()))) * detail::inverse_volume(amb);
  const std::vector<bool> mask = perp(v).mask();
  std::vector<Cyclotomic> out;
  out.reserve(amb.size());
  for (std::size_t i = 0; i < amb.size(); ++i) {
    if (!mask[i]) {
      out.push_back(Cyclotomic::zero(amb.p()));
      continue;
    }
    out.push_back(Cyclotomic::root_power(-static_cast<std::int64_t>(amb.dot(x, amb.point(i))), amb.p()) * weight);
  }
  return Spectrum(amb, std::move(out));
}

}  // namespace charkit
