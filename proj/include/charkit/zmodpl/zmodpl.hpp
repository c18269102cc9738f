#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charkit/fourier/transform.hpp"

namespace charkit {

// nu_p(n) for n mod p^l; zero gets the sentinel l.
inline std::uint32_t valuation(std::uint64_t n, std::uint32_t p, std::uint32_t l) {
  n %= ipow(p, l);
  if (n == 0) return l;
  std::uint32_t j = 0;
  while (n % p == 0) {
    n /= p;
    ++j;
  }
  return j;
}

// p^(-nu_p(n)), and 0 for n = 0.
inline Rational padic_norm(std::uint64_t n, std::uint32_t p, std::uint32_t l) {
  const std::uint32_t j = valuation(n, p, l);
  return j == l ? Rational(0) : Rational(1) / Rational(mpz_class(std::to_string(ipow(p, j))));
}

inline std::uint32_t valuation(const Ambient& amb, const Point& v) {
  std::uint32_t j = amb.exponent();
  for (Residue c : v.coords) j = std::min(j, valuation(c, amb.p(), amb.exponent()));
  return j;
}

struct ValuedVector {
  Point coords;
  std::uint32_t valuation = 0;
  Rational norm;
};

inline ValuedVector valued(const Ambient& amb, const Point& v) {
  amb.check(v);
  const std::uint32_t j = valuation(amb, v);
  return {v, j, j == amb.exponent() ? Rational(0) : padic_norm(ipow(amb.p(), j), amb.p(), amb.exponent())};
}

// The generator of l_v fixed by scaling the first coordinate of minimal
// valuation j to p^j. Two vectors generate the same line iff these agree.
inline Point canonical_generator(const Ambient& amb, const Point& v) {
  amb.check(v);
  const std::uint32_t j = valuation(amb, v);
  if (j == amb.exponent()) throw DomainError("the zero vector generates no line");
  std::size_t i = 0;
  while (valuation(v[i], amb.p(), amb.exponent()) != j) ++i;
  const std::uint64_t pj = ipow(amb.p(), j);
  const std::uint64_t unit = v[i] / pj;
  // unit is invertible mod p^(l-j); its inverse is a unit mod p^l as well.
  return amb.scale(mod_inverse(unit % ipow(amb.p(), amb.exponent() - j), ipow(amb.p(), amb.exponent() - j)), v);
}

// The affine line anchor + {a v : a mod p^l}, of level l - nu_p(v).
struct LevelLine {
  Point generator;  // canonical
  Point anchor;     // least index point of the coset
  std::uint32_t level = 0;
};

inline std::vector<Point> line_points(const Ambient& amb, const LevelLine& line) {
  std::vector<Point> out;
  const std::uint64_t count = ipow(amb.p(), line.level);
  for (std::uint64_t a = 0; a < count; ++a) out.push_back(amb.add(line.anchor, amb.scale(a, line.generator)));
  return out;
}

inline LevelLine level_line(const Ambient& amb, const Point& v, std::optional<Point> through = std::nullopt) {
  LevelLine line{canonical_generator(amb, v), amb.zero(), amb.exponent() - valuation(amb, v)};
  if (through) {
    amb.check(*through);
    line.anchor = *through;
    std::size_t best = amb.index(*through);
    for (const Point& x : line_points(amb, line)) best = std::min(best, amb.index(x));
    line.anchor = amb.point(best);
  }
  return line;
}

inline bool operator==(const LevelLine& a, const LevelLine& b) {
  return a.generator == b.generator && a.anchor == b.anchor;
}

inline bool on_line(const Ambient& amb, const LevelLine& line, const Point& x) {
  const Point diff = amb.sub(x, line.anchor);
  const std::uint64_t count = ipow(amb.p(), line.level);
  for (std::uint64_t a = 0; a < count; ++a)
    if (amb.scale(a, line.generator) == diff) return true;
  return false;
}

// The p cosets of l_{pv} inside a line of level s >= 2.
inline std::vector<LevelLine> split(const Ambient& amb, const LevelLine& line) {
  if (line.level < 2) throw DomainError("only lines of level at least 2 split into lines");
  std::vector<LevelLine> out;
  const Point sub = amb.scale(amb.p(), line.generator);
  for (Residue a = 0; a < amb.p(); ++a)
    out.push_back(level_line(amb, sub, amb.add(line.anchor, amb.scale(a, line.generator))));
  return out;
}

// Canonical generators of all lines through the origin at the given level.
inline std::vector<Point> level_generators(const Ambient& amb, std::uint32_t level) {
  if (level < 1 || level > amb.exponent()) throw DomainError("line level must lie in [1, l]");
  std::vector<Point> out;
  for (std::size_t i = 1; i < amb.size(); ++i) {
    const Point x = amb.point(i);
    if (amb.exponent() - valuation(amb, x) == level && canonical_generator(amb, x) == x) out.push_back(x);
  }
  return out;
}

// H_v = {x : x.v = 0 mod p^l}, of size p^(l(d-1) + nu_p(v)).
inline std::vector<Point> hyperplane_mod(const Ambient& amb, const Point& v) {
  amb.check(v);
  if (v.is_zero()) throw DomainError("hyperplane direction must be nonzero");
  std::vector<Point> out;
  for (std::size_t i = 0; i < amb.size(); ++i)
    if (amb.dot(v, amb.point(i)) == 0) out.push_back(amb.point(i));
  const std::uint64_t expected = ipow(amb.p(), std::uint64_t{amb.exponent()} * (amb.d() - 1) + valuation(amb, v));
  if (out.size() != expected)
    throw InvariantViolation("|H_v| = " + std::to_string(out.size()) + ", expected " + std::to_string(expected));
  return out;
}

inline Spectrum forward_mod(const RationalGrid& f) { return forward(f); }
inline Spectrum forward_mod(const CyclotomicGrid& f) { return forward(f); }
inline CyclotomicGrid inverse_mod(const Spectrum& s) { return inverse(s); }

// sum_t c_t 1_{x.v = t}; c_t is used only for t a multiple of p^nu(v).
template <class T>
struct RingWavelet {
  Ambient ambient;
  Point direction;
  std::uint32_t level = 0;
  std::vector<T> coeffs;  // indexed by t mod p^l
};

template <class T>
Grid<T> evaluate(const RingWavelet<T>& w) {
  std::vector<T> v;
  v.reserve(w.ambient.size());
  for (std::size_t i = 0; i < w.ambient.size(); ++i) v.push_back(w.coeffs[w.ambient.dot(w.direction, w.ambient.point(i))]);
  return Grid<T>(w.ambient, std::move(v));
}

namespace detail {

// Values of f on the level sets of x.v, or nullopt if f is not constant there.
template <class T>
std::optional<std::vector<T>> level_set_values(const Grid<T>& f, const Point& v) {
  const Ambient& amb = f.ambient();
  std::vector<std::optional<T>> seen(amb.modulus());
  for (std::size_t i = 0; i < amb.size(); ++i) {
    auto& slot = seen[amb.dot(v, amb.point(i))];
    if (!slot) slot = f[i];
    else if (!(*slot == f[i])) return std::nullopt;
  }
  std::vector<T> out;
  for (auto& s : seen) out.push_back(s ? *s : ScalarTraits<T>::zero(amb));
  return out;
}

inline bool support_on_line(const Ambient& amb, const std::vector<std::size_t>& support, const LevelLine& line) {
  for (std::size_t i : support)
    if (!on_line(amb, line, amb.point(i))) return false;
  return true;
}

}  // namespace detail

struct LevelWaveletMatch {
  // Spectrum inside {0}: f is constant (or zero) and has no direction.
  bool degenerate = false;
  std::optional<LevelLine> line;
  // phi_anchor f = sum_t coeffs[t] 1_{x.v = t}, phi as in phase().
  std::vector<Cyclotomic> coeffs;
};

// Spectrum supported on an affine line of level l. The spatial description is
// rechecked for every level-l direction through the origin, in both directions.
template <class T>
std::optional<LevelWaveletMatch> is_level_l_wavelet(const Grid<T>& f) {
  static_assert(!std::is_same_v<T, Complex>, "exact functions only");
  const Ambient& amb = f.ambient();
  const CyclotomicGrid g = to_cyclotomic(f);
  const Spectrum s = forward_mod(g);
  const std::vector<std::size_t> support = support_indices(s);
  const std::vector<Point> directions = level_generators(amb, amb.exponent());

  for (const Point& v : directions) {
    const bool spectral = detail::support_on_line(amb, support, level_line(amb, v));
    const bool spatial = detail::level_set_values(g, v).has_value();
    if (spectral != spatial)
      throw InvariantViolation("level-l wavelet: spectrum and level sets disagree along " + to_string(v));
  }

  if (support.empty() || (support.size() == 1 && support[0] == 0)) return LevelWaveletMatch{true, std::nullopt, {}};
  const Point s0 = amb.point(support[0]);
  for (const Point& v : directions) {
    const LevelLine line = level_line(amb, v, s0);
    if (!detail::support_on_line(amb, support, line)) continue;
    auto coeffs = detail::level_set_values(multiply(g, phase(amb, line.anchor)), v);
    if (!coeffs) throw InvariantViolation("level-l wavelet: shifted function is not constant on level sets of " + to_string(v));
    return LevelWaveletMatch{false, line, std::move(*coeffs)};
  }
  return std::nullopt;
}

template <class T>
struct MultiscaleDecomposition {
  Ambient ambient;
  T constant;  // zero once merged into a part
  std::vector<RingWavelet<T>> parts;
};

template <class T>
Grid<T> evaluate(const MultiscaleDecomposition<T>& dec) {
  Grid<T> out = Grid<T>::filled(dec.ambient, dec.constant);
  for (const RingWavelet<T>& w : dec.parts) out += evaluate(w);
  return out;
}

// Frequencies of valuation j are split by the level-(l-j) lines they generate;
// the points of l_w with valuation exactly j are l_w minus l_{pw}, the
// inclusion-exclusion step. Each such claim is a Galois orbit, so rational f
// gives rational parts. A claim whose line sits inside an earlier part's line
// joins that part, and the constant joins the first part.
template <class T>
MultiscaleDecomposition<T> multiscale_decompose(const Grid<T>& f) {
  static_assert(!std::is_same_v<T, Complex>, "exact functions only");
  const Ambient& amb = f.ambient();
  const Spectrum s = forward_mod(to_cyclotomic(f));
  const std::uint32_t l = amb.exponent();

  struct Group {
    Point direction;
    std::uint32_t level;
    std::vector<std::size_t> claimed;
  };
  std::vector<Group> groups;
  for (std::uint32_t j = 0; j < l; ++j) {
    for (const Point& w : level_generators(amb, l - j)) {
      std::vector<std::size_t> claim;
      bool nonzero = false;
      for (std::uint64_t u = 1; u < amb.modulus(); ++u) {
        if (u % amb.p() == 0) continue;
        const std::size_t i = amb.index(amb.scale(u, w));
        if (std::find(claim.begin(), claim.end(), i) != claim.end()) continue;
        claim.push_back(i);
        nonzero = nonzero || !s[i].is_zero();
      }
      if (!nonzero) continue;
      auto home = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
        return on_line(amb, level_line(amb, g.direction), w);
      });
      if (home == groups.end()) groups.push_back({w, l - j, std::move(claim)});
      else home->claimed.insert(home->claimed.end(), claim.begin(), claim.end());
    }
  }

  MultiscaleDecomposition<T> dec{amb, ScalarTraits<T>::zero(amb), {}};
  if (groups.empty()) {
    if constexpr (std::is_same_v<T, Rational>) dec.constant = *s[0].rational_part();
    else dec.constant = s[0];
    return dec;
  }
  groups.front().claimed.push_back(0);

  for (const Group& g : groups) {
    Spectrum restricted = Spectrum::zeros(amb);
    for (std::size_t i : g.claimed) restricted[i] = s[i];
    const CyclotomicGrid part = inverse_mod(restricted);
    auto values = detail::level_set_values(part, g.direction);
    if (!values) throw InvariantViolation("multiscale part is not constant on level sets of " + to_string(g.direction));
    if constexpr (std::is_same_v<T, Rational>) {
      std::vector<Rational> q;
      for (const Cyclotomic& z : *values) {
        auto r = z.rational_part();
        if (!r) throw InvariantViolation("multiscale part of a rational function is not rational");
        q.push_back(*r);
      }
      dec.parts.push_back({amb, g.direction, g.level, std::move(q)});
    } else {
      dec.parts.push_back({amb, g.direction, g.level, std::move(*values)});
    }
  }
  return dec;
}

}  // namespace charkit
