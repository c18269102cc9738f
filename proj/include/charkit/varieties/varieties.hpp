#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charkit/core/residues.hpp"
#include "charkit/spectrum/support.hpp"

namespace charkit {

// x_1^2 + ... + x_k^2 over the first k coordinates.
inline Residue sum_of_squares(const Ambient& amb, const Point& x, std::size_t k) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < k; ++i) s = (s + static_cast<std::uint64_t>(x[i]) * x[i]) % amb.modulus();
  return static_cast<Residue>(s);
}

inline Residue norm_squared(const Ambient& amb, const Point& x) { return sum_of_squares(amb, x, amb.d()); }

enum class VarietyKind { paraboloid, sphere, isotropic_cone };

struct VarietyPoints {
  VarietyKind kind = VarietyKind::sphere;
  Residue radius = 0;  // sphere only
  std::vector<Point> points;
};

// x_d = x_1^2 + ... + x_{d-1}^2.
inline bool on_paraboloid(const Ambient& amb, const Point& x) {
  return x[amb.d() - 1] == sum_of_squares(amb, x, amb.d() - 1);
}

inline VarietyPoints paraboloid(const Ambient& amb) {
  amb.require_field("paraboloid");
  VarietyPoints v{VarietyKind::paraboloid, 0, {}};
  for (std::size_t i = 0; i < amb.size(); ++i)
    if (on_paraboloid(amb, amb.point(i))) v.points.push_back(amb.point(i));
  return v;
}

// S_a = {x : x.x = a}.
inline VarietyPoints sphere(const Ambient& amb, Residue a) {
  amb.require_field("sphere");
  a %= amb.p();
  VarietyPoints v{a == 0 ? VarietyKind::isotropic_cone : VarietyKind::sphere, a, {}};
  for (std::size_t i = 0; i < amb.size(); ++i)
    if (norm_squared(amb, amb.point(i)) == a) v.points.push_back(amb.point(i));
  return v;
}

inline VarietyPoints isotropic_cone(const Ambient& amb) { return sphere(amb, 0); }

inline std::uint64_t sphere_count(std::uint32_t p, std::uint32_t d, Residue r) {
  return sphere(Ambient(p, d), r).points.size();
}

// Spectrum supported on the isotropic cone x.x = 0.
template <class T>
bool is_good(const Grid<T>& f, double tol = kDefaultTolerance) {
  const Ambient& amb = f.ambient();
  amb.require_field("is_good");
  const auto s = forward(f);
  for (std::size_t i : support_indices(s, tol))
    if (norm_squared(amb, amb.point(i)) != 0) return false;
  return true;
}

// The restriction of f to the plane x_d = a, as a function on Z_p^(d-1).
template <class T>
Grid<T> slice(const Grid<T>& f, Residue a) {
  const Ambient& amb = f.ambient();
  if (amb.d() < 2) throw DomainError("slice needs d >= 2");
  const Ambient lower = Ambient::ring(amb.p(), amb.exponent(), amb.d() - 1);
  a %= amb.modulus();
  std::vector<T> v;
  v.reserve(lower.size());
  // Lexicographic order puts x_d last, so the slice is every n-th value.
  for (std::size_t i = 0; i < lower.size(); ++i) v.push_back(f[i * amb.modulus() + a]);
  return Grid<T>(lower, std::move(v));
}

enum class ParaboloidDirection { type1, type2, covered };

inline const char* to_string(ParaboloidDirection t) {
  switch (t) {
    case ParaboloidDirection::type1: return "type1";
    case ParaboloidDirection::type2: return "type2";
    case ParaboloidDirection::covered: return "covered";
  }
  return "?";
}

// type1: x_d != 0 and q = 0; type2: x_d = 0 and q != 0; covered otherwise,
// where q = x_1^2 + ... + x_{d-1}^2. Covered lines meet the paraboloid off 0.
inline ParaboloidDirection classify_direction_paraboloid(const Ambient& amb, const Point& v) {
  amb.require_field("classify_direction_paraboloid");
  amb.check(v);
  if (v.is_zero()) throw DomainError("direction must be nonzero");
  const Residue q = sum_of_squares(amb, v, amb.d() - 1);
  const Residue last = v[amb.d() - 1];
  if (last != 0 && q == 0) return ParaboloidDirection::type1;
  if (last == 0 && q != 0) return ParaboloidDirection::type2;
  return ParaboloidDirection::covered;
}

struct ParaboloidReport {
  // Spectrum vanishes on the paraboloid minus the origin.
  bool hypothesis_met = false;
  // Pairs (a, b) whose slice difference is not good.
  std::vector<std::pair<Residue, Residue>> violations;
  bool conclusion_holds() const { return violations.empty(); }
};

// The DC term never reaches a slice difference, so the hypothesis is checked
// on the paraboloid without its origin.
inline ParaboloidReport check_paraboloid_theorem(const RationalGrid& f) {
  const Ambient& amb = f.ambient();
  amb.require_field("check_paraboloid_theorem");
  if (amb.d() < 2) throw DomainError("check_paraboloid_theorem needs d >= 2");
  ParaboloidReport r;
  const Spectrum s = forward(f);
  r.hypothesis_met = true;
  for (const Point& x : paraboloid(amb).points)
    if (!x.is_zero() && !s.at(x).is_zero()) {
      r.hypothesis_met = false;
      break;
    }
  if (!r.hypothesis_met) return r;
  std::vector<RationalGrid> slices;
  for (Residue a = 0; a < amb.p(); ++a) slices.push_back(slice(f, a));
  for (Residue a = 0; a < amb.p(); ++a)
    for (Residue b = a + 1; b < amb.p(); ++b)
      if (!is_good(slices[a] - slices[b])) r.violations.emplace_back(a, b);
  return r;
}

namespace detail {

inline void require_two_classes(std::uint32_t p, Residue a, Residue b) {
  if (quadratic_class(a, p) != QuadraticClass::residue)
    throw DomainError(std::to_string(a) + " is not a nonzero quadratic residue mod " + std::to_string(p));
  if (quadratic_class(b, p) != QuadraticClass::non_residue)
    throw DomainError(std::to_string(b) + " is not a quadratic non-residue mod " + std::to_string(p));
}

inline void require_vanishing(const Spectrum& s, Residue a, Residue b) {
  const Ambient& amb = s.ambient();
  for (Residue r : {a, b})
    for (const Point& x : sphere(amb, r).points)
      if (!s.at(x).is_zero())
        throw DataError("hypothesis not met: spectrum is nonzero at " + to_string(x) + " on S_" + std::to_string(r));
}

}  // namespace detail

enum class TwoCircleOutcome { constant, lplus_union, lminus_union, other };

inline const char* to_string(TwoCircleOutcome o) {
  switch (o) {
    case TwoCircleOutcome::constant: return "constant";
    case TwoCircleOutcome::lplus_union: return "Lplus_union";
    case TwoCircleOutcome::lminus_union: return "Lminus_union";
    case TwoCircleOutcome::other: return "other";
  }
  return "?";
}

struct TwoCircleReport {
  TwoCircleOutcome outcome = TwoCircleOutcome::other;
  // (1, i) or (1, -i), the translation under which E is invariant.
  std::optional<Point> witness;
  bool support_in_cone = false;
};

// For f on Z_p^2 with spectrum vanishing on S_a and S_b, a a residue and b
// not: f is constant when p = 3 mod 4; an indicator is a union of lines
// parallel to L+ = {(t, it)} or to L- = {(t, -it)} when p = 1 mod 4.
inline TwoCircleReport two_circle_analysis(const RationalGrid& f, Residue a, Residue b) {
  const Ambient& amb = f.ambient();
  amb.require_field("two_circle_analysis");
  if (amb.d() != 2) throw DomainError("two_circle_analysis works on Z_p^2");
  detail::require_two_classes(amb.p(), a, b);
  const Spectrum s = forward(f);
  detail::require_vanishing(s, a, b);

  TwoCircleReport r;
  r.support_in_cone = true;
  for (std::size_t i : support_indices(s))
    r.support_in_cone = r.support_in_cone && norm_squared(amb, amb.point(i)) == 0;
  if (!r.support_in_cone) throw InvariantViolation("two-circle: spectrum escapes the isotropic cone");

  if (is_constant(f)) {
    r.outcome = TwoCircleOutcome::constant;
    return r;
  }
  if (amb.p() % 4 == 3) throw InvariantViolation("two-circle: p = 3 mod 4 but f is not constant");
  if (!is_indicator(f)) return r;

  const Residue i = sqrt_minus_one(amb.p());
  for (const auto& [u, outcome] : {std::pair{Point{{1, i}}, TwoCircleOutcome::lplus_union},
                                   std::pair{Point{{1, amb.p() - i}}, TwoCircleOutcome::lminus_union}}) {
    bool invariant = true;
    for (std::size_t k = 0; k < amb.size() && invariant; ++k)
      if (f[k] == 1) invariant = f.at(amb.add(amb.point(k), u)) == 1;
    if (invariant) {
      r.outcome = outcome;
      r.witness = u;
      return r;
    }
  }
  throw InvariantViolation("two-circle: indicator is not a union of lines parallel to L+ or L-");
}

struct SphereReport {
  Point center;
  std::vector<Rational> masses;  // radius r = 1..p-1
  std::optional<Rational> common_mass;
};

// Masses of f on the spheres (x - center).(x - center) = r, r != 0. With d
// even and the spectrum vanishing on S_a and S_b they must all agree.
inline SphereReport sphere_equidistribution_check(const RationalGrid& f, const Point& center, Residue a, Residue b) {
  const Ambient& amb = f.ambient();
  amb.require_field("sphere_equidistribution_check");
  amb.check(center);
  if (amb.d() % 2 != 0) throw DomainError("sphere equidistribution needs even d");
  if (amb.p() == 2) throw DomainError("sphere equidistribution needs p > 2");
  detail::require_two_classes(amb.p(), a, b);
  detail::require_vanishing(forward(f), a, b);

  SphereReport r{center, std::vector<Rational>(amb.p(), 0), std::nullopt};
  for (std::size_t i = 0; i < amb.size(); ++i) r.masses[norm_squared(amb, amb.sub(amb.point(i), center))] += f[i];
  r.masses.erase(r.masses.begin());
  for (const Rational& m : r.masses)
    if (m != r.masses.front()) throw InvariantViolation("sphere masses differ for a function meeting the hypothesis");
  r.common_mass = r.masses.front();
  return r;
}

inline SphereReport sphere_equidistribution_check(const RationalGrid& f, const Point& center) {
  const std::uint32_t p = f.ambient().p();
  if (p == 2) throw DomainError("sphere equidistribution needs p > 2");
  return sphere_equidistribution_check(f, center, smallest_of_class(p, QuadraticClass::residue),
                                       smallest_of_class(p, QuadraticClass::non_residue));
}

}  // namespace charkit
