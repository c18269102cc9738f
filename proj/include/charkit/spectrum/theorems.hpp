#pragma once

#include <map>
#include <optional>
#include <vector>

#include "charkit/core/geometry.hpp"
#include "charkit/spectrum/support.hpp"

namespace charkit {

template <class T>
using SpectrumOf = Grid<typename ScalarTraits<T>::Spectral>;

// A subspace V with the spectrum of f vanishing on V \ {0}.
//
// The guaranteed dimension is d - k + 1 where k is the least integer with
// cbw < (p^k - 1)/(p - 1); the subspace comes from avoid_lines_subspace on the
// active lines. For d <= 3 every subspace is also searched directly and the
// larger of the two answers is returned. Absent when every line is active.
template <class T>
std::optional<Subspace> vanishing_certificate(const Grid<T>& f, double tol = kDefaultTolerance) {
  const Ambient& amb = f.ambient();
  amb.require_field("vanishing_certificate");
  if (support_indices(f, tol).empty()) throw DomainError("vanishing_certificate requires a nonzero function");
  const LineSupportProfile profile = line_support(forward(f), tol);
  const std::vector<ProjectiveLine> active = profile.active_lines();

  std::uint32_t k = 1;
  while (k <= amb.d() && active.size() >= line_count(amb.p(), k)) ++k;
  std::optional<Subspace> best;
  if (k <= amb.d()) best = avoid_lines_subspace(active, amb.d() - k, amb);

  if (amb.d() <= 3) {
    const std::set<ProjectiveLine> hot(active.begin(), active.end());
    const std::uint32_t floor = best ? static_cast<std::uint32_t>(best->dim()) : 0;
    auto clean = [&](const Subspace& v) {
      for (const ProjectiveLine& l : v.lines())
        if (hot.count(l)) return false;
      return true;
    };
    bool found = false;
    for (std::uint32_t dim = amb.d(); dim > floor && !found; --dim) {
      for (const Subspace& v : enumerate_subspaces(amb, dim)) {
        if (clean(v)) {
          best = v;
          found = true;
          break;
        }
      }
    }
  }
  return best;
}

template <class T>
struct EquidistributionResult {
  bool equidistributed = false;
  std::optional<T> common_mass;
  // Masses on the cosets of V^perp, in the order of coset_anchors(perp(V)).
  std::vector<Point> anchors;
  std::vector<T> masses;
};

// Masses of f on the cosets of W, keyed by coset_anchors(W).
template <class T>
std::vector<T> coset_masses(const Grid<T>& f, const Subspace& w) {
  const Ambient& amb = f.ambient();
  require_same_ambient(amb, w.ambient());
  const std::vector<Point> anchors = coset_anchors(w);
  std::map<Point, std::size_t> slot;
  for (std::size_t i = 0; i < anchors.size(); ++i) slot.emplace(anchors[i], i);
  std::vector<T> masses(anchors.size(), ScalarTraits<T>::zero(amb));
  for (std::size_t i = 0; i < f.size(); ++i) masses[slot.at(w.reduce(amb.point(i)))] += f[i];
  return masses;
}

// Equal masses on all cosets of V^perp, checked together with vanishing of
// the spectrum on V \ {0}. The two must agree.
template <class T>
EquidistributionResult<T> equidistribution_check(const Grid<T>& f, const Subspace& v, double tol = kDefaultTolerance) {
  const Ambient& amb = f.ambient();
  amb.require_field("equidistribution_check");
  require_same_ambient(amb, v.ambient());
  if (v.dim() == 0) throw DomainError("equidistribution_check requires a nonzero subspace");

  EquidistributionResult<T> r;
  const Subspace w = perp(v);
  r.anchors = coset_anchors(w);
  r.masses = coset_masses(f, w);
  bool equal = true;
  for (const T& m : r.masses) equal = equal && ScalarTraits<T>::equal(m, r.masses.front(), tol);

  const SpectrumOf<T> s = forward(f);
  bool vanishes = true;
  for (const Point& m : v.points())
    if (!m.is_zero() && !ScalarTraits<typename ScalarTraits<T>::Spectral>::is_zero(s.at(m), tol)) {
      vanishes = false;
      break;
    }
  if (equal != vanishes)
    throw InvariantViolation(std::string("equidistribution: masses ") + (equal ? "equal" : "unequal") +
                             " but spectrum " + (vanishes ? "vanishes" : "does not vanish") + " on the punctured subspace");
  r.equidistributed = equal;
  if (equal) r.common_mass = r.masses.front();
  return r;
}

struct UncertaintyReport {
  std::uint64_t cbw = 0;
  std::uint64_t lhs = 0;  // ((p-1) cbw + 1) |E|
  std::uint64_t rhs = 0;  // p^d
  bool holds = false;
  double bwd = 0;
  double dim = 0;  // log_p |E|
  bool dimension_form_holds = false;  // bwd + dim >= d
};

inline UncertaintyReport uncertainty_check(const Ambient& amb, const std::vector<Point>& e) {
  amb.require_field("uncertainty_check");
  const RationalGrid one_e = indicator(amb, e);
  const std::uint64_t size = support_indices(one_e).size();
  if (size == 0) throw DomainError("uncertainty_check requires a nonempty set");
  UncertaintyReport r;
  r.cbw = bandwidth(one_e).cbw;
  r.lhs = ((amb.p() - 1) * r.cbw + 1) * size;
  r.rhs = amb.size();
  r.holds = r.lhs >= r.rhs;
  r.bwd = bandwidth_dimension(amb.p(), r.cbw);
  r.dim = std::log(static_cast<double>(size)) / std::log(static_cast<double>(amb.p()));
  r.dimension_form_holds = r.bwd + r.dim >= static_cast<double>(amb.d()) - 1e-12;
  return r;
}

struct SmallBandwidthClass {
  std::uint64_t cbw = 0;
  // Present when E is a union of lines parallel to this direction.
  std::optional<ProjectiveLine> direction;
  bool cbw_exceeds_d() const { return !direction.has_value(); }
};

// First direction u (in line enumeration order) with E + u = E.
inline std::optional<ProjectiveLine> translation_direction(const Ambient& amb, const std::vector<bool>& mask) {
  for (const ProjectiveLine& l : enumerate_lines(amb)) {
    bool invariant = true;
    for (std::size_t i = 0; i < amb.size() && invariant; ++i)
      if (mask[i]) invariant = mask[amb.index(amb.add(amb.point(i), l.rep))];
    if (invariant) return l;
  }
  return std::nullopt;
}

// Either E is a union of parallel lines or cbw(E) > d. Needs d >= 2: in one
// dimension a single point has cbw 1 = d and is not a union of lines.
inline SmallBandwidthClass classify_small_cbw_set(const Ambient& amb, const std::vector<Point>& e) {
  amb.require_field("classify_small_cbw_set");
  if (amb.d() < 2) throw DomainError("classify_small_cbw_set requires d >= 2");
  const RationalGrid one_e = indicator(amb, e);
  SmallBandwidthClass r;
  r.cbw = bandwidth(one_e).cbw;
  if (r.cbw > amb.d()) return r;
  std::vector<bool> mask(amb.size());
  for (std::size_t i = 0; i < amb.size(); ++i) mask[i] = sgn(one_e[i]) != 0;
  r.direction = translation_direction(amb, mask);
  if (!r.direction)
    throw InvariantViolation("set with cbw " + std::to_string(r.cbw) + " <= d is not a union of parallel lines");
  return r;
}

// True when the zero set of the spectrum is a compass set, in which case f
// must be constant; false makes no claim.
inline bool constancy_from_compass(const RationalGrid& f) {
  const Ambient& amb = f.ambient();
  amb.require_field("constancy_from_compass");
  const Spectrum s = forward(f);
  std::vector<Point> zeros;
  for (std::size_t i : zero_indices(s)) zeros.push_back(amb.point(i));
  if (!is_compass_set(zeros, amb)) return false;
  if (!is_constant(f)) throw InvariantViolation("spectrum zero set is a compass set but f is not constant");
  return true;
}

// The rational function whose transform is dc at the origin and
// g_r(seed(l)) at r * rep(l); unseeded lines carry zero.
inline RationalGrid inverse_phi(const Ambient& amb, const Rational& dc,
                                const std::map<ProjectiveLine, Cyclotomic>& seeds) {
  amb.require_field("inverse_phi");
  Spectrum s = Spectrum::zeros(amb);
  s[0] = Cyclotomic::from_rational(dc, amb.p());
  for (const auto& [line, seed] : seeds) {
    amb.check(line.rep);
    if (!is_canonical_line_rep(line.rep)) throw DataError("inverse_phi: seed key is not a canonical line representative");
    if (seed.conductor() != amb.p()) throw DomainError("inverse_phi: seed lies outside Q(xi_p)");
    for (Residue r = 1; r < amb.p(); ++r) s.at(amb.scale(r, line.rep)) = seed.galois(r);
  }
  return inverse_rational(s);
}

}  // namespace charkit
