#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "charkit/wavelets/wavelet.hpp"

namespace charkit {

enum class TransformKind { plain, conjugate };

inline const char* to_string(TransformKind k) { return k == TransformKind::plain ? "plain" : "conjugate"; }

// f+ = p^(d/2-k) 1_{V+x} + phi_{-x} 1_{V^perp} and f- with a minus sign;
// eigenfunctions of the transform (x = 0) or of the transform followed by
// conjugation, with eigenvalues +-p^(-d/2).
struct EigenPair {
  TransformKind kind;
  Subspace v;
  Point x;
  ComplexGrid plus;
  ComplexGrid minus;
  // Same functions over Q(xi_p); present when d is even, so p^(d/2-k) is rational.
  std::optional<CyclotomicGrid> plus_exact;
  std::optional<CyclotomicGrid> minus_exact;
  std::optional<Rational> scale_exact;
  double scale;  // p^(d/2-k)
  double eigenvalue_magnitude;  // p^(-d/2)
  // V + x is a Lagrangian subspace through the origin, so f- = 0.
  bool degenerate;

  const Ambient& ambient() const { return plus.ambient(); }
};

inline bool is_lagrangian(const Subspace& v) { return perp(v) == v; }

namespace detail {

inline EigenPair build_pair(const Subspace& v, const Point& x, TransformKind kind) {
  const Ambient& amb = v.ambient();
  amb.require_field("eigenfunction_pair");
  amb.check(x);
  const Subspace w = perp(v);
  const AffineSubspace coset(v, x);

  const double half_d = amb.d() / 2.0;
  const double scale = std::pow(static_cast<double>(amb.p()), half_d - static_cast<double>(v.dim()));
  const RationalGrid one_coset = affine_indicator(coset);
  const std::vector<bool> perp_mask = w.mask();
  const Point minus_x = amb.neg(x);

  std::vector<Complex> plus(amb.size()), minus(amb.size());
  for (std::size_t i = 0; i < amb.size(); ++i) {
    const Complex a = scale * one_coset[i].get_d();
    const Complex b = perp_mask[i] ? root_of_unity(-static_cast<std::int64_t>(amb.dot(minus_x, amb.point(i))), amb.p())
                                   : Complex{};
    plus[i] = a + b;
    minus[i] = a - b;
  }
  EigenPair e{kind,
              v,
              x,
              ComplexGrid(amb, std::move(plus)),
              ComplexGrid(amb, std::move(minus)),
              std::nullopt,
              std::nullopt,
              std::nullopt,
              scale,
              std::pow(static_cast<double>(amb.p()), -half_d),
              coset.anchor.is_zero() && is_lagrangian(v)};

  if (amb.d() % 2 == 0) {
    e.scale_exact = rational_pow(Rational(amb.p()), static_cast<std::int64_t>(amb.d() / 2) - static_cast<std::int64_t>(v.dim()));
    std::vector<Cyclotomic> pe, me;
    for (std::size_t i = 0; i < amb.size(); ++i) {
      const Cyclotomic a = Cyclotomic::from_rational(*e.scale_exact * one_coset[i], amb.p());
      const Cyclotomic b = perp_mask[i]
                               ? Cyclotomic::root_power(-static_cast<std::int64_t>(amb.dot(minus_x, amb.point(i))), amb.p())
                               : Cyclotomic::zero(amb.p());
      pe.push_back(a + b);
      me.push_back(a - b);
    }
    e.plus_exact = CyclotomicGrid(amb, std::move(pe));
    e.minus_exact = CyclotomicGrid(amb, std::move(me));
  }
  return e;
}

}  // namespace detail

inline EigenPair eigenfunction_pair(const Subspace& v) {
  return detail::build_pair(v, v.ambient().zero(), TransformKind::plain);
}

inline EigenPair affine_eigenfunction_pair(const Subspace& v, const Point& x) {
  return detail::build_pair(v, x, TransformKind::conjugate);
}

// max |T g - lambda g'| over both members, g' = g or conj(g) by kind.
inline double eigen_residual(const EigenPair& e) {
  double worst = 0;
  for (int sign : {+1, -1}) {
    const ComplexGrid& g = sign > 0 ? e.plus : e.minus;
    const ComplexGrid t = forward(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Complex target = e.kind == TransformKind::plain ? g[i] : std::conj(g[i]);
      worst = std::max(worst, std::abs(t[i] - sign * e.eigenvalue_magnitude * target));
    }
  }
  return worst;
}

// Exact eigen equation over Q(xi_p); nullopt when no exact form exists.
inline std::optional<bool> eigen_exact_holds(const EigenPair& e) {
  if (!e.plus_exact) return std::nullopt;
  const Ambient& amb = e.ambient();
  const Rational lambda = rational_pow(Rational(amb.p()), -static_cast<std::int64_t>(amb.d() / 2));
  for (int sign : {+1, -1}) {
    const CyclotomicGrid& g = sign > 0 ? *e.plus_exact : *e.minus_exact;
    const Spectrum t = forward(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Cyclotomic target = e.kind == TransformKind::plain ? g[i] : g[i].conj();
      if (t[i] != target * (lambda * sign)) return false;
    }
  }
  return true;
}

enum class SelfDualKind { empty, lagrangian, not_self_dual };

inline const char* to_string(SelfDualKind k) {
  switch (k) {
    case SelfDualKind::empty: return "empty";
    case SelfDualKind::lagrangian: return "lagrangian";
    case SelfDualKind::not_self_dual: return "not_self_dual";
  }
  return "?";
}

struct SelfDualReport {
  SelfDualKind kind = SelfDualKind::not_self_dual;
  std::optional<Subspace> lagrangian;
  std::optional<Rational> lambda;
};

// Tests E-hat = lambda 1_E with lambda = |E|/p^d, the only candidate.
inline SelfDualReport self_dual_classify(const Ambient& amb, const std::vector<Point>& e) {
  amb.require_field("self_dual_classify");
  const RationalGrid one_e = indicator(amb, e);
  const std::vector<std::size_t> support = support_indices(one_e);
  SelfDualReport r;
  if (support.empty()) {
    r.kind = SelfDualKind::empty;
    r.lambda = 0;
    return r;
  }
  const Rational lambda = Rational(static_cast<long>(support.size())) / Rational(static_cast<long>(amb.size()));
  const Spectrum s = forward(one_e);
  for (std::size_t i = 0; i < amb.size(); ++i)
    if (s[i] != Cyclotomic::from_rational(lambda * one_e[i], amb.p())) return r;

  std::vector<Point> pts;
  for (std::size_t i : support) pts.push_back(amb.point(i));
  const Subspace span = Subspace::span(amb, pts);
  if (span.size() != support.size() || !is_lagrangian(span) || amb.d() % 2 != 0)
    throw InvariantViolation("self-dual set that is not a Lagrangian subspace");
  r.kind = SelfDualKind::lagrangian;
  r.lagrangian = span;
  r.lambda = lambda;
  return r;
}

inline std::vector<Subspace> enumerate_lagrangian(const Ambient& amb, std::size_t limit = kMaxEnumeration) {
  amb.require_field("enumerate_lagrangian");
  std::vector<Subspace> out;
  if (amb.d() % 2 != 0) return out;
  for (Subspace& v : enumerate_subspaces(amb, amb.d() / 2, limit))
    if (is_lagrangian(v)) out.push_back(std::move(v));
  return out;
}

struct EigenTerm {
  std::size_t pair = 0;  // index into EigenExpansion::pairs
  bool plus = true;
  Complex coefficient;
  // Present when both the input and the pair are exact.
  std::optional<Rational> exact;
};

struct EigenExpansion {
  Ambient ambient;
  std::vector<EigenPair> pairs;
  std::vector<EigenTerm> terms;
};

// f as a combination of conjugate-transform eigenfunctions. The reduced
// wavelet decomposition writes f as delta_0 plus multiples of 1_{H_{s,t}};
// each indicator is (f+ + f-) / (2 p^(d/2-k)) for the pair of (H_{s,0}, t e_j),
// e_j the leading coordinate of s, and the constant uses the full-space pair.
template <class T>
EigenExpansion eigen_expand(const Grid<T>& f, double tol = kDefaultTolerance) {
  static_assert(!std::is_same_v<T, Cyclotomic>, "eigen_expand takes rational or complex functions");
  const Ambient& amb = f.ambient();
  amb.require_field("eigen_expand");
  EigenExpansion out{amb, {}, {}};
  const Decomposition<T> dec = decompose(f, WaveletForm::reduced, tol);

  auto add_indicator = [&](const Subspace& v, const Point& x, const T& c) {
    out.pairs.push_back(affine_eigenfunction_pair(v, x));
    const EigenPair& e = out.pairs.back();
    EigenTerm term{out.pairs.size() - 1, true, ScalarTraits<T>::to_complex(c) / (2.0 * e.scale), std::nullopt};
    if constexpr (std::is_same_v<T, Rational>) {
      if (e.scale_exact) term.exact = Rational(c / (2 * *e.scale_exact));
    }
    out.terms.push_back(term);
    term.plus = false;
    out.terms.push_back(term);
  };

  if (!ScalarTraits<T>::is_zero(dec.constant, tol)) add_indicator(Subspace::full(amb), amb.zero(), dec.constant);
  for (const Wavelet<T>& w : dec.parts) {
    const Subspace h0 = perp(Subspace::span(amb, {w.direction.rep}));
    std::size_t lead = 0;
    while (w.direction.rep[lead] == 0) ++lead;
    for (Residue t = 1; t < amb.p(); ++t) {
      if (ScalarTraits<T>::is_zero(w.coeffs[t], tol)) continue;
      Point x = amb.zero();
      x.coords[lead] = t;
      add_indicator(h0, x, w.coeffs[t]);
    }
  }
  return out;
}

inline ComplexGrid evaluate(const EigenExpansion& ex) {
  ComplexGrid out = ComplexGrid::zeros(ex.ambient);
  for (const EigenTerm& term : ex.terms) {
    const EigenPair& e = ex.pairs[term.pair];
    const ComplexGrid& g = term.plus ? e.plus : e.minus;
    for (std::size_t i = 0; i < g.size(); ++i) out[i] += term.coefficient * g[i];
  }
  return out;
}

// Exact re-evaluation; nullopt unless every term is exact.
inline std::optional<CyclotomicGrid> evaluate_exact(const EigenExpansion& ex) {
  CyclotomicGrid out = CyclotomicGrid::zeros(ex.ambient);
  for (const EigenTerm& term : ex.terms) {
    const EigenPair& e = ex.pairs[term.pair];
    if (!term.exact || !e.plus_exact) return std::nullopt;
    out += (term.plus ? *e.plus_exact : *e.minus_exact).scaled(*term.exact);
  }
  return out;
}

}  // namespace charkit
