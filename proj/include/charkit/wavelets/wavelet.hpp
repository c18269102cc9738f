#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charkit/spectrum/support.hpp"

namespace charkit {

enum class WaveletForm { plain, reduced, massless };

inline std::string to_string(WaveletForm f) {
  switch (f) {
    case WaveletForm::plain: return "plain";
    case WaveletForm::reduced: return "reduced";
    case WaveletForm::massless: return "massless";
  }
  return "?";
}

inline WaveletForm parse_wavelet_form(const std::string& s) {
  if (s == "plain") return WaveletForm::plain;
  if (s == "reduced") return WaveletForm::reduced;
  if (s == "massless") return WaveletForm::massless;
  throw DataError("unknown wavelet form '" + s + "' (expected plain, reduced or massless)");
}

// sum_t c_t 1_{H_{s,t}} for the canonical representative s of `direction`.
template <class T>
struct Wavelet {
  Ambient ambient;
  ProjectiveLine direction;
  std::vector<T> coeffs;
  WaveletForm form = WaveletForm::plain;

  // p^(d-1) sum_t c_t.
  T mass() const {
    T s = ScalarTraits<T>::zero(ambient);
    for (const T& c : coeffs) s += c;
    return scale_value(s, Rational(mpz_class(std::to_string(ambient.size() / ambient.modulus()))));
  }

  friend bool operator==(const Wavelet&, const Wavelet&) = default;
};

inline Rational rational_of(std::uint64_t n) { return Rational(mpz_class(std::to_string(n))); }

template <class T>
Grid<T> evaluate(const Wavelet<T>& w) {
  const Ambient& amb = w.ambient;
  if (w.coeffs.size() != amb.modulus()) throw DataError("wavelet needs one coefficient per residue");
  std::vector<T> v;
  v.reserve(amb.size());
  for (std::size_t i = 0; i < amb.size(); ++i) v.push_back(w.coeffs[amb.dot(amb.point(i), w.direction.rep)]);
  return Grid<T>(amb, std::move(v));
}

// m_{s,t}(f) = sum over x.s = t of f(x), t = 0..p-1.
template <class T>
std::vector<T> masses(const Grid<T>& f, const Point& s) {
  const Ambient& amb = f.ambient();
  amb.check(s);
  if (s.is_zero()) throw DomainError("mass direction must be nonzero");
  std::vector<T> m(amb.modulus(), ScalarTraits<T>::zero(amb));
  for (std::size_t i = 0; i < f.size(); ++i) m[amb.dot(amb.point(i), s)] += f[i];
  return m;
}

// Hyperplane masses for every canonical direction: the sinogram of f.
template <class T>
struct MassTable {
  Ambient ambient;
  std::map<ProjectiveLine, std::vector<T>> masses;

  friend bool operator==(const MassTable&, const MassTable&) = default;
};

template <class T>
MassTable<T> mass_table(const Grid<T>& f) {
  f.ambient().require_field("mass_table");
  MassTable<T> mt{f.ambient(), {}};
  for (const ProjectiveLine& l : enumerate_lines(f.ambient())) mt.masses.emplace(l, masses(f, l.rep));
  return mt;
}

// The wavelet with coefficients m_{s,t}(f) / p^(d-1), s the canonical
// representative of the line through `s`.
template <class T>
Wavelet<T> associated_wavelet(const Grid<T>& f, const Point& s) {
  const Ambient& amb = f.ambient();
  const ProjectiveLine line = ProjectiveLine::through(amb, s);
  std::vector<T> c = masses(f, line.rep);
  const Rational inv = 1 / rational_of(amb.size() / amb.p());
  for (T& x : c) x = scale_value(x, inv);
  return Wavelet<T>{amb, line, std::move(c), WaveletForm::plain};
}

template <class T>
struct Decomposition {
  Ambient ambient;
  WaveletForm form = WaveletForm::plain;
  // c for the plain form, delta_0 for the reduced form, m(f)/p^d for the massless form.
  T constant;
  std::vector<Wavelet<T>> parts;
  T total_mass;
};

template <class T>
Grid<T> evaluate(const Decomposition<T>& dec) {
  Grid<T> out = Grid<T>::filled(dec.ambient, dec.constant);
  for (const Wavelet<T>& w : dec.parts) out += evaluate(w);
  return out;
}

// One wavelet per active line of the spectrum, in line order.
template <class T>
Decomposition<T> decompose(const Grid<T>& f, WaveletForm form, double tol = kDefaultTolerance) {
  const Ambient& amb = f.ambient();
  amb.require_field("decompose");
  const std::vector<ProjectiveLine> active = line_support(forward(f), tol).active_lines();
  const T total = total_mass(f);
  const Rational inv_volume = 1 / rational_of(amb.size());
  const Rational inv_hyper = 1 / rational_of(amb.size() / amb.p());
  const Rational p = rational_of(amb.p());

  Decomposition<T> dec{amb, form, ScalarTraits<T>::zero(amb), {}, total};
  const T average = scale_value(total, inv_volume);
  dec.constant = scale_value(average, 1 - rational_of(active.size()));
  for (const ProjectiveLine& l : active) {
    const std::vector<T> m = masses(f, l.rep);
    std::vector<T> c(m.size(), ScalarTraits<T>::zero(amb));
    for (std::size_t t = 0; t < m.size(); ++t) {
      switch (form) {
        case WaveletForm::plain: c[t] = scale_value(m[t], inv_hyper); break;
        case WaveletForm::reduced: c[t] = scale_value(m[t] - m[0], inv_hyper); break;
        case WaveletForm::massless: c[t] = scale_value(scale_value(m[t], p) - total, inv_volume); break;
      }
    }
    if (form == WaveletForm::reduced) dec.constant += scale_value(m[0], inv_hyper);
    dec.parts.push_back(Wavelet<T>{amb, l, std::move(c), form});
  }
  if (form == WaveletForm::massless) dec.constant = average;
  return dec;
}

struct WaveletTest {
  bool constant = false;
  std::optional<ProjectiveLine> line;
};

// The line carrying the spectrum off the origin when cbw(f) = 1.
template <class T>
WaveletTest is_wavelet(const Grid<T>& f, double tol = kDefaultTolerance) {
  const LineSupportProfile prof = line_support(forward(f), tol);
  WaveletTest r;
  const auto active = prof.active_lines();
  r.constant = active.empty();
  if (active.size() == 1) r.line = active.front();
  return r;
}

}  // namespace charkit
