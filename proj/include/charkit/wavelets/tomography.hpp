#pragma once

#include "charkit/wavelets/wavelet.hpp"

namespace charkit {

namespace detail {

inline RationalGrid from_spectral(const Spectrum& s, const Rational*) { return inverse_rational(s); }
inline CyclotomicGrid from_spectral(const Spectrum& s, const Cyclotomic*) { return inverse(s); }
inline ComplexGrid from_spectral(const ComplexSpectrum& s, const Complex*) { return inverse(s); }

}  // namespace detail

// Rebuilds f from its hyperplane masses. On the line through s,
//   f-hat(ks) = (1/p) sum_t xi^(-kt) m_{s,t} / p^(d-1),
// and f-hat(0) is the common total over p^d.
template <class T>
Grid<T> reconstruct_from_masses(const MassTable<T>& mt, double tol = kDefaultTolerance) {
  using S = typename ScalarTraits<T>::Spectral;
  const Ambient& amb = mt.ambient;
  amb.require_field("reconstruct_from_masses");

  std::string missing;
  std::size_t missing_count = 0;
  for (const ProjectiveLine& l : enumerate_lines(amb)) {
    if (mt.masses.count(l)) continue;
    if (missing_count++ < 8) missing += (missing.empty() ? "" : ", ") + to_string(l.rep);
  }
  if (missing_count > 0)
    throw DataError("mass table is missing " + std::to_string(missing_count) + " direction(s): " + missing +
                    (missing_count > 8 ? ", ..." : ""));
  if (mt.masses.size() != line_count(amb)) throw DataError("mass table has directions that are not canonical lines");

  std::optional<T> total;
  for (const auto& [line, m] : mt.masses) {
    if (m.size() != amb.p())
      throw DataError("direction " + to_string(line.rep) + " has " + std::to_string(m.size()) + " masses, expected " +
                      std::to_string(amb.p()));
    T sum = ScalarTraits<T>::zero(amb);
    for (const T& x : m) sum += x;
    if (!total)
      total = sum;
    else if (!ScalarTraits<T>::equal(sum, *total, tol))
      throw DataError("inconsistent mass table: direction " + to_string(line.rep) +
                      " has a different total from the first direction");
  }

  const Rational inv_volume = 1 / rational_of(amb.size());
  Grid<S> spec = Grid<S>::zeros(amb);
  spec[0] = ScalarTraits<T>::to_spectral(scale_value(*total, inv_volume), amb);
  for (const auto& [line, m] : mt.masses) {
    for (Residue k = 1; k < amb.p(); ++k) {
      S acc = ScalarTraits<S>::zero(amb);
      for (Residue t = 0; t < amb.p(); ++t)
        acc += times_root(ScalarTraits<T>::to_spectral(m[t], amb), -static_cast<std::int64_t>(k * t), amb);
      spec.at(amb.scale(k, line.rep)) = scale_value(acc, inv_volume);
    }
  }
  return detail::from_spectral(spec, static_cast<const T*>(nullptr));
}

}  // namespace charkit
