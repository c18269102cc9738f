#pragma once

#include <cmath>
#include <vector>

#include "charkit/core/lines.hpp"
#include "charkit/fourier/transform.hpp"

namespace charkit {

// Which punctured lines through the origin carry spectrum.
struct LineSupportProfile {
  std::vector<ProjectiveLine> lines;
  std::vector<bool> active;
  // Lines on which the spectrum vanishes at some but not all punctured
  // points. Always zero for the transform of a rational function.
  std::size_t partial = 0;
  bool dc_active = false;

  std::size_t active_count() const {
    std::size_t n = 0;
    for (bool a : active) n += a;
    return n;
  }

  std::vector<ProjectiveLine> active_lines() const {
    std::vector<ProjectiveLine> out;
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (active[i]) out.push_back(lines[i]);
    return out;
  }

  std::vector<ProjectiveLine> vanishing_lines() const {
    std::vector<ProjectiveLine> out;
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (!active[i]) out.push_back(lines[i]);
    return out;
  }
};

template <class S>
LineSupportProfile line_support(const Grid<S>& spectrum, double tol = kDefaultTolerance) {
  const Ambient& amb = spectrum.ambient();
  amb.require_field("line_support");
  LineSupportProfile out;
  out.lines = enumerate_lines(amb);
  out.active.assign(out.lines.size(), false);
  out.dc_active = !ScalarTraits<S>::is_zero(spectrum[0], tol);
  for (std::size_t i = 0; i < out.lines.size(); ++i) {
    std::size_t nonzero = 0;
    for (const Point& m : out.lines[i].punctured_points(amb))
      nonzero += !ScalarTraits<S>::is_zero(spectrum.at(m), tol);
    out.active[i] = nonzero > 0;
    if (nonzero > 0 && nonzero < amb.p() - 1) ++out.partial;
  }
  return out;
}

// log_p((p-1) cbw + 1).
inline double bandwidth_dimension(std::uint32_t p, std::uint64_t cbw) {
  return std::log(static_cast<double>((p - 1) * cbw + 1)) / std::log(static_cast<double>(p));
}

struct BandwidthReport {
  std::uint64_t cbw = 0;
  Rational bw;
  double bwd = 0;
  std::vector<ProjectiveLine> lines;
  bool approximate = false;
};

inline BandwidthReport bandwidth_report(const LineSupportProfile& profile, const Ambient& amb, bool approximate) {
  BandwidthReport r;
  r.lines = profile.active_lines();
  r.cbw = r.lines.size();
  r.bw = Rational(static_cast<long>(r.cbw)) * Rational(static_cast<long>(amb.p() - 1)) /
         Rational(static_cast<long>(line_count(amb) * (amb.p() - 1)));
  r.bwd = bandwidth_dimension(amb.p(), r.cbw);
  r.approximate = approximate;
  return r;
}

inline BandwidthReport bandwidth_of_spectrum(const Spectrum& s) {
  return bandwidth_report(line_support(s), s.ambient(), false);
}

inline BandwidthReport bandwidth_of_spectrum(const ComplexSpectrum& s, double tol = kDefaultTolerance) {
  return bandwidth_report(line_support(s, tol), s.ambient(), true);
}

inline BandwidthReport bandwidth(const RationalGrid& f) { return bandwidth_of_spectrum(forward(f)); }
inline BandwidthReport bandwidth(const CyclotomicGrid& f) { return bandwidth_of_spectrum(forward(f)); }
inline BandwidthReport bandwidth(const ComplexGrid& f, double tol = kDefaultTolerance) {
  return bandwidth_of_spectrum(forward(f), tol);
}

// cbw of the indicator of a point set.
inline std::uint64_t set_bandwidth(const Ambient& amb, const std::vector<Point>& e) {
  return bandwidth(indicator(amb, e)).cbw;
}

}  // namespace charkit
