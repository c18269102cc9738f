// Bandwidth and reduced wavelet decomposition of the staircase set
// E = {(x, y) : x + y >= p} in Z_p^2.

#include <cstdlib>
#include <iostream>

#include "charkit/charkit.hpp"

using namespace charkit;

int main(int argc, char** argv) {
  const std::uint32_t p = argc > 1 ? static_cast<std::uint32_t>(std::atoi(argv[1])) : 5;
  const Ambient amb(p, 2);
  std::vector<Point> e;
  for (Residue x = 0; x < p; ++x)
    for (Residue y = 0; y < p; ++y)
      if (x + y >= p) e.push_back(Point{{x, y}});
  const RationalGrid f = indicator(amb, e);

  const BandwidthReport bw = bandwidth(f);
  std::cout << "|E| = " << e.size() << ", cbw = " << bw.cbw << ", bw = " << format_rational(bw.bw) << "\n";

  const Decomposition<Rational> dec = decompose(f, WaveletForm::reduced);
  for (const Wavelet<Rational>& w : dec.parts) {
    std::cout << "direction " << to_string(w.direction.rep) << ":";
    for (const Rational& c : w.coeffs) std::cout << " " << format_rational(c);
    std::cout << "\n";
  }
  std::cout << "reconstructs exactly: " << (evaluate(dec) == f ? "yes" : "no") << "\n";
}
