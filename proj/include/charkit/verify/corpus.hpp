#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "charkit/core/subspace.hpp"
#include "charkit/fourier/grid.hpp"

namespace charkit {

// Seed-driven generator shared by every randomized suite. The engine is
// mt19937_64 and draws are reduced by modulo, so a seed fixes the corpus
// on every platform.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (engine_() >> 11) & 1; }

  // num / den with |num| <= max_num and 1 <= den <= max_den.
  Rational small_rational(std::int64_t max_num = 6, std::int64_t max_den = 4) {
    const std::int64_t num = between(-max_num, max_num);
    const std::int64_t den = between(1, max_den);
    return make_rational(num, static_cast<unsigned long>(den));
  }

  RationalGrid rational_function(const Ambient& amb) {
    std::vector<Rational> v;
    v.reserve(amb.size());
    for (std::size_t i = 0; i < amb.size(); ++i) v.push_back(small_rational());
    return RationalGrid(amb, std::move(v));
  }

  std::vector<bool> subset_mask(const Ambient& amb) {
    std::vector<bool> m(amb.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = coin();
    return m;
  }

  std::vector<bool> nonempty_subset_mask(const Ambient& amb) {
    while (true) {
      auto m = subset_mask(amb);
      for (bool b : m)
        if (b) return m;
    }
  }

  RationalGrid random_indicator(const Ambient& amb) { return indicator_from_mask(amb, subset_mask(amb)); }

  Cyclotomic cyclotomic(std::uint32_t p, std::uint32_t l = 1) {
    Cyclotomic z = Cyclotomic::zero(p, l);
    std::vector<Rational> c(z.degree());
    for (Rational& q : c) q = small_rational();
    return Cyclotomic(p, l, std::move(c));
  }

  CyclotomicGrid cyclotomic_function(const Ambient& amb) {
    std::vector<Cyclotomic> v;
    v.reserve(amb.size());
    for (std::size_t i = 0; i < amb.size(); ++i) v.push_back(cyclotomic(amb.p(), amb.exponent()));
    return CyclotomicGrid(amb, std::move(v));
  }

  ComplexGrid complex_function(const Ambient& amb) {
    std::vector<Complex> v;
    v.reserve(amb.size());
    for (std::size_t i = 0; i < amb.size(); ++i) v.emplace_back(unit_double() * 2 - 1, unit_double() * 2 - 1);
    return ComplexGrid(amb, std::move(v));
  }

  double unit_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  Point point(const Ambient& amb) { return amb.point(below(amb.size())); }

  Point nonzero_point(const Ambient& amb) { return amb.point(1 + below(amb.size() - 1)); }

  // Uniform over k-dimensional subspaces by rejection on random spanning sets.
  Subspace subspace(const Ambient& amb, std::uint32_t k) {
    while (true) {
      std::vector<Point> gens;
      for (std::uint32_t i = 0; i < k; ++i) gens.push_back(point(amb));
      Subspace s = Subspace::span(amb, gens);
      if (s.dim() == k) return s;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace charkit
