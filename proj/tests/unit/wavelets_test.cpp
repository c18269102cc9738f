#include <gtest/gtest.h>

#include "charkit/core/geometry.hpp"
#include "charkit/wavelets/tomography.hpp"
#include "charkit/verify/corpus.hpp"

namespace charkit {
namespace {

Rational r(long n, unsigned long d = 1) { return make_rational(n, d); }

std::vector<Point> staircase_set() {
  return {Point{{1, 2}}, Point{{2, 1}}, Point{{2, 2}}};
}

// Exact rank by Gaussian elimination.
std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

TEST(Wavelet, EqualCoefficientsGiveConstant) {
  const Ambient amb(5, 2);
  const Wavelet<Rational> w{amb, {Point{{1, 3}}}, std::vector<Rational>(5, r(2, 3)), WaveletForm::plain};
  EXPECT_EQ(evaluate(w), RationalGrid::filled(amb, r(2, 3)));
  EXPECT_EQ(w.mass(), r(2, 3) * 25);
}

TEST(Wavelet, SingleHyperplane) {
  const Ambient amb(3, 2);
  const Wavelet<Rational> w{amb, {Point{{1, 0}}}, {0, 1, 0}, WaveletForm::plain};
  EXPECT_EQ(evaluate(w), indicator(amb, hyperplane_points(amb, Point{{1, 0}}, 1)));
}

TEST(Wavelet, SpectrumLivesOnItsLine) {
  const Ambient amb(3, 2);
  const Wavelet<Rational> w{amb, {Point{{1, 1}}}, {0, r(1, 3), r(2, 3)}, WaveletForm::plain};
  const Spectrum s = forward(evaluate(w));
  for (std::size_t i = 1; i < amb.size(); ++i) {
    const Point m = amb.point(i);
    if (m[0] != m[1]) EXPECT_TRUE(s[i].is_zero()) << to_string(m);
  }
  EXPECT_EQ(is_wavelet(evaluate(w)).line->rep, (Point{{1, 1}}));
}

TEST(Masses, ConstantFunction) {
  const Ambient amb(3, 3);
  const auto m = masses(RationalGrid::filled(amb, r(5, 2)), Point{{0, 1, 2}});
  EXPECT_EQ(m, std::vector<Rational>(3, r(5, 2) * 9));
  EXPECT_THROW(masses(RationalGrid::filled(amb, 1), Point{{0, 0, 0}}), DomainError);
}

TEST(Masses, Staircase) {
  const Ambient amb(3, 2);
  EXPECT_EQ(masses(indicator(amb, staircase_set()), Point{{1, 0}}), (std::vector<Rational>{0, 1, 2}));
}

TEST(Masses, WaveletLemmaIdentity) {
  Corpus rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Ambient amb(trial % 2 ? 3 : 5, trial % 3 ? 2 : 3);
    const RationalGrid f = rng.rational_function(amb);
    const Spectrum s = forward(f);
    const Rational inv = 1 / Rational(static_cast<long>(amb.size()));
    for (std::size_t si = 1; si < amb.size(); ++si) {
      const Point dir = amb.point(si);
      const auto m = masses(f, dir);
      for (Residue k = 0; k < amb.p(); ++k) {
        Cyclotomic rhs = Cyclotomic::zero(amb.p());
        for (Residue t = 0; t < amb.p(); ++t)
          rhs += Cyclotomic::root_power(-static_cast<std::int64_t>(k * t), amb.p()) * (m[t] * inv);
        ASSERT_EQ(s.at(amb.scale(k, dir)), rhs);
      }
    }
  }
}

TEST(MassTable, TotalsAgreeAcrossDirections) {
  Corpus rng(42);
  const Ambient amb(5, 2);
  const RationalGrid f = rng.rational_function(amb);
  const MassTable<Rational> mt = mass_table(f);
  EXPECT_EQ(mt.masses.size(), 6u);
  for (const auto& [line, m] : mt.masses) {
    Rational sum = 0;
    for (const Rational& x : m) sum += x;
    EXPECT_EQ(sum, total_mass(f));
  }
}

TEST(AssociatedWavelet, WaveletIsItsOwnAssociate) {
  const Ambient amb(5, 2);
  const Wavelet<Rational> w{amb, {Point{{1, 4}}}, {r(1), r(-2), r(0), r(1, 3), r(7)}, WaveletForm::plain};
  EXPECT_EQ(associated_wavelet(evaluate(w), Point{{1, 4}}), w);
  // Non-canonical representatives of the same line give the same wavelet.
  EXPECT_EQ(associated_wavelet(evaluate(w), Point{{3, 2}}), w);
}

TEST(AssociatedWavelet, Constant) {
  const Ambient amb(3, 2);
  const auto w = associated_wavelet(RationalGrid::filled(amb, r(4)), Point{{0, 2}});
  EXPECT_EQ(w.coeffs, std::vector<Rational>(3, r(4)));
}

TEST(AssociatedWavelet, SpectrumAgreesOnLine) {
  Corpus rng(43);
  const Ambient amb(5, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalGrid f = rng.rational_function(amb);
    const Point s = rng.nonzero_point(amb);
    const auto w = associated_wavelet(f, s);
    const Spectrum a = forward(f), b = forward(evaluate(w));
    for (Residue k = 0; k < 5; ++k) EXPECT_EQ(a.at(amb.scale(k, s)), b.at(amb.scale(k, s)));
    EXPECT_EQ(w.mass(), total_mass(f));
  }
}

TEST(Decompose, ConstantHasNoParts) {
  const Ambient amb(3, 2);
  for (WaveletForm form : {WaveletForm::plain, WaveletForm::reduced, WaveletForm::massless}) {
    const auto dec = decompose(RationalGrid::filled(amb, r(-3, 2)), form);
    EXPECT_TRUE(dec.parts.empty());
    EXPECT_EQ(dec.constant, r(-3, 2));
  }
}

TEST(Decompose, StaircaseReducedForm) {
  const Ambient amb(3, 2);
  const auto dec = decompose(indicator(amb, staircase_set()), WaveletForm::reduced);
  EXPECT_EQ(dec.constant, 0);
  ASSERT_EQ(dec.parts.size(), 3u);
  // Hyperplane x.s = t for s = (0,1), (1,0), (1,1): coefficient t/3, t/3, -t/3.
  EXPECT_EQ(dec.parts[0].direction.rep, (Point{{0, 1}}));
  EXPECT_EQ(dec.parts[0].coeffs, (std::vector<Rational>{0, r(1, 3), r(2, 3)}));
  EXPECT_EQ(dec.parts[1].direction.rep, (Point{{1, 0}}));
  EXPECT_EQ(dec.parts[1].coeffs, (std::vector<Rational>{0, r(1, 3), r(2, 3)}));
  EXPECT_EQ(dec.parts[2].direction.rep, (Point{{1, 1}}));
  EXPECT_EQ(dec.parts[2].coeffs, (std::vector<Rational>{0, r(-1, 3), r(-2, 3)}));
  EXPECT_EQ(evaluate(dec), indicator(amb, staircase_set()));
}

TEST(Decompose, StaircaseGeneralPrime) {
  for (std::uint32_t p : {5u, 7u}) {
    const Ambient amb(p, 2);
    std::vector<Point> e;
    for (Residue x = 0; x < p; ++x)
      for (Residue y = 0; y < p; ++y)
        if (x + y >= p) e.push_back(Point{{x, y}});
    const auto dec = decompose(indicator(amb, e), WaveletForm::reduced);
    ASSERT_EQ(dec.parts.size(), 3u);
    EXPECT_EQ(dec.constant, 0);
    for (Residue i = 0; i < p; ++i) {
      EXPECT_EQ(dec.parts[0].coeffs[i], r(i, p));
      EXPECT_EQ(dec.parts[2].coeffs[i], -r(i, p));
    }
  }
}

TEST(Decompose, AllFormsRoundTrip) {
  Corpus rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const Ambient amb(trial % 2 ? 3 : 5, trial % 4 < 2 ? 2 : 3);
    const RationalGrid f = trial % 3 ? rng.random_indicator(amb) : rng.rational_function(amb);
    const std::size_t cbw = bandwidth(f).cbw;
    for (WaveletForm form : {WaveletForm::plain, WaveletForm::reduced, WaveletForm::massless}) {
      const auto dec = decompose(f, form);
      ASSERT_EQ(evaluate(dec), f) << to_string(form);
      EXPECT_EQ(dec.parts.size(), cbw);
      for (const auto& w : dec.parts) {
        if (form == WaveletForm::reduced) EXPECT_EQ(w.coeffs[0], 0);
        if (form == WaveletForm::massless) EXPECT_EQ(w.mass(), 0);
        if (form == WaveletForm::plain) EXPECT_EQ(w.mass(), total_mass(f));
      }
    }
  }
}

TEST(Decompose, MasslessConstantIsAverage) {
  // Mass balance forces the massless constant to be m(f)/p^d.
  Corpus rng(45);
  const Ambient amb(3, 2);
  const RationalGrid f = rng.rational_function(amb);
  const auto dec = decompose(f, WaveletForm::massless);
  EXPECT_EQ(dec.constant, total_mass(f) / 9);
  EXPECT_EQ(dec.total_mass, total_mass(f));
}

TEST(Decompose, ComplexAndCyclotomicInputs) {
  Corpus rng(46);
  const Ambient amb(3, 2);
  const CyclotomicGrid g = rng.cyclotomic_function(amb);
  for (WaveletForm form : {WaveletForm::plain, WaveletForm::reduced, WaveletForm::massless})
    EXPECT_EQ(evaluate(decompose(g, form)), g);
  const ComplexGrid h = rng.complex_function(amb);
  EXPECT_LT(max_abs_diff(evaluate(decompose(h, WaveletForm::reduced)), h), 1e-12);
}

TEST(Decompose, ReducedCoefficientsAreUnique) {
  Corpus rng(47);
  const Ambient amb(5, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalGrid f = rng.rational_function(amb);
    auto dec = decompose(f, WaveletForm::reduced);
    auto& part = dec.parts[rng.below(dec.parts.size())];
    part.coeffs[1 + rng.below(4)] += r(1, 7);
    EXPECT_NE(evaluate(dec), f);
  }
}

TEST(Decompose, DensitiesSplitIntoWaveletDensities) {
  Corpus rng(48);
  const Ambient amb(3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    RationalGrid f = RationalGrid::zeros(amb);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<long>(rng.below(5));
    f[0] += 1;
    f = f.scaled(1 / total_mass(f));
    const auto dec = decompose(f, WaveletForm::plain);
    for (const auto& w : dec.parts) {
      EXPECT_EQ(w.mass(), 1);
      for (const Rational& c : w.coeffs) EXPECT_GE(c, 0);
    }
    EXPECT_EQ(evaluate(dec), f);
  }
}

TEST(WaveletBasis, SpanDimensions) {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {5, 3}}) {
    const Ambient amb(p, d);
    for (const ProjectiveLine& l : enumerate_lines(amb)) {
      std::vector<std::vector<Rational>> full, reduced;
      for (Residue t = 0; t < p; ++t) {
        const RationalGrid h = indicator(amb, hyperplane_points(amb, l.rep, t));
        full.push_back(h.values());
        if (t > 0) reduced.push_back(h.values());
      }
      // The reduced span must also miss the constants.
      reduced.push_back(std::vector<Rational>(amb.size(), 1));
      EXPECT_EQ(rank_of(full), p);
      EXPECT_EQ(rank_of(reduced), p);
    }
  }
}

TEST(WaveletTest, Examples) {
  const Ambient amb(5, 2);
  EXPECT_EQ(is_wavelet(indicator(amb, hyperplane_points(amb, Point{{2, 1}}, 3))).line->rep, (Point{{1, 3}}));
  const RationalGrid two = indicator(amb, hyperplane_points(amb, Point{{1, 0}}, 1)) +
                           indicator(amb, hyperplane_points(amb, Point{{0, 1}}, 1));
  const WaveletTest t = is_wavelet(two);
  EXPECT_FALSE(t.line);
  EXPECT_FALSE(t.constant);
  EXPECT_TRUE(is_wavelet(RationalGrid::filled(amb, 3)).constant);
}

TEST(Tomography, ConstantMasses) {
  const Ambient amb(3, 2);
  MassTable<Rational> mt{amb, {}};
  for (const ProjectiveLine& l : enumerate_lines(amb)) mt.masses[l] = std::vector<Rational>(3, r(7) * 3);
  EXPECT_EQ(reconstruct_from_masses(mt), RationalGrid::filled(amb, 7));
}

TEST(Tomography, StaircaseRoundTrip) {
  const Ambient amb(3, 2);
  const RationalGrid e = indicator(amb, staircase_set());
  EXPECT_EQ(reconstruct_from_masses(mass_table(e)), e);
}

TEST(Tomography, RejectsCorruptAndIncompleteTables) {
  const Ambient amb(3, 2);
  MassTable<Rational> mt = mass_table(indicator(amb, staircase_set()));
  MassTable<Rational> corrupt = mt;
  corrupt.masses.begin()->second[1] += 1;
  EXPECT_THROW(reconstruct_from_masses(corrupt), DataError);
  MassTable<Rational> missing = mt;
  missing.masses.erase(ProjectiveLine{Point{{1, 2}}});
  try {
    reconstruct_from_masses(missing);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos) << e.what();
  }
  MassTable<Rational> short_row = mt;
  short_row.masses.begin()->second.pop_back();
  EXPECT_THROW(reconstruct_from_masses(short_row), DataError);
}

TEST(Tomography, RandomRoundTripIsExact) {
  Corpus rng(49);
  for (int trial = 0; trial < 60; ++trial) {
    const Ambient amb(std::vector<std::uint32_t>{2, 3, 5}[trial % 3], trial % 2 ? 2 : 3);
    const RationalGrid f = rng.rational_function(amb);
    ASSERT_EQ(reconstruct_from_masses(mass_table(f)), f);
  }
  const Ambient amb(3, 2);
  const CyclotomicGrid g = rng.cyclotomic_function(amb);
  EXPECT_EQ(reconstruct_from_masses(mass_table(g)), g);
  const ComplexGrid h = rng.complex_function(amb);
  EXPECT_LT(max_abs_diff(reconstruct_from_masses(mass_table(h)), h), 1e-12);
}

TEST(Rationality, RationalIffMassesRational) {
  Corpus rng(50);
  const Ambient amb(5, 2);
  auto all_rational = [](const MassTable<Cyclotomic>& mt) {
    for (const auto& [line, m] : mt.masses)
      for (const Cyclotomic& z : m)
        if (!z.is_rational()) return false;
    return true;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const CyclotomicGrid g = rng.cyclotomic_function(amb);
    EXPECT_EQ(all_rational(mass_table(g)), demote_rational(g).has_value());
    const CyclotomicGrid q = to_cyclotomic(rng.rational_function(amb));
    EXPECT_TRUE(all_rational(mass_table(q)));
  }
  // A function that is rational except at one point has some irrational mass.
  CyclotomicGrid g = to_cyclotomic(rng.rational_function(amb));
  g[7] += Cyclotomic::root_power(1, 5);
  EXPECT_FALSE(all_rational(mass_table(g)));
}

}  // namespace
}  // namespace charkit
