#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "charkit/scalars/cyclotomic.hpp"
#include "charkit/scalars/rational.hpp"
#include "charkit/verify/corpus.hpp"

namespace charkit {
namespace {

Cyclotomic xi_pow(std::int64_t e, std::uint32_t p) { return Cyclotomic::root_power(e, p); }

std::vector<Rational> q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(format_rational(parse_rational("6/4")), "3/2");
  EXPECT_EQ(format_rational(parse_rational("-4/2")), "-2");
  EXPECT_EQ(format_rational(parse_rational("+7")), "7");
  EXPECT_THROW(parse_rational("1/0"), DataError);
  EXPECT_THROW(parse_rational("1.5"), DataError);
  EXPECT_THROW(parse_rational(""), DataError);
}

TEST(Cyclotomic, RejectsBadConductorAndLength) {
  EXPECT_THROW(Cyclotomic(4, q({0, 0, 0})), DomainError);
  EXPECT_THROW(Cyclotomic(5, q({1, 2})), DataError);
  EXPECT_THROW(Cyclotomic::zero(3) + Cyclotomic::zero(5), DomainError);
  EXPECT_THROW(Cyclotomic::zero(3) * Cyclotomic::zero(5), DomainError);
}

TEST(Cyclotomic, MultiplicationExamples) {
  const Cyclotomic xi = xi_pow(1, 3);
  EXPECT_EQ((xi * xi).coeffs(), q({-1, -1}));

  const Cyclotomic one = Cyclotomic::from_rational(1, 3);
  EXPECT_EQ(((one + xi) * (one + xi_pow(2, 3))).coeffs(), q({1, 0}));

  const Cyclotomic a = xi_pow(1, 5) + xi_pow(4, 5);
  const Cyclotomic b = xi_pow(2, 5) + xi_pow(3, 5);
  EXPECT_EQ((a * b).coeffs(), q({-1, 0, 0, 0}));
  EXPECT_NEAR((a * b).embed().real(), (a.embed() * b.embed()).real(), 1e-12);
}

TEST(Cyclotomic, SumOfAllRootsIsZero) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    Cyclotomic s = Cyclotomic::zero(p);
    for (std::uint32_t j = 0; j < p; ++j) s += xi_pow(j, p);
    EXPECT_TRUE(s.is_zero()) << p;
  }
}

TEST(Cyclotomic, PrimePowerConductor) {
  // Q(xi_4) = Q(i).
  const Cyclotomic i = Cyclotomic::root_power(1, 2, 2);
  EXPECT_EQ((i * i).coeffs(), q({-1, 0}));
  // Q(xi_9): xi^3 is a primitive cube root of unity.
  const Cyclotomic w = Cyclotomic::root_power(3, 3, 2);
  EXPECT_TRUE((Cyclotomic::from_rational(1, 3, 2) + w + w * w).is_zero());
  Corpus rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Cyclotomic a = rng.cyclotomic(3, 2), b = rng.cyclotomic(3, 2);
    EXPECT_NEAR(std::abs((a * b).embed() - a.embed() * b.embed()), 0.0, 1e-9);
  }
}

TEST(Cyclotomic, GaloisExamples) {
  EXPECT_EQ(xi_pow(1, 3).galois(2).coeffs(), q({-1, -1}));
  Corpus rng(11);
  const Cyclotomic z = rng.cyclotomic(5);
  EXPECT_EQ(z.galois(1), z);
  const Cyclotomic xi = xi_pow(1, 5);
  EXPECT_EQ(xi.galois(2).galois(2), xi.galois(4));
  EXPECT_EQ(xi.galois(4), xi_pow(4, 5));
  EXPECT_THROW(z.galois(0), DomainError);
  EXPECT_THROW(z.galois(5), DomainError);
}

TEST(Cyclotomic, GaloisIsHomomorphismAndAutomorphism) {
  Corpus rng(12);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Cyclotomic a = rng.cyclotomic(p), b = rng.cyclotomic(p);
      const std::int64_t r = rng.between(1, p - 1), s = rng.between(1, p - 1);
      EXPECT_EQ(a.galois(r).galois(s), a.galois(r * s % p));
      EXPECT_EQ((a * b).galois(r), a.galois(r) * b.galois(r));
      EXPECT_EQ((a + b).galois(r), a.galois(r) + b.galois(r));
    }
  }
}

TEST(Cyclotomic, EmbedExamples) {
  Cyclotomic s = Cyclotomic::zero(3);
  for (int j = 0; j < 3; ++j) s += xi_pow(j, 3);
  EXPECT_EQ(s.embed(), Complex(0, 0));
  const Complex z = (xi_pow(1, 5) + xi_pow(4, 5)).embed();
  EXPECT_NEAR(z.real(), 2 * std::cos(72.0 * std::numbers::pi / 180.0), 1e-12);
  EXPECT_NEAR(z.real(), 0.6180339887498949, 1e-12);
  EXPECT_NEAR(z.imag(), 0.0, 1e-12);
}

TEST(Cyclotomic, RationalPart) {
  EXPECT_EQ(*Cyclotomic::from_rational(make_rational(2, 3), 5).rational_part(), make_rational(2, 3));
  EXPECT_FALSE(xi_pow(1, 5).rational_part().has_value());
  // xi^(p-1) reduces to -(1 + ... + xi^(p-2)); not rational for p > 2.
  EXPECT_FALSE(xi_pow(2, 3).rational_part().has_value());
  EXPECT_EQ(*xi_pow(1, 2).rational_part(), -1);
}

TEST(Cyclotomic, FieldLaws) {
  Corpus rng(2024);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 500 / 3 + 1; ++trial) {
      const Cyclotomic a = rng.cyclotomic(p), b = rng.cyclotomic(p), c = rng.cyclotomic(p);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ(a * Cyclotomic::from_rational(1, p), a);
    }
  }
}

TEST(Cyclotomic, ReductionIsCanonical) {
  // Equal elements written redundantly in different ways reduce identically.
  Corpus rng(5);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rational> red(p);
      for (Rational& c : red) c = rng.small_rational();
      const Rational shift = rng.small_rational();
      std::vector<Rational> shifted = red;
      for (Rational& c : shifted) c += shift;  // adds shift * (1 + xi + ... + xi^(p-1)) = 0
      EXPECT_EQ(Cyclotomic::from_redundant(p, 1, red), Cyclotomic::from_redundant(p, 1, shifted));
    }
  }
}

TEST(Cyclotomic, ConjugationMatchesComplexConjugate) {
  Corpus rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[trial % 3];
    const Cyclotomic z = rng.cyclotomic(p);
    const Complex lhs = z.galois(p - 1).embed();
    const Complex rhs = std::conj(z.embed());
    EXPECT_NEAR(lhs.real(), rhs.real(), 1e-9);
    EXPECT_NEAR(lhs.imag(), rhs.imag(), 1e-9);
    EXPECT_EQ(z.conj(), z.galois(p - 1));
  }
}

TEST(Cyclotomic, ExactZeroTestAgreesWithEmbedding) {
  Corpus rng(31);
  int zeros = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[trial % 3];
    std::vector<Rational> red(p);
    if (trial % 3 == 0) {
      const Rational c = rng.between(-3, 3);
      for (Rational& r : red) r = c;
    } else {
      for (Rational& r : red) r = rng.between(-2, 2);
    }
    const Cyclotomic z = Cyclotomic::from_redundant(p, 1, red);
    zeros += z.is_zero();
    EXPECT_EQ(z.is_zero(), std::abs(z.embed()) < 1e-9) << to_string(z);
  }
  EXPECT_GT(zeros, 100);
}

}  // namespace
}  // namespace charkit
