#include <random>

#include <gtest/gtest.h>

#include "covsum/cyclotomic.hpp"
#include "covsum/error.hpp"
#include "covsum/extension_field.hpp"
#include "covsum/number_theory.hpp"
#include "covsum/rational.hpp"
#include "covsum/roots.hpp"
#include "oracles.hpp"

namespace covsum {
namespace {

using testing::exact_binomial;
using testing::mod_nonneg;

TEST(Rational, NormalizesSignAndGcd) {
  Rational q(BigInt(6), BigInt(-4));
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).to_string(), "0/1");
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError);
  EXPECT_EQ(Rational::parse("-10/4"), Rational(BigInt(-5), BigInt(2)));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("3/x"), DomainError);
}

TEST(Rational, FracPartExamples) {
  EXPECT_EQ(frac_part(Rational::parse("7/4")), Rational::parse("3/4"));
  EXPECT_EQ(frac_part(Rational::parse("-1/3")), Rational::parse("2/3"));
  EXPECT_EQ(frac_part(Rational(5)), Rational(0));
  EXPECT_EQ(floor(Rational::parse("-1/3")), -1);
  EXPECT_EQ(floor(Rational::parse("-6/3")), -2);
}

TEST(Rational, FracPlusFloorIsIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    Rational q = testing::random_rational(rng, 1000);
    Rational f = frac_part(q);
    EXPECT_GE(f, Rational(0));
    EXPECT_LT(f, Rational(1));
    EXPECT_EQ(f + Rational(floor(q)), q);
  }
}

TEST(BinomCriterion, Examples) {
  EXPECT_EQ(binom_criterion(6, 3, 1).value(), 1U);
  EXPECT_EQ(binom_criterion(1, 2, 1).value(), 0U);
  EXPECT_EQ(binom_criterion(4, 2, 2).value(), 1U);
}

TEST(BinomCriterion, AgreesWithExactBinomialAndIverson) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned h = 1; h <= 3; ++h) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < h; ++i) q *= p;
      for (std::int64_t a = -200; a <= 200; ++a) {
        auto got = binom_criterion(a, p, h).value();
        auto exact = mod_nonneg(exact_binomial(BigInt(a - 1), static_cast<unsigned>(q - 1)), p);
        auto iverson = (a % static_cast<std::int64_t>(q) == 0) ? 1U : 0U;
        ASSERT_EQ(got, exact) << "a=" << a << " p=" << p << " h=" << h;
        ASSERT_EQ(got, iverson) << "a=" << a << " p=" << p << " h=" << h;
      }
    }
  }
}

TEST(BinomialModP, NegativeTopUsesFallingFactorial) {
  PrimeField f7(7);
  for (std::int64_t n = -30; n <= 30; ++n) {
    for (unsigned k = 0; k <= 12; ++k) {
      ASSERT_EQ(binomial_mod_p(n, k, f7).value(), mod_nonneg(exact_binomial(n, k), 7));
    }
  }
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(2, 7), 3U);
  EXPECT_EQ(multiplicative_order(5, 1), 1U);
  EXPECT_EQ(multiplicative_order(3, 8), 2U);
  EXPECT_THROW(multiplicative_order(2, 6), DomainError);
  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      if (std::gcd(p, static_cast<std::int64_t>(n)) != 1) continue;
      EXPECT_EQ(multiplicative_order(p, n), testing::naive_order(p, n));
    }
  }
}

TEST(CyclotomicPoly, Examples) {
  EXPECT_EQ(cyclotomic_poly(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_poly(4), (IntPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_poly(6), (IntPoly{1, -1, 1}));
}

TEST(CyclotomicPoly, ProductOverDivisorsIsXnMinusOne) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    IntPoly product{1};
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) product = poly_mul(product, cyclotomic_poly(d));
    }
    IntPoly expected(n + 1, BigInt(0));
    expected[0] = -1;
    expected[n] = 1;
    ASSERT_EQ(product, expected) << "n=" << n;
    EXPECT_EQ(cyclotomic_poly(n).size() - 1, euler_phi(n));
  }
}

CyclotomicElement random_cyclotomic(const CyclotomicField& field, std::mt19937_64& rng) {
  std::vector<Rational> c(field.degree());
  for (auto& x : c) x = testing::random_rational(rng, 9);
  return field.make(std::move(c));
}

TEST(CyclotomicField, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(5);
  for (std::uint64_t n = 1; n <= 12; ++n) {
    CyclotomicField field(n);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_cyclotomic(field, rng);
      auto b = random_cyclotomic(field, rng);
      auto c = random_cyclotomic(field, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_EQ(field.inv(a) * a, field.one());
    }
  }
}

TEST(CyclotomicField, FormatParseRoundTrip) {
  CyclotomicField field(12);
  auto z = field.generator();
  auto v = z * z + field.embed(Rational::parse("-3/2"));
  EXPECT_EQ(field.parse(field.format(v)), v);
}

TEST(ExtensionField, DeterministicModulusAndAxioms) {
  ExtensionField gf4(2, 2);
  EXPECT_EQ(gf4.modulus(), (ModPoly{1, 1, 1}));
  ExtensionField gf27(3, 3);
  EXPECT_TRUE(is_irreducible_mod_p(gf27.modulus(), 3));
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));  // (x+1)^2
  for (std::uint64_t i = 1; i < gf27.order(); ++i) {
    auto a = gf27.element_at(i);
    EXPECT_EQ(gf27.inv(a) * a, gf27.one());
    for (std::uint64_t j = 0; j < gf27.order(); j += 5) {
      auto b = gf27.element_at(j);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + a), a * b + a * a);
    }
  }
  EXPECT_EQ(gf27.parse(gf27.format(gf27.element_at(17))), gf27.element_at(17));
}

TEST(RootOfUnity, Examples) {
  auto unit = std::get<CyclotomicRoot>(root_of_unity({0, 1}, 1));
  EXPECT_EQ(unit.zeta, unit.field.one());

  auto gf4 = std::get<FiniteFieldRoot>(root_of_unity({2, 1}, 3));
  EXPECT_EQ(gf4.field.degree(), 2U);
  EXPECT_EQ(power(gf4.field, gf4.zeta, 3), gf4.field.one());
  EXPECT_NE(gf4.zeta, gf4.field.one());

  try {
    root_of_unity({2, 1}, 4);
    FAIL() << "expected no root of unity";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "no-root-of-unity");
  }
}

TEST(RootOfUnity, ExactOrderExhaustive) {
  for (std::uint64_t n = 1; n <= 24; ++n) {
    auto root = std::get<CyclotomicRoot>(root_of_unity({0, 1}, n));
    auto acc = root.field.one();
    for (std::uint64_t m = 1; m < n; ++m) {
      acc = acc * root.zeta;
      ASSERT_NE(acc, root.field.one()) << "n=" << n << " m=" << m;
    }
    ASSERT_EQ(acc * root.zeta, root.field.one());
  }
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 1; n <= 24; ++n) {
      if (n % p == 0) {
        EXPECT_THROW(root_of_unity({p, 1}, n), DomainError);
        continue;
      }
      auto root = std::get<FiniteFieldRoot>(root_of_unity({p, 1}, n));
      EXPECT_EQ(root.field.degree(), multiplicative_order(static_cast<std::int64_t>(p), n));
      auto acc = root.field.one();
      for (std::uint64_t m = 1; m < n; ++m) {
        acc = acc * root.zeta;
        ASSERT_NE(acc, root.field.one()) << "p=" << p << " n=" << n << " m=" << m;
      }
      ASSERT_EQ(acc * root.zeta, root.field.one());
    }
  }
}

}  // namespace
}  // namespace covsum
