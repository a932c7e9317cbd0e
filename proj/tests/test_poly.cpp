#include <gtest/gtest.h>

#include "covsum/cyclotomic.hpp"
#include "covsum/poly_ops.hpp"
#include "covsum/poly_text.hpp"
#include "covsum/prime_field.hpp"
#include "covsum/random.hpp"
#include "oracles.hpp"

namespace covsum {
namespace {

using QPoly = MultiPoly<RationalField>;
const RationalField kQ;

QPoly q_poly(std::size_t k, std::string_view text) { return parse_poly(kQ, k, text); }

TEST(MultiPoly, CoeffExamples) {
  auto f = q_poly(2, "x1*x2 + 2*x1");
  EXPECT_EQ(f.coeff({1, 1}), Rational(1));
  EXPECT_EQ(f.coeff({0, 1}), Rational(0));
  EXPECT_THROW(f.coeff({1}), DomainError);
  auto x1 = QPoly::variable(kQ, 2, 1);
  auto x2 = QPoly::variable(kQ, 2, 2);
  auto square = (x1 + x2) * (x1 + x2);
  EXPECT_EQ(square.coeff({1, 1}), Rational(2));
  EXPECT_EQ(square.degree(), 2);
  EXPECT_EQ(QPoly(kQ, 3).degree(), kDegreeNegInf);
}

TEST(MultiPoly, IndicatorEvaluationMatchesGeneralEvaluation) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly(kQ, 5, 4, 8, rng);
    for (Mask m = 0; m < 32; ++m) {
      std::vector<Rational> x(5);
      for (std::size_t s = 1; s <= 5; ++s) x[s - 1] = contains(m, s) ? 1 : 0;
      ASSERT_EQ(f.evaluate(x), f.evaluate_indicator(m));
    }
  }
}

TEST(PolyText, RoundTripAndForms) {
  auto f = q_poly(3, "3/2*x1^2*x3 - x2 + 4 + x2*x1");
  EXPECT_EQ(format_poly(f), "3/2*x1^2*x3 + x1*x2 + -1*x2 + 4");
  EXPECT_EQ(q_poly(3, format_poly(f)), f);
  EXPECT_EQ(format_poly(QPoly(kQ, 2)), "0");
  EXPECT_EQ(q_poly(2, "0"), QPoly(kQ, 2));
  EXPECT_THROW(q_poly(2, "x3"), DomainError);
  EXPECT_THROW(q_poly(2, "x1 + "), DomainError);
  PrimeField f5(5);
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_poly(f5, 4, 5, 6, rng);
    ASSERT_EQ(parse_poly(f5, 4, format_poly(g)), g);
    auto h = random_poly(kQ, 4, 5, 6, rng);
    ASSERT_EQ(q_poly(4, format_poly(h)), h);
  }
}

TEST(CoeffBySubsets, Examples) {
  EXPECT_EQ(coeff_by_subsets(q_poly(2, "x1*x2"), 0b11), Rational(1));
  EXPECT_EQ(coeff_by_subsets(q_poly(2, "3*x1 + 5*x2"), 0b11), Rational(0));
  EXPECT_EQ(coeff_by_subsets(QPoly(kQ, 4), 0b1), Rational(0));
  try {
    coeff_by_subsets(q_poly(2, "x1^2"), 0b1);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "formula-inapplicable");
  }
}

template <Ring R>
void check_formula(const R& ring, Rng& rng, int trials, std::size_t max_k) {
  for (int trial = 0; trial < trials; ++trial) {
    std::size_t k = 1 + uniform_below(rng, max_k);
    Mask subset = uniform_below(rng, Mask{1} << k);
    unsigned size = subset_size(subset);
    auto f = random_poly(ring, k, size, 1 + uniform_below(rng, 10), rng);
    // plant the target monomial half of the time
    if (trial % 2 == 0) f += MultiPoly<R>::multilinear(ring, k, subset, random_element(ring, rng));
    if (f.degree() > static_cast<int>(size)) continue;
    ASSERT_EQ(coeff_by_subsets(f, subset), f.multilinear_coeff(subset))
        << format_poly(f) << " J=" << subset;
  }
}

TEST(CoeffBySubsets, MatchesSparseExtraction) {
  Rng rng(2024);
  check_formula(kQ, rng, 200, 8);
  for (std::uint64_t p : {2, 3, 5, 7}) check_formula(PrimeField(p), rng, 200, 8);
  check_formula(PrimeField(7), rng, 100, 6);
}

TEST(CoeffBySubsets, DegreeOverflowMakesFormulaFail) {
  // With deg f = |J| + 1 the identity is not guaranteed; in a batch of 50 at
  // least one instance must disagree.
  Rng rng(77);
  for (int batch = 0; batch < 5; ++batch) {
    int disagreements = 0;
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t k = 2 + uniform_below(rng, 5);
      Mask subset = 1 + uniform_below(rng, (Mask{1} << k) - 1);
      unsigned size = subset_size(subset);
      auto f = random_poly(kQ, k, size + 1, 6, rng);
      f += MultiPoly<RationalField>::constant(kQ, k, 0);
      if (f.degree() != static_cast<int>(size) + 1) continue;
      BlackBoxPoly<RationalField> lying = BlackBoxPoly<RationalField>::from(f);
      lying.degree_bound = static_cast<int>(size);
      if (!(coeff_by_subsets(lying, subset) == f.multilinear_coeff(subset))) ++disagreements;
    }
    EXPECT_GT(disagreements, 0);
  }
}

TEST(CoeffBySubsets, VariableSplittingIdentity) {
  // l_1!...l_k! [x^l] f equals the multilinear coefficient of f after
  // replacing x_i by a sum of l_i fresh variables.
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t k = 1 + uniform_below(rng, 3);
    std::vector<unsigned> l(k);
    std::size_t total = 0;
    for (auto& li : l) total += (li = static_cast<unsigned>(uniform_below(rng, 3)));
    if (total == 0) continue;
    auto f = random_poly(kQ, k, static_cast<unsigned>(total), 8, rng);
    Exponents target(l.begin(), l.end());
    f.add_term(target, Rational(3));
    std::vector<QPoly> sums;
    std::size_t next = 1;
    for (std::size_t i = 0; i < k; ++i) {
      QPoly s(kQ, total);
      for (unsigned j = 0; j < l[i]; ++j) s += QPoly::variable(kQ, total, next++);
      sums.push_back(s);
    }
    QPoly composed(kQ, total);
    for (const auto& [e, c] : f.terms()) {
      QPoly term = QPoly::constant(kQ, total, c);
      for (std::size_t i = 0; i < k; ++i) {
        for (unsigned r = 0; r < e[i]; ++r) term = term * sums[i];
      }
      composed += term;
    }
    Rational factorials = 1;
    for (auto li : l) {
      for (unsigned j = 2; j <= li; ++j) factorials *= Rational(static_cast<std::int64_t>(j));
    }
    Mask all = full_mask(total);
    EXPECT_EQ(composed.multilinear_coeff(all), factorials * f.coeff(target));
    if (f.degree() <= static_cast<int>(total)) {
      EXPECT_EQ(coeff_by_subsets(composed, all), factorials * f.coeff(target));
    }
  }
}

TEST(Escott, Examples) {
  std::vector<Rational> ones{1, 1};
  EXPECT_EQ(escott_sum(kQ, std::span<const Rational>(ones), 1), Rational(0));
  std::vector<Rational> single{1};
  EXPECT_EQ(escott_sum(kQ, std::span<const Rational>(single), 1), Rational(-1));
  IntegerRing z;
  std::vector<BigInt> c{3, 5, 7};
  for (unsigned n = 0; n < 3; ++n) EXPECT_EQ(escott_sum(z, std::span<const BigInt>(c), n), 0);
  EXPECT_NE(escott_sum(z, std::span<const BigInt>(c), 3), 0);
}

TEST(Escott, VanishesBelowK) {
  Rng rng(8);
  IntegerRing z;
  for (std::size_t k = 1; k <= 10; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<BigInt> c(k);
      for (auto& x : c) x = uniform_between(rng, -1000, 1000);
      for (unsigned n = 0; n < k; ++n) ASSERT_EQ(escott_sum(z, std::span<const BigInt>(c), n), 0);
    }
  }
}

TEST(ChiBasis, Examples) {
  EXPECT_TRUE(chi_basis_independence(1, kQ));
  EXPECT_TRUE(chi_basis_independence(3, PrimeField(2)));
  EXPECT_TRUE(chi_basis_independence(4, kQ));
  EXPECT_TRUE(chi_basis_independence(5, PrimeField(3)));
  EXPECT_THROW(chi_basis_independence(6, kQ), CapExceeded);
}

TEST(Permanent, Examples) {
  IntegerRing z;
  EXPECT_EQ(permanent(z, Matrix<IntegerRing>{{1, 0}, {0, 1}}), 1);
  EXPECT_EQ(permanent(z, Matrix<IntegerRing>{{1, 2}, {3, 4}}), 10);
  Matrix<IntegerRing> ones(4, std::vector<BigInt>(4, 1));
  EXPECT_EQ(permanent(z, ones), 24);
  EXPECT_EQ(permanent(z, Matrix<IntegerRing>{}), 1);
  EXPECT_THROW(permanent(z, Matrix<IntegerRing>{{1, 2}}), DomainError);
  Matrix<IntegerRing> big(21, std::vector<BigInt>(21, 1));
  EXPECT_THROW(permanent(z, big), CapExceeded);
}

TEST(Permanent, AgreesWithPermutationSum) {
  PrimeField f11(11);
  Rng rng(12);
  for (std::size_t m = 1; m <= 7; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix<PrimeField> a(m, std::vector<ModP>(m, f11.zero()));
      for (auto& row : a) {
        for (auto& x : row) x = random_element(f11, rng);
      }
      ASSERT_EQ(permanent(f11, a), testing::naive_permanent(a, f11.zero(), f11.one()));
    }
  }
}

TEST(CnWitness, Examples) {
  auto f = BlackBoxPoly<RationalField>::from(q_poly(2, "x1 - x2"));
  std::vector<std::vector<Rational>> grid{{0, 1}, {0}};
  auto w = cn_witness(f, grid, 0b01);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::vector<Rational>{1, 0}));

  auto g = BlackBoxPoly<RationalField>::from(q_poly(2, "x1*x2"));
  auto w2 = cn_witness(g, {{0, 1}, {0, 1}}, 0b11);
  ASSERT_TRUE(w2);
  EXPECT_EQ(*w2, (std::vector<Rational>{1, 1}));

  auto h = BlackBoxPoly<RationalField>::from(q_poly(2, "x1^2 - x1"));
  try {
    cn_witness(h, {{0, 1}, {0, 1}}, 0b11);
    FAIL();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.code(), "hypothesis-fails");
  }
}

TEST(CnWitness, RandomMultilinearOverZ5) {
  PrimeField f5(5);
  Rng rng(55);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = 1 + uniform_below(rng, 8);
    Mask subset = uniform_below(rng, Mask{1} << k);
    MultiPoly<PrimeField> f(f5, k);
    for (int t = 0; t < 6; ++t) {
      Mask support = uniform_below(rng, Mask{1} << k) & subset;
      f += MultiPoly<PrimeField>::multilinear(f5, k, support, random_element(f5, rng));
    }
    f += MultiPoly<PrimeField>::multilinear(f5, k, subset, random_nonzero(f5, rng));
    if (f.multilinear_coeff(subset) == f5.zero()) continue;
    std::vector<std::vector<ModP>> grid(k);
    for (std::size_t s = 1; s <= k; ++s) {
      ModP b = random_element(f5, rng);
      grid[s - 1] = {b};
      if (contains(subset, s)) grid[s - 1].push_back(b + random_nonzero(f5, rng));
    }
    auto w = cn_witness(BlackBoxPoly<PrimeField>::from(f), grid, subset);
    ASSERT_TRUE(w);
    for (std::size_t s = 0; s < k; ++s) {
      ASSERT_NE(std::find(grid[s].begin(), grid[s].end(), (*w)[s]), grid[s].end());
    }
    ASSERT_NE(f.evaluate(*w), f5.zero());
    ++found;
  }
  EXPECT_GT(found, 100);
}

}  // namespace
}  // namespace covsum
