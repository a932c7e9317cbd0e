#include <gtest/gtest.h>

#include "covsum/generate.hpp"
#include "covsum/lemma41.hpp"
#include "covsum/naive.hpp"
#include "covsum/poly_text.hpp"
#include "covsum/prime_field.hpp"
#include "covsum/theorem21.hpp"

namespace covsum {
namespace {

const RationalField kQ;

CoverSystem sys(std::initializer_list<std::pair<std::int64_t, std::uint64_t>> classes) {
  std::vector<ResidueClass> out;
  for (auto [a, n] : classes) out.emplace_back(a, n);
  return CoverSystem(std::move(out));
}

AugmentedSystem aug(std::pair<std::int64_t, std::uint64_t> first,
                    std::initializer_list<std::pair<std::int64_t, std::uint64_t>> tail) {
  return AugmentedSystem(ResidueClass(first.first, first.second), sys(tail));
}

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(BigInt(a), BigInt(b)); }

std::set<Rational> keys(const Spectrum& s) { return naive::keys_of(s); }

CoverSystem repeated(const CoverSystem& base, std::size_t times) {
  std::vector<ResidueClass> out;
  for (std::size_t i = 0; i < times; ++i) {
    out.insert(out.end(), base.classes().begin(), base.classes().end());
  }
  return CoverSystem(std::move(out));
}

AugmentedSystem first_as_distinguished(const CoverSystem& cover) {
  return AugmentedSystem(cover.at(1), cover.without(1));
}

TEST(Spectrum, Examples) {
  auto one = fractional_spectrum(sys({{0, 2}}), {1});
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one.at(q(0)).front().mask, 0u);
  EXPECT_EQ(one.at(q(1, 2)).front().mask, 1u);
  EXPECT_EQ(keys(fractional_spectrum(sys({{0, 2}, {0, 3}}), {1, 1})),
            (std::set<Rational>{q(0), q(1, 2), q(1, 3), q(5, 6)}));
  EXPECT_EQ(keys(fractional_spectrum(sys({{1, 3}, {2, 3}}), {1, 1})),
            (std::set<Rational>{q(0), q(1, 3), q(2, 3)}));
  EXPECT_THROW(fractional_spectrum(sys({{0, 2}}), {2}), HypothesisViolation);
}

TEST(Spectrum, RecordsAreExactAndOrdered) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    CoverSystem cover = random_m_cover(rng, {2, 10, 24, 3});
    Multipliers m = random_coprime_multipliers(cover, rng);
    auto spectrum = fractional_spectrum(cover, m);
    std::size_t total = 0;
    for (const auto& [key, records] : spectrum) {
      ASSERT_EQ((key * Rational(static_cast<std::int64_t>(cover.period()))).den(), 1);
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i > 0) ASSERT_LT(records[i - 1].mask, r.mask);
        ASSERT_EQ(r.frac, key);
        ASSERT_EQ(r.frac + Rational(r.whole), naive::subset_sum(cover, m, r.mask));
        ASSERT_EQ(r.size, subset_size(r.mask));
      }
      total += records.size();
    }
    ASSERT_EQ(total, std::size_t{1} << cover.size());
  }
}

TEST(Progression, Examples) {
  auto a = find_progression({q(0), q(1, 3), q(2, 3)}, 3, 3);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->alpha, q(0));
  auto b = find_progression({q(1, 6), q(2, 3)}, 2, 6);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->alpha, q(1, 3));
  EXPECT_EQ(b->values(), (std::vector<Rational>{q(1, 6), q(2, 3)}));
  EXPECT_FALSE(find_progression({q(0), q(1, 2)}, 3, 6));
  EXPECT_THROW(find_progression({q(0)}, 4, 6), DomainError);
  EXPECT_THROW(find_progression({q(1, 4)}, 2, 6), DomainError);
}

TEST(Progression, CandidateScanMatchesDenseScan) {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    std::uint64_t period = 1 + uniform_below(rng, 24);
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d <= period; ++d) {
      if (period % d == 0) divisors.push_back(d);
    }
    std::uint64_t n0 = divisors[uniform_below(rng, divisors.size())];
    std::set<Rational> keys;
    for (std::uint64_t u = 0; u < period; ++u) {
      if (uniform_below(rng, 3) != 0) keys.insert(Rational(BigInt(u), BigInt(period)));
    }
    auto fast = find_progression(keys, n0, period);
    auto dense = naive::least_alpha(keys, n0, period);
    ASSERT_EQ(fast.has_value(), dense.has_value());
    if (fast) ASSERT_EQ(fast->alpha, *dense);
  }
}

Theorem21Instance<RationalField> rational_instance(AugmentedSystem system, Multipliers m, Mask j,
                                                   std::vector<ValuePair<RationalField>> x) {
  const std::size_t k = system.tail().size();
  return {kQ, std::move(system), std::move(m), j, MultiPoly<RationalField>::constant(kQ, k, 1),
          std::move(x)};
}

TEST(FieldValueProgression, BasicLemmaCase) {
  auto inst = rational_instance(aug({0, 1}, {{0, 1}, {0, 1}}), {1, 1}, 0,
                                {{q(0), q(1)}, {q(0), q(5)}});
  auto report = verify_theorem21(inst);
  EXPECT_TRUE(report.theorem_holds);
  EXPECT_EQ(report.bound, 1u);
  EXPECT_GE(report.sizes.at(0), 1u);
}

TEST(FieldValueProgression, TwoClassTail) {
  auto inst = rational_instance(aug({0, 1}, {{0, 2}, {1, 2}}), {1, 1}, 0b01,
                                {{q(0), q(1, 2)}, {q(0), q(1, 2)}});
  auto report = verify_theorem21(inst);
  EXPECT_TRUE(report.theorem_holds);
  EXPECT_EQ(report.bound, 2u);
  ASSERT_EQ(report.sizes.size(), 1u);
  EXPECT_GE(report.sizes[0], 2u);
  EXPECT_EQ(report.alpha, q(0));
}

TEST(FieldValueProgression, NamedViolations) {
  auto expect_code = [](const Theorem21Instance<RationalField>& inst, const std::string& code) {
    try {
      verify_theorem21(inst);
      ADD_FAILURE() << "expected " << code;
    } catch (const HypothesisViolation& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  std::vector<ValuePair<RationalField>> x{{q(0), q(1)}, {q(0), q(1)}};
  expect_code(rational_instance(aug({0, 1}, {{0, 2}, {1, 2}}), {2, 1}, 0, x),
              "multiplier-not-coprime");
  expect_code(rational_instance(aug({0, 2}, {{0, 2}, {1, 2}}), {1, 1}, 0, x), "a0-not-minimal");
  expect_code(rational_instance(aug({0, 1}, {{0, 2}, {1, 2}}), {1, 1}, 0b10, x),
              "j-not-covering");
  expect_code(rational_instance(aug({0, 1}, {{0, 2}, {1, 2}}), {1, 1}, 0b01,
                                {{q(1), q(1)}, {q(0), q(1)}}),
              "degenerate-pair");
  auto zero_p = rational_instance(aug({0, 1}, {{0, 2}, {1, 2}}), {1, 1}, 0b01, x);
  zero_p.p = MultiPoly<RationalField>(kQ, 2);
  expect_code(zero_p, "degree-out-of-range");
  auto vanishing = rational_instance(aug({0, 1}, {{0, 2}, {1, 2}}), {1, 1}, 0b01, x);
  vanishing.p = parse_poly(kQ, 2, "x2");
  expect_code(vanishing, "coeff-zero");
  Theorem21Instance<PrimeField> char_two{PrimeField(2), aug({0, 1}, {{0, 2}, {1, 2}}),
                                         {1, 1}, 0, MultiPoly<PrimeField>::constant(PrimeField(2), 2,
                                                                                    ModP(1, 2)),
                                         {{ModP(0, 2), ModP(1, 2)}, {ModP(0, 2), ModP(1, 2)}}};
  try {
    verify_theorem21(char_two);
    ADD_FAILURE();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.code(), "characteristic-divides-modulus");
  }
}

TEST(FieldValueProgression, NonvanishingCoefficientMatchesExpansion) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = 1 + uniform_below(rng, 5);
    Mask j = uniform_below(rng, Mask{1} << k);
    auto p = random_poly(kQ, k, subset_size(j), 4, rng);
    p += MultiPoly<RationalField>::constant(kQ, k, 1);
    auto h = static_cast<unsigned>(static_cast<int>(subset_size(j)) - p.degree());
    MultiPoly<RationalField> sum(kQ, k);
    for (std::size_t s = 1; s <= k; ++s) sum += MultiPoly<RationalField>::variable(kQ, k, s);
    auto product = p;
    for (unsigned i = 0; i < h; ++i) product = product * sum;
    ASSERT_EQ(nonvanishing_coefficient(p, j), product.multilinear_coeff(j));
  }
}

template <Field F>
void run_random_theorem21(const F& field, std::uint64_t seed, int count) {
  Rng rng(seed);
  int produced = 0;
  for (int i = 0; i < count; ++i) {
    auto inst = random_theorem21(field, rng, {3, 13, 24, 4});
    if (!inst) continue;
    ++produced;
    auto report = verify_theorem21(*inst);
    ASSERT_TRUE(report.theorem_holds) << inst->system.full().to_string();
    for (auto size : report.sizes) ASSERT_GE(size, report.bound);
    if (inst->system.tail().size() <= 9) {
      auto oracle = naive::theorem21(*inst);
      ASSERT_TRUE(oracle);
      ASSERT_EQ(oracle->first, report.alpha);
      ASSERT_EQ(oracle->second, report.sizes);
    }
  }
  EXPECT_GT(produced, count / 2);
}

TEST(FieldValueProgression, RandomInstancesOverQ) { run_random_theorem21(kQ, 1, 30); }
TEST(FieldValueProgression, RandomInstancesOverPrimeFields) {
  for (std::uint64_t p : {2, 3, 5, 7}) run_random_theorem21(PrimeField(p), 100 + p, 15);
}

TEST(TwoPointGrid, Examples) {
  auto trivial = aug({0, 2}, {{1, 2}});
  auto r = verify_cor21(kQ, trivial, {1}, {{q(0), q(1)}});
  EXPECT_TRUE(r.theorem.theorem_holds);
  EXPECT_GE(*std::min_element(r.theorem.sizes.begin(), r.theorem.sizes.end()), 1u);

  // Specialization on a 2-cover: X_s = {0, m_s/n_s}.
  CoverSystem two = repeated(sys({{0, 2}, {1, 4}, {3, 4}}), 2);
  AugmentedSystem a0 = first_as_distinguished(two);
  Multipliers m{1, 3, 1, 1, 1};
  std::vector<ValuePair<RationalField>> x;
  for (std::size_t s = 1; s <= 5; ++s) {
    x.emplace_back(q(0), Rational(BigInt(m[s - 1]), BigInt(a0.tail().at(s).modulus())));
  }
  auto rem = verify_cor21(kQ, a0, m, x);
  EXPECT_TRUE(rem.theorem.theorem_holds);
  EXPECT_EQ(rem.theorem.bound, 2u);
  // direct: distinct values of sum_{s in I} m_s/n_s per fractional part
  std::map<Rational, std::set<Rational>> direct;
  for (Mask mask = 0; mask < 32; ++mask) {
    auto v = naive::subset_sum(a0.tail(), m, mask);
    direct[frac_part(v)].insert(v);
  }
  const auto n0 = static_cast<std::int64_t>(a0.distinguished().modulus());
  for (std::int64_t r = 0; r < n0; ++r) {
    auto key = (rem.theorem.alpha + q(r)) / q(n0);
    EXPECT_GE(direct[key].size(), 2u);
    EXPECT_EQ(direct[key].size(), rem.theorem.sizes[static_cast<std::size_t>(r)]);
  }

  PrimeField f3(3);
  std::vector<ValuePair<PrimeField>> x3(5, {ModP(0, 3), ModP(1, 3)});
  auto over3 = verify_cor21(f3, a0, m, x3);
  EXPECT_TRUE(over3.theorem.theorem_holds);
  for (auto s : over3.theorem.sizes) EXPECT_GE(s, 2u);
}

TEST(PrescribedSum, Examples) {
  auto tiny = verify_cor22(aug({0, 1}, {{0, 1}}), {1}, 2, {1}, 1);
  ASSERT_TRUE(tiny);
  EXPECT_EQ(tiny->witnesses.at(0).mask, 1u);

  CoverSystem tripled = repeated(sys({{0, 2}, {1, 2}}), 3);
  AugmentedSystem a0 = first_as_distinguished(tripled);
  for (std::int64_t c = 0; c < 3; ++c) {
    auto w = verify_cor22(a0, {1, 1, 1, 1, 1}, 3, {1, 2, 1, 2, 1}, c);
    ASSERT_TRUE(w);
    ASSERT_EQ(w->witnesses.size(), 2u);
    for (const auto& rec : w->witnesses) EXPECT_EQ(rec.aux, std::to_string(c));
  }
  try {
    verify_cor22(a0, {1, 1, 1, 1, 1}, 3, {1, 0, 1, 2, 1}, 0);
    ADD_FAILURE();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.code(), "zero-coefficient");
  }
}

TEST(PrescribedSum, WuQuestionExhaustive) {
  for (std::uint64_t p : {2, 3, 5}) {
    std::vector<std::pair<std::int64_t, std::uint64_t>> ones(p - 1, {0, 1});
    std::vector<ResidueClass> tail;
    for (auto [a, n] : ones) tail.emplace_back(a, n);
    AugmentedSystem a0(ResidueClass(0, 1), CoverSystem(tail));
    Multipliers m(p - 1, 1);
    std::vector<std::int64_t> c(p - 1, 1);
    while (true) {
      for (std::int64_t target = 0; target < static_cast<std::int64_t>(p); ++target) {
        ASSERT_TRUE(verify_cor22(a0, m, p, c, target));
      }
      std::size_t i = 0;
      while (i < c.size() && c[i] == static_cast<std::int64_t>(p) - 1) c[i++] = 1;
      if (i == c.size()) break;
      ++c[i];
    }
  }
}

TEST(AvoidedHyperplanes, Examples) {
  PrimeField f5(5);
  // no constraints on an exact cover
  auto plain = verify_cor23(f5, aug({0, 2}, {{1, 2}}), {1}, {{ModP(0, 5), ModP(1, 5)}}, {}, {});
  ASSERT_TRUE(plain);
  // all moduli 1: some assignment avoids every constraint
  FieldMatrix<PrimeField> a{{ModP(1, 5), ModP(2, 5)}, {ModP(3, 5), ModP(1, 5)}};
  auto lemma = verify_cor23(f5, aug({0, 1}, {{0, 1}, {0, 1}}), {1, 1},
                            {{ModP(0, 5), ModP(1, 5)}, {ModP(0, 5), ModP(1, 5)}}, a,
                            {ModP(0, 5), ModP(3, 5)});
  ASSERT_TRUE(lemma);
  Mask w = lemma->witnesses.at(0).mask;
  for (std::size_t i = 0; i < 2; ++i) {
    ModP dot = ModP(0, 5);
    for (std::size_t s = 1; s <= 2; ++s) dot = dot + a[i][s - 1] * ModP(contains(w, s) ? 1 : 0, 5);
    EXPECT_FALSE(dot == (i == 0 ? ModP(0, 5) : ModP(3, 5)));
  }
  FieldMatrix<PrimeField> singular{{ModP(1, 5), ModP(4, 5)}, {ModP(1, 5), ModP(4, 5)}};
  // per of [[1,4],[1,4]] = 8 = 3 mod 5, nonzero; [[1,1],[1,4]] has per 5 = 0
  FieldMatrix<PrimeField> zero_per{{ModP(1, 5), ModP(1, 5)}, {ModP(1, 5), ModP(4, 5)}};
  try {
    verify_cor23(f5, aug({0, 1}, {{0, 1}, {0, 1}}), {1, 1},
                 {{ModP(0, 5), ModP(1, 5)}, {ModP(0, 5), ModP(1, 5)}}, zero_per,
                 {ModP(0, 5), ModP(0, 5)});
    ADD_FAILURE();
  } catch (const HypothesisViolation& e) {
    EXPECT_EQ(e.code(), "hypothesis-fails");
  }
}

TEST(AvoidedHyperplanes, RandomTwoRowOnThreeCover) {
  PrimeField f5(5);
  Rng rng(23);
  CoverSystem three = repeated(sys({{0, 2}, {1, 2}}), 3);
  AugmentedSystem a0 = first_as_distinguished(three);
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    FieldMatrix<PrimeField> a(2, std::vector<ModP>(5, f5.zero()));
    for (auto& row : a) {
      for (auto& v : row) v = random_element(f5, rng);
    }
    std::vector<ModP> b{random_element(f5, rng), random_element(f5, rng)};
    std::vector<ValuePair<PrimeField>> x;
    for (int s = 0; s < 5; ++s) {
      auto lo = random_element(f5, rng);
      x.emplace_back(lo, lo + random_nonzero(f5, rng));
    }
    try {
      auto w = verify_cor23(f5, a0, {1, 1, 1, 1, 1}, x, a, b);
      ASSERT_TRUE(w);
      ++found;
    } catch (const HypothesisViolation& e) {
      ASSERT_EQ(e.code(), "hypothesis-fails");
    }
  }
  EXPECT_GT(found, 10);
}

TEST(RestrictedSizeSums, Examples) {
  PrimeField f3(3);
  auto none = verify_cor24(f3, aug({0, 2}, {{1, 2}}), {1}, {}, {});
  EXPECT_TRUE(none.holds);
  EXPECT_EQ(none.x_set, (std::vector<std::uint64_t>{0, 1, 2}));

  // 2-cover with n0 = N = 4: 0(4) plus 0(2),1(4),3(4),1(2),2(4)
  AugmentedSystem a0 = aug({0, 4}, {{0, 2}, {1, 4}, {3, 4}, {1, 2}, {2, 4}});
  ASSERT_EQ(covering_multiplicity(a0.full()), 2u);
  FieldMatrix<PrimeField> row{{ModP(1, 3), ModP(2, 3), ModP(0, 3), ModP(1, 3), ModP(1, 3)}};
  auto rep = verify_cor24(f3, a0, {1, 1, 1, 1, 1}, row, {ModP(2, 3)});
  EXPECT_TRUE(rep.holds);
  ASSERT_TRUE(rep.full_when_n0_is_n);
  EXPECT_TRUE(*rep.full_when_n0_is_n);
  EXPECT_EQ(rep.s_set.size(), 4u);

  FieldMatrix<PrimeField> zero_row{{ModP(0, 3), ModP(0, 3), ModP(0, 3), ModP(0, 3), ModP(0, 3)}};
  EXPECT_THROW(verify_cor24(f3, a0, {1, 1, 1, 1, 1}, zero_row, {ModP(1, 3)}),
               HypothesisViolation);
}

TEST(RestrictedSizeSums, NowhereZeroOverGF4) {
  ExtensionField gf4(2, 1 + 1);
  Rng rng(4);
  const ExtElement c = gf4.element_at(2);
  ASSERT_FALSE(gf4.in_prime_subfield(c));
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t k = 1 + uniform_below(rng, 4);
    FieldMatrix<ExtensionField> m(k, std::vector<ExtElement>(k, gf4.zero()));
    for (auto& r : m) {
      for (auto& v : r) v = random_element(gf4, rng);
    }
    if (matrix_rank(gf4, m) != k) continue;
    auto v = nowhere_zero_pair(gf4, m, c);
    ASSERT_TRUE(v);
    for (std::size_t i = 0; i < k; ++i) {
      ASSERT_FALSE((*v)[i] == gf4.zero());
      ExtElement dot = gf4.zero();
      for (std::size_t j = 0; j < k; ++j) dot = dot + m[i][j] * (*v)[j];
      ASSERT_FALSE(dot == gf4.zero());
    }
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(LastClassResidues, TrivialCoverAllResidues) {
  Rng rng(25);
  for (std::uint64_t n = 2; n <= 8; ++n) {
    std::vector<ResidueClass> classes;
    for (std::uint64_t r = 0; r < n; ++r) classes.emplace_back(static_cast<std::int64_t>(r), n);
    CoverSystem trivial(classes);
    CoverSystem head = trivial.without(n);
    Multipliers m = random_coprime_multipliers(head, rng);
    EXPECT_TRUE(cor25_failures(trivial, m).empty());
    for (std::uint64_t r = 0; r < n; ++r) {
      auto rec = verify_cor25(trivial, m, 0, r);
      ASSERT_TRUE(rec);
      EXPECT_EQ(rec->frac, Rational(BigInt(r), BigInt(n)));
    }
  }
}

TEST(LastClassResidues, ExplicitModFour) {
  CoverSystem trivial = sys({{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  for (std::uint64_t r = 0; r < 4; ++r) {
    auto rec = verify_cor25(trivial, {1, 3, 1}, 0, r);
    ASSERT_TRUE(rec);
    EXPECT_EQ(rec->frac, Rational(BigInt(r), BigInt(4)));
  }
}

TEST(LastClassResidues, ErdosCoverUnitFractions) {
  CoverSystem erdos = erdos_cover();
  ASSERT_EQ(erdos.at(5).modulus(), erdos.period());
  EXPECT_TRUE(cor25_failures(erdos, {1, 1, 1, 1}).empty());
  CoverSystem bad = sys({{0, 2}, {1, 2}, {0, 4}});
  EXPECT_THROW(cor25_failures(bad, {1, 1}), HypothesisViolation);
}

TEST(UnitFractions, Examples) {
  // 1-cover {0(2),1(2)} with a_0 = 0(2): tail {1(2)}, sum 1/2 < 1
  auto c0 = count_unit_fraction_subsets(aug({0, 2}, {{1, 2}}), 0);
  EXPECT_EQ(c0.count, 1u);
  EXPECT_EQ(c0.bound, 1);
  EXPECT_TRUE(c0.holds);
  auto c1 = count_unit_fraction_subsets(aug({0, 2}, {{1, 2}}), 1);
  EXPECT_EQ(c1.count, 1u);
  EXPECT_TRUE(c1.holds);
  EXPECT_THROW(count_unit_fraction_subsets(aug({0, 2}, {{0, 1}, {0, 1}}), 0), HypothesisViolation);
}

TEST(UnitFractions, TwoCoversAgainstNaive) {
  Rng rng(10);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    CoverSystem cover = random_m_cover(rng, {2, 12, 24, 6});
    AugmentedSystem a0 = random_tight_augmentation(cover, rng);
    std::vector<UnitFractionCount> counts;
    try {
      counts = unit_fraction_counts(a0);
    } catch (const HypothesisViolation& e) {
      ASSERT_EQ(e.code(), "reciprocal-sum-too-large");
      continue;
    }
    auto direct = naive::unit_fraction_counts(a0, counts.size());
    for (std::size_t a = 0; a < counts.size(); ++a) {
      ASSERT_EQ(counts[a].count, direct[a]);
      ASSERT_TRUE(counts[a].holds) << cover.to_string() << " a=" << a;
    }
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

CyclotomicRoot cyclotomic_root(std::uint64_t n) {
  return std::get<CyclotomicRoot>(root_of_unity({0, 1}, n));
}

TEST(Psi, Examples) {
  auto root = cyclotomic_root(6);
  CoverSystem a = sys({{0, 2}, {0, 3}});
  auto f = MultiPoly<CyclotomicField>::constant(root.field, 2, root.field.one());
  EXPECT_EQ(psi(a, {1, 1}, f, root.zeta, q(1, 4)), root.field.zero());

  auto root1 = cyclotomic_root(1);
  CoverSystem ones = sys({{0, 1}, {0, 1}, {0, 1}});
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_poly(root1.field, 3, 3, 5, rng);
    value_t<CyclotomicField> alternating = root1.field.zero();
    for (Mask m = 0; m < 8; ++m) {
      auto v = g.evaluate_indicator(m);
      alternating = subset_size(m) % 2 == 0 ? alternating + v : alternating - v;
    }
    EXPECT_EQ(psi(ones, {1, 1, 1}, g, root1.zeta, q(0)), alternating);
    EXPECT_EQ(alternating, -g.multilinear_coeff(0b111));
  }
}

TEST(Psi, AgreesWithNaive) {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    CoverSystem cover = random_m_cover(rng, {2, 8, 12, 3});
    auto root = cyclotomic_root(cover.period());
    Multipliers m = random_coprime_multipliers(cover, rng);
    auto f = random_poly(root.field, cover.size(),
                         static_cast<unsigned>(covering_multiplicity(cover)), 4, rng);
    auto fast = psi_all(cover, m, f, root.zeta);
    auto slow = naive::psi(cover, m, f, root.zeta);
    for (std::uint64_t u = 0; u < fast.size(); ++u) {
      Rational theta(BigInt(u), BigInt(cover.period()));
      auto it = slow.find(theta);
      ASSERT_EQ(fast[u], it == slow.end() ? root.field.zero() : it->second);
    }
  }
}

TEST(PsiIdentity, Examples) {
  auto root = cyclotomic_root(6);
  CoverSystem a = sys({{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  ASSERT_EQ(covering_multiplicity(a), 2u);
  // only x1*x3 style monomials on covering sets I_z matter; take f with no
  // multilinear part supported on any I_z
  auto zero_coeffs = parse_poly(kQ, 5, "x1^2 + 3");
  auto f = map_poly(zero_coeffs, root.field, [&](const Rational& c) { return root.field.embed(c); });
  auto report = verify_lemma41(a, {1, 1, 1, 1, 1}, f, root.zeta);
  EXPECT_TRUE(report.identity_holds);
  EXPECT_TRUE(report.all_c_zero);
  EXPECT_TRUE(report.all_psi_zero);
  EXPECT_TRUE(report.lemma_holds);

  // I_0 = {1, 2}
  auto hit = map_poly(parse_poly(kQ, 5, "x1*x2"), root.field,
                      [&](const Rational& c) { return root.field.embed(c); });
  auto r2 = verify_lemma41(a, {1, 1, 1, 1, 1}, hit, root.zeta);
  EXPECT_TRUE(r2.identity_holds);
  EXPECT_FALSE(r2.all_c_zero);
  EXPECT_FALSE(r2.all_psi_zero);
  EXPECT_TRUE(r2.lemma_holds);
}

TEST(PsiIdentity, RandomCyclotomicIdentity) {
  Rng rng(412);
  for (int trial = 0; trial < 25; ++trial) {
    CoverSystem cover = random_m_cover(rng, {1 + uniform_below(rng, 3), 9, 12, 3});
    auto root = cyclotomic_root(cover.period());
    Multipliers m = random_coprime_multipliers(cover, rng);
    auto f = random_poly(root.field, cover.size(),
                         static_cast<unsigned>(covering_multiplicity(cover)), 5, rng);
    auto report = verify_lemma41(cover, m, f, root.zeta);
    ASSERT_TRUE(report.identity_holds) << cover.to_string();
    ASSERT_TRUE(report.lemma_holds);
  }
}

TEST(PsiIdentity, FiniteFieldIdentity) {
  Rng rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    CoverSystem cover = random_m_cover(rng, {2, 8, 12, 3});
    std::uint64_t p = cover.period() % 5 == 0 ? 7 : 5;
    auto root = std::get<FiniteFieldRoot>(root_of_unity({p, 1}, cover.period()));
    Multipliers m = random_coprime_multipliers(cover, rng);
    auto f = random_poly(root.field, cover.size(), 2, 5, rng);
    auto report = verify_lemma41(cover, m, f, root.zeta);
    ASSERT_TRUE(report.identity_holds);
    ASSERT_TRUE(report.lemma_holds);
  }
}

TEST(PsiIdentity, Preconditions) {
  auto root = cyclotomic_root(2);
  CoverSystem a = sys({{0, 2}, {1, 2}});
  auto f = map_poly(parse_poly(kQ, 2, "x1*x2"), root.field,
                    [&](const Rational& c) { return root.field.embed(c); });
  EXPECT_THROW(verify_lemma41(a, {1, 1}, f, root.zeta), HypothesisViolation);
  auto wrong = cyclotomic_root(4);
  auto g = MultiPoly<CyclotomicField>::constant(wrong.field, 2, wrong.field.one());
  EXPECT_THROW(psi_all(a, {1, 1}, g, wrong.zeta), DomainError);
}

}  // namespace
}  // namespace covsum
