#include "covsum/spectrum.hpp"

#include <numeric>

#include "covsum/error.hpp"
#include "covsum/number_theory.hpp"

namespace covsum {

FractionalSums::FractionalSums(const CoverSystem& system, const Multipliers& multipliers,
                               bool require_coprime)
    : period_(system.period()) {
  if (multipliers.size() != system.size()) {
    throw DomainError("length-mismatch", "expected " + std::to_string(system.size()) +
                                             " multipliers, got " +
                                             std::to_string(multipliers.size()));
  }
  step_.reserve(system.size());
  for (std::size_t s = 1; s <= system.size(); ++s) {
    std::uint64_t n = system.at(s).modulus();
    std::int64_t m = multipliers[s - 1];
    std::uint64_t abs_m = m < 0 ? 0 - static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m);
    if (require_coprime && std::gcd(abs_m, n) != 1) {
      throw HypothesisViolation("multiplier-not-coprime",
                                "m_" + std::to_string(s) + " = " + std::to_string(m) +
                                    " shares a factor with n_" + std::to_string(s) + " = " +
                                    std::to_string(n));
    }
    step_.push_back(static_cast<__int128>(m) * static_cast<__int128>(period_ / n));
  }
}

std::uint64_t FractionalSums::residue(__int128 numerator) const {
  auto n = static_cast<__int128>(period_);
  __int128 r = numerator % n;
  if (r < 0) r += n;
  return static_cast<std::uint64_t>(r);
}

Rational FractionalSums::frac_of(std::uint64_t residue) const {
  return Rational(BigInt(residue), BigInt(period_));
}

SubsetRecord FractionalSums::record(Mask mask) const {
  __int128 numerator = 0;
  for (auto s : indices_of(mask)) numerator += step(s);
  auto n = static_cast<__int128>(period_);
  __int128 floor_q = numerator / n;
  if (numerator % n < 0) --floor_q;
  SubsetRecord rec;
  rec.mask = mask;
  rec.frac = frac_of(residue(numerator));
  rec.whole = BigInt(static_cast<std::int64_t>(floor_q));
  rec.size = subset_size(mask);
  return rec;
}

Spectrum fractional_spectrum(const CoverSystem& system, const Multipliers& multipliers,
                             const SubsetFilter& filter) {
  check_enumeration_cap(system.size(), "fractional spectrum");
  FractionalSums sums(system, multipliers);
  std::map<std::uint64_t, std::vector<Mask>> by_residue;
  for_each_fractional_sum(sums, full_mask(system.size()),
                          [&](Mask mask, std::size_t, __int128 numerator) {
                            if (filter && !filter(mask)) return;
                            by_residue[sums.residue(numerator)].push_back(mask);
                          });
  Spectrum out;
  for (auto& [u, masks] : by_residue) {
    std::sort(masks.begin(), masks.end());
    auto& records = out[sums.frac_of(u)];
    records.reserve(masks.size());
    for (Mask m : masks) records.push_back(sums.record(m));
  }
  return out;
}

std::vector<Rational> ProgressionWitness::values() const {
  std::vector<Rational> out;
  for (std::uint64_t r = 0; r < n0; ++r) {
    out.push_back((alpha + Rational(static_cast<std::int64_t>(r))) /
                  Rational(static_cast<std::int64_t>(n0)));
  }
  return out;
}

namespace {

void check_n0(std::uint64_t n0, std::uint64_t period) {
  if (n0 == 0 || period % n0 != 0) {
    throw DomainError("n0-not-dividing", "n0 = " + std::to_string(n0) +
                                             " does not divide N = " + std::to_string(period));
  }
}

Rational alpha_of(std::uint64_t t, std::uint64_t n0, std::uint64_t period) {
  return Rational(BigInt(t * n0), BigInt(period));
}

}  // namespace

std::optional<std::uint64_t> least_progression(const std::vector<bool>& present,
                                               std::uint64_t n0) {
  const std::uint64_t period = present.size();
  check_n0(n0, period);
  for (std::uint64_t t = 0; t < period / n0; ++t) {
    bool ok = true;
    for (std::uint64_t r = 0; r < n0 && ok; ++r) ok = present[progression_slot(t, r, n0, period)];
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<ProgressionWitness> find_progression(const std::set<Rational>& keys,
                                                   std::uint64_t n0, std::uint64_t period) {
  check_n0(n0, period);
  std::vector<bool> present(period, false);
  for (const auto& key : keys) {
    Rational scaled = key * Rational(static_cast<std::int64_t>(period));
    if (key < Rational(0) || !(key < Rational(1)) || scaled.den() != 1) {
      throw DomainError("denominator-mismatch",
                        "key " + key.to_string() + " is not a multiple of 1/" +
                            std::to_string(period) + " in [0, 1)");
    }
    present[static_cast<std::uint64_t>(scaled.num())] = true;
  }
  auto t = least_progression(present, n0);
  if (!t) return std::nullopt;
  return ProgressionWitness{alpha_of(*t, n0, period), n0, {}};
}

std::optional<ProgressionWitness> find_progression(
    const FractionalSums& sums, const std::vector<std::optional<Mask>>& least, std::uint64_t n0) {
  std::vector<bool> present(least.size());
  for (std::size_t u = 0; u < least.size(); ++u) present[u] = least[u].has_value();
  auto t = least_progression(present, n0);
  if (!t) return std::nullopt;
  ProgressionWitness w{alpha_of(*t, n0, sums.period()), n0, {}};
  for (std::uint64_t r = 0; r < n0; ++r) {
    w.witnesses.push_back(sums.record(*least[progression_slot(*t, r, n0, sums.period())]));
  }
  return w;
}

std::vector<UnitFractionCount> unit_fraction_counts(const AugmentedSystem& system) {
  const CoverSystem& full = system.full();
  const CoverSystem& tail = system.tail();
  std::uint64_t m = covering_multiplicity(full);
  if (m == 0) throw HypothesisViolation("not-m-cover", "A_0 covers some integer zero times");
  check_enumeration_cap(tail.size(), "unit fraction count");
  std::uint64_t n0 = system.distinguished().modulus();
  // Exact sums over L = lcm(n0, N): sum 1/n_s = T/L and a/n0 = a (L/n0)/L.
  std::uint64_t l = std::lcm(n0, tail.period());
  std::vector<std::uint64_t> step(tail.size());
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= tail.size(); ++s) total += step[s - 1] = l / tail.at(s).modulus();
  if (total >= m * l) {
    throw HypothesisViolation("reciprocal-sum-too-large",
                              "sum of 1/n_s over the tail is not below m = " + std::to_string(m));
  }
  std::uint64_t unit = l / n0;
  std::vector<UnitFractionCount> out(m * n0);
  for (std::uint64_t a = 0; a < out.size(); ++a) {
    out[a].a = a;
    out[a].bound = binomial(m - 1, a / n0);
  }
  std::uint64_t numerator = 0;
  for_each_subset_gray(full_mask(tail.size()), [&](Mask mask, std::size_t changed) {
    if (changed != 0) {
      if (contains(mask, changed)) {
        numerator += step[changed - 1];
      } else {
        numerator -= step[changed - 1];
      }
    }
    if (numerator % unit == 0) ++out[numerator / unit].count;
  });
  for (auto& c : out) c.holds = BigInt(c.count) >= c.bound;
  return out;
}

UnitFractionCount count_unit_fraction_subsets(const AugmentedSystem& system, std::uint64_t a) {
  auto all = unit_fraction_counts(system);
  if (a < all.size()) return all[a];
  std::uint64_t n0 = system.distinguished().modulus();
  std::uint64_t m = all.size() / n0;
  UnitFractionCount c;
  c.a = a;
  c.bound = binomial(m - 1, a / n0);
  c.holds = c.bound == 0;
  return c;
}

LastClassData check_last_class(const CoverSystem& system, const Multipliers& multipliers) {
  const std::size_t k = system.size();
  if (k == 0) throw DomainError("empty-system", "the system has no classes");
  if (multipliers.size() + 1 != k) {
    throw DomainError("length-mismatch", "expected " + std::to_string(k - 1) + " multipliers");
  }
  LastClassData data;
  data.multiplicity = covering_multiplicity(system);
  if (data.multiplicity == 0) throw HypothesisViolation("not-m-cover", "not a cover");
  auto essential = essential_classes(system, data.multiplicity);
  if (std::find(essential.begin(), essential.end(), k) == essential.end()) {
    throw HypothesisViolation("not-essential", "the last class is not essential");
  }
  if (system.at(k).modulus() != system.period()) {
    throw HypothesisViolation("modulus-not-lcm", "n_k differs from N_A");
  }
  std::int64_t a_k = system.at(k).presented();
  for (std::size_t s = 1; s < k; ++s) {
    if (system.at(s).contains(a_k)) data.k_set |= bit_of(s);
  }
  return data;
}

std::optional<SubsetRecord> verify_cor25(const CoverSystem& system,
                                         const Multipliers& multipliers, Mask j,
                                         std::uint64_t r) {
  LastClassData data = check_last_class(system, multipliers);
  if ((j & ~data.k_set) != 0) throw HypothesisViolation("j-not-subset", "J is not inside K");
  CoverSystem head = system.without(system.size());
  FractionalSums sums(head, multipliers);
  // head's period may be a proper divisor of N_A; r/N_A is matched exactly.
  std::uint64_t big = system.period();
  if (r >= big) throw DomainError("r-out-of-range", "r must lie in [0, N_A - 1]");
  check_enumeration_cap(head.size(), "corollary scan");
  Mask free = full_mask(head.size()) & ~data.k_set;
  std::optional<Mask> best;
  for_each_fractional_sum(sums, free, [&](Mask mask, std::size_t, __int128 numerator) {
    // Numerator of the sum with J added, reduced over head's period, then
    // rescaled to N_A.
    __int128 with_j = numerator;
    for (auto s : indices_of(j)) with_j += sums.step(s);
    std::uint64_t u = sums.residue(with_j) * (big / sums.period());
    if (u == r && (!best || (mask | j) < *best)) best = mask | j;
  });
  if (!best) return std::nullopt;
  return sums.record(*best);
}

std::vector<std::pair<Mask, std::uint64_t>> cor25_failures(const CoverSystem& system,
                                                           const Multipliers& multipliers) {
  LastClassData data = check_last_class(system, multipliers);
  CoverSystem head = system.without(system.size());
  FractionalSums sums(head, multipliers);
  check_enumeration_cap(head.size(), "corollary scan");
  const std::uint64_t big = system.period();
  const std::uint64_t scale = big / sums.period();
  Mask free = full_mask(head.size()) & ~data.k_set;
  std::vector<std::pair<Mask, std::uint64_t>> failures;
  for_each_subset_ordered(data.k_set, [&](Mask j) {
    __int128 j_sum = 0;
    for (auto s : indices_of(j)) j_sum += sums.step(s);
    std::vector<bool> hit(big, false);
    for_each_fractional_sum(sums, free, [&](Mask, std::size_t, __int128 numerator) {
      hit[sums.residue(numerator + j_sum) * scale] = true;
    });
    for (std::uint64_t r = 0; r < big; ++r) {
      if (!hit[r]) failures.emplace_back(j, r);
    }
  });
  return failures;
}

}  // namespace covsum
