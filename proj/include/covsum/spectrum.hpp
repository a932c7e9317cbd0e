#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "covsum/rational.hpp"
#include "covsum/residue.hpp"
#include "covsum/subset.hpp"

namespace covsum {

using Multipliers = std::vector<std::int64_t>;

/// A subset I with the fractional and integer parts of sum_{s in I} m_s/n_s.
struct SubsetRecord {
  Mask mask = 0;
  Rational frac;
  BigInt whole;
  unsigned size = 0;
  std::optional<std::string> aux;
};

/// Precomputed integer steps for sum_{s in I} m_s/n_s written over N = N_A:
/// the sum equals numerator(I)/N with numerator(I) = sum_{s in I} m_s (N/n_s).
class FractionalSums {
 public:
  /// Throws DomainError "length-mismatch" if the sizes differ and
  /// HypothesisViolation "multiplier-not-coprime" when `require_coprime` is
  /// set and some gcd(m_s, n_s) != 1.
  FractionalSums(const CoverSystem& system, const Multipliers& multipliers,
                 bool require_coprime = true);

  std::uint64_t period() const noexcept { return period_; }
  std::size_t size() const noexcept { return step_.size(); }
  /// m_s (N/n_s) for 1-based s.
  __int128 step(std::size_t s) const { return step_[s - 1]; }
  /// Reduction of a numerator into [0, N).
  std::uint64_t residue(__int128 numerator) const;
  Rational frac_of(std::uint64_t residue) const;
  SubsetRecord record(Mask mask) const;

 private:
  std::uint64_t period_;
  std::vector<__int128> step_;
};

/// Visits every subset of `universe` in Gray-code order with the running
/// numerator. `visit(mask, changed, numerator)`.
template <class Visit>
void for_each_fractional_sum(const FractionalSums& sums, Mask universe, Visit&& visit) {
  __int128 numerator = 0;
  for_each_subset_gray(universe, [&](Mask mask, std::size_t changed) {
    if (changed != 0) {
      numerator += contains(mask, changed) ? sums.step(changed) : -sums.step(changed);
    }
    visit(mask, changed, numerator);
  });
}

/// For each residue u in [0, N), the least mask I in `universe` accepted by
/// `accept(mask, changed)` with {sum} = u/N. `accept` is called on every
/// subset in Gray-code order so it may keep incremental state.
template <class Accept>
std::vector<std::optional<Mask>> least_witnesses(const FractionalSums& sums, Mask universe,
                                                 Accept&& accept) {
  std::vector<std::optional<Mask>> least(sums.period());
  for_each_fractional_sum(sums, universe, [&](Mask mask, std::size_t changed, __int128 numerator) {
    if (!accept(mask, changed)) return;
    auto& slot = least[sums.residue(numerator)];
    if (!slot || mask < *slot) slot = mask;
  });
  return least;
}

using SubsetFilter = std::function<bool(Mask)>;
using Spectrum = std::map<Rational, std::vector<SubsetRecord>>;

/// Groups every I passing `filter` by {sum_{s in I} m_s/n_s}. Keys ascend,
/// records within a key ascend by mask. Requires k within the enumeration cap
/// and coprime multipliers.
Spectrum fractional_spectrum(const CoverSystem& system, const Multipliers& multipliers,
                             const SubsetFilter& filter = {});

/// The fractional values {(alpha + r)/n0 : r in [0, n0-1]} with the
/// r-th witness in `witnesses` (empty when only keys were searched).
struct ProgressionWitness {
  Rational alpha;
  std::uint64_t n0 = 1;
  std::vector<SubsetRecord> witnesses;

  std::vector<Rational> values() const;
};

/// Residue index t + r N/n0 of the r-th term for candidate alpha = t n0/N.
inline std::uint64_t progression_slot(std::uint64_t t, std::uint64_t r, std::uint64_t n0,
                                      std::uint64_t period) {
  return t + r * (period / n0);
}

/// Least t in [0, N/n0) whose progression lies in `present`, if any.
std::optional<std::uint64_t> least_progression(const std::vector<bool>& present,
                                               std::uint64_t n0);

/// Least alpha in {t n0/N} whose full progression lies in `keys`. Throws
/// DomainError "n0-not-dividing" if n0 does not divide N, and
/// "denominator-mismatch" for a key whose denominator does not divide N.
std::optional<ProgressionWitness> find_progression(const std::set<Rational>& keys,
                                                   std::uint64_t n0, std::uint64_t period);

/// Same search over least witnesses indexed by residue; the returned witness
/// carries the records of the chosen masks.
std::optional<ProgressionWitness> find_progression(
    const FractionalSums& sums, const std::vector<std::optional<Mask>>& least, std::uint64_t n0);

/// Count of I with sum_{s in I} 1/n_s = a/n0 over the tail of an m-cover,
/// compared with the lower bound C(m-1, floor(a/n0)).
struct UnitFractionCount {
  std::uint64_t a = 0;
  std::uint64_t count = 0;
  BigInt bound;
  bool holds = false;
};

/// Counts for every a in [0, m n0 - 1], the range where a/n0 < m can be hit.
/// Throws HypothesisViolation "not-m-cover" when m(A_0) = 0 and
/// "reciprocal-sum-too-large" unless sum_{s>=1} 1/n_s < m(A_0).
std::vector<UnitFractionCount> unit_fraction_counts(const AugmentedSystem& system);

/// Single value of a; values past the feasible range give count 0.
UnitFractionCount count_unit_fraction_subsets(const AugmentedSystem& system, std::uint64_t a);

/// Hypotheses on A = {a_s(n_s)}_{s=1}^k for the last-class statement: the
/// system is an m-cover with a_k(n_k) essential and n_k = N_A.
struct LastClassData {
  std::uint64_t multiplicity = 0;
  Mask k_set = 0;  ///< K = {s < k : a_k in a_s(n_s)}
};
LastClassData check_last_class(const CoverSystem& system, const Multipliers& multipliers);

/// Least I in [1, k-1] with I and K meeting in exactly J and
/// {sum_{s in I} m_s/n_s} = r/N_A. `multipliers` has k-1 entries.
std::optional<SubsetRecord> verify_cor25(const CoverSystem& system,
                                         const Multipliers& multipliers, Mask j,
                                         std::uint64_t r);

/// Runs every J subset of K and every r; returns the (J, r) pairs that fail.
std::vector<std::pair<Mask, std::uint64_t>> cor25_failures(const CoverSystem& system,
                                                           const Multipliers& multipliers);

}  // namespace covsum
