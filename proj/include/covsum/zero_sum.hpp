#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "covsum/rational.hpp"

namespace covsum {

/// Data of the congruence over Z_{p^h_1} + ... + Z_{p^h_l}: row s of `c` holds
/// c_{s1}..c_{sl}, and `targets` holds c_1..c_l.
struct ZeroSumInstance {
  std::uint64_t p = 2;
  std::vector<unsigned> h;
  std::vector<std::vector<std::int64_t>> c;
  std::vector<std::int64_t> targets;

  std::size_t k() const { return c.size(); }
  std::size_t l() const { return h.size(); }
  /// sum_t (p^h_t - 1).
  std::uint64_t threshold() const;
};

/// Throws DomainError on malformed data and HypothesisViolation
/// "k-below-threshold" when k < sum_t (p^h_t - 1).
void validate(const ZeroSumInstance& inst);

/// sum over I with p^h_t | sum_{s in I} c_st - c_t for all t of (-1)^|I|,
/// reduced into [0, p). Capped at k <= 26.
std::uint64_t thm32_lhs(const ZeroSumInstance& inst);

/// sum over ordered partitions I_1 + ... + I_l = [1,k] with |I_t| = p^h_t - 1
/// of prod_t prod_{s in I_t} c_st, reduced into [0, p). Zero unless k equals
/// the threshold.
std::uint64_t thm32_rhs(const ZeroSumInstance& inst);

struct Thm32Report {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::uint64_t threshold = 0;
  bool holds = false;
};
Thm32Report verify_thm32(const ZeroSumInstance& inst);

struct Cor33Report {
  std::uint64_t count = 0;       ///< |{I : |I| = p^h - 1, p^h | sum c_s - c}|
  std::uint64_t coefficient = 0; ///< [x^(p^h-1)] prod (x - c_s) mod p
  bool holds = false;
};
/// `c` must have length 2p^h - 2 with p^h <= 9.
Cor33Report cor33_ii_check(std::uint64_t p, unsigned h, const std::vector<std::int64_t>& c,
                           std::int64_t target);

struct KemnitzReport {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint64_t count_q = 0;   ///< |I| = q with zero sum in Z_q^2
  std::uint64_t count_3q = 0;  ///< |I| = 3q with zero sum in Z_q^2
  bool holds = false;          ///< count_q = count_3q + 2 (mod p)
};
/// `c` has 4q - 2 pairs; q must be a prime power at most 4.
KemnitzReport kemnitz_congruence(std::uint64_t q,
                                 const std::vector<std::pair<std::int64_t, std::int64_t>>& c);

namespace naive {
/// Direct per-subset recomputation of the left side.
std::uint64_t thm32_lhs(const ZeroSumInstance& inst);
/// Enumerates all l^k maps [1,k] -> [1,l] and keeps those with the right
/// part sizes.
std::uint64_t thm32_rhs(const ZeroSumInstance& inst);
}  // namespace naive

}  // namespace covsum
