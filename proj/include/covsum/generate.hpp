#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covsum/random.hpp"
#include "covsum/residue.hpp"
#include "covsum/spectrum.hpp"
#include "covsum/theorem21.hpp"
#include "covsum/zero_sum.hpp"

namespace covsum {

/// Small exact covers (1-covers) used as building blocks.
std::vector<CoverSystem> base_exact_covers();

/// The cover {0(2), 0(3), 1(4), 5(6), 7(12)}.
CoverSystem erdos_cover();

struct CoverShape {
  std::uint64_t multiplicity = 1;
  std::size_t max_classes = 12;
  std::uint64_t max_period = 24;
  std::size_t split_steps = 4;
};

/// Union of `multiplicity` random exact covers refined by random splits.
/// Always an m-cover with m(A) >= multiplicity (checked); throws DomainError
/// "infeasible" if no combination fits the limits.
CoverSystem random_m_cover(Rng& rng, const CoverShape& shape);

/// Moves a random class holding a point of minimal coverage to the front,
/// presenting it by that point so that w_{A_0}(a_0) = m(A_0).
AugmentedSystem random_tight_augmentation(const CoverSystem& cover, Rng& rng);

/// Multipliers in [-bound, bound] coprime to the respective moduli.
Multipliers random_coprime_multipliers(const CoverSystem& system, Rng& rng,
                                       std::int64_t bound = 12);

/// Random instance with entries in [-20, 20], h_t in [1, max_h] and
/// k = threshold + extra. Throws DomainError "infeasible" if the threshold
/// plus `extra` exceeds max_k for every choice of h.
ZeroSumInstance random_zero_sum(Rng& rng, std::uint64_t p, std::size_t l, unsigned max_h,
                                std::size_t extra, std::size_t max_k = 12);

/// A random instance meeting every hypothesis: the tail has at most
/// shape.max_classes - 1 classes, the characteristic of `field` does not
/// divide N, J is a random subset of the covering indices of a_0, P has
/// degree at most |J| and a nonvanishing coefficient, and some pairs may be
/// degenerate where allowed. Returns nothing if `field` is incompatible with
/// every generated cover after a few attempts.
template <Field F>
std::optional<Theorem21Instance<F>> random_theorem21(const F& field, Rng& rng,
                                                     const CoverShape& shape) {
  const std::uint64_t p = field.characteristic();
  for (int attempt = 0; attempt < 32; ++attempt) {
    CoverShape s = shape;
    s.multiplicity = 1 + uniform_below(rng, shape.multiplicity);
    CoverSystem cover = random_m_cover(rng, s);
    if (cover.size() < 1 || (p != 0 && cover.period() % p == 0)) continue;
    AugmentedSystem aug = random_tight_augmentation(cover, rng);
    const CoverSystem& tail = aug.tail();
    if (p != 0 && tail.period() % p == 0) continue;
    const std::size_t k = tail.size();
    Multipliers m = random_coprime_multipliers(tail, rng);
    const Mask covering = covering_indices(tail, aug.distinguished().presented());
    Mask j = 0;
    for (auto s_idx : indices_of(covering)) {
      if (uniform_below(rng, 2) == 0) j |= bit_of(s_idx);
    }
    std::vector<ValuePair<F>> x;
    for (std::size_t s_idx = 1; s_idx <= k; ++s_idx) {
      auto b = random_element(field, rng);
      auto c = b + random_nonzero(field, rng);
      const bool may_degenerate = contains(covering, s_idx) && !contains(j, s_idx);
      if (may_degenerate && uniform_below(rng, 4) == 0) c = b;
      x.emplace_back(b, c);
    }
    for (int tries = 0; tries < 16; ++tries) {
      auto degree = static_cast<unsigned>(uniform_below(rng, subset_size(j) + 1));
      MultiPoly<F> poly = random_poly(field, k, degree, 1 + uniform_below(rng, 4), rng);
      poly += MultiPoly<F>::constant(field, k, random_nonzero(field, rng));
      if (poly.degree() < 0 || poly.degree() > static_cast<int>(subset_size(j))) continue;
      if (nonvanishing_coefficient(poly, j) == field.zero()) continue;
      return Theorem21Instance<F>{field, aug, m, j, poly, x};
    }
  }
  return std::nullopt;
}

}  // namespace covsum
