#pragma once

#include <cstdint>
#include <random>

#include "covsum/cyclotomic.hpp"
#include "covsum/extension_field.hpp"
#include "covsum/multipoly.hpp"
#include "covsum/prime_field.hpp"
#include "covsum/ring.hpp"

namespace covsum {

// Deterministic helpers built on mt19937_64, whose output sequence is fixed
// by the standard. Reduction is by plain modulo so results do not depend on
// the library's distribution implementations.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

inline std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline BigInt random_element(const IntegerRing&, Rng& rng) { return uniform_between(rng, -9, 9); }

inline Rational random_element(const RationalField&, Rng& rng) {
  return Rational(BigInt(uniform_between(rng, -9, 9)), BigInt(uniform_between(rng, 1, 4)));
}

inline ModP random_element(const PrimeField& field, Rng& rng) {
  return ModP(uniform_below(rng, field.characteristic()), field.characteristic());
}

inline ExtElement random_element(const ExtensionField& field, Rng& rng) {
  return field.element_at(uniform_below(rng, field.order()));
}

inline CyclotomicElement random_element(const CyclotomicField& field, Rng& rng) {
  std::vector<Rational> c(field.degree());
  for (auto& x : c) x = random_element(RationalField{}, rng);
  return field.make(std::move(c));
}

template <Ring R>
value_t<R> random_nonzero(const R& ring, Rng& rng) {
  while (true) {
    value_t<R> v = random_element(ring, rng);
    if (!(v == ring.zero())) return v;
  }
}

/// Random sparse polynomial with up to `terms` monomials, each of total
/// degree at most `max_degree`.
template <Ring R>
MultiPoly<R> random_poly(const R& ring, std::size_t variables, unsigned max_degree,
                         std::size_t terms, Rng& rng) {
  MultiPoly<R> p(ring, variables);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(variables, 0);
    auto degree = static_cast<unsigned>(uniform_below(rng, max_degree + 1));
    for (unsigned i = 0; i < degree && variables > 0; ++i) ++e[uniform_below(rng, variables)];
    p.add_term(std::move(e), random_element(ring, rng));
  }
  return p;
}

}  // namespace covsum
