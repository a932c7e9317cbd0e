#pragma once

#include <cstdint>
#include <variant>

#include "covsum/cyclotomic.hpp"
#include "covsum/extension_field.hpp"
#include "covsum/ring.hpp"

namespace covsum {

/// Names a base field: characteristic 0 means Q, otherwise GF(p^degree).
struct FieldDescriptor {
  std::uint64_t characteristic = 0;
  unsigned degree = 1;
};

/// A field together with an element of exact multiplicative order n in it.
struct CyclotomicRoot {
  CyclotomicField field;
  CyclotomicElement zeta;
};
struct FiniteFieldRoot {
  ExtensionField field;
  ExtElement zeta;
};
using RootOfUnity = std::variant<CyclotomicRoot, FiniteFieldRoot>;

/// For characteristic 0: x in Q[x]/(Phi_n). For characteristic p: an element
/// of GF(p^d), d = multiplicative_order(p, n). Throws DomainError
/// "no-root-of-unity" when the characteristic divides n.
RootOfUnity root_of_unity(const FieldDescriptor& base, std::uint64_t n);

/// True iff zeta^n = 1 and zeta^(n/q) != 1 for every prime q | n.
template <Ring R>
bool has_exact_order(const R& ring, const value_t<R>& zeta, std::uint64_t n) {
  if (!(power(ring, zeta, n) == ring.one())) return false;
  for (auto q : prime_factors(n)) {
    if (power(ring, zeta, n / q) == ring.one()) return false;
  }
  return true;
}

}  // namespace covsum
