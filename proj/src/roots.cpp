#include "covsum/roots.hpp"

#include "covsum/error.hpp"

namespace covsum {

namespace {

ExtElement power_big(const ExtensionField& field, ExtElement base, BigInt e) {
  ExtElement result = field.one();
  while (e > 0) {
    if ((e & 1) != 0) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace

RootOfUnity root_of_unity(const FieldDescriptor& base, std::uint64_t n) {
  if (n == 0) throw DomainError("bad-order", "root of unity order must be positive");
  const std::uint64_t p = base.characteristic;
  if (p == 0) {
    CyclotomicField field(n);
    auto zeta = field.generator();
    return CyclotomicRoot{std::move(field), std::move(zeta)};
  }
  if (n % p == 0) {
    throw DomainError("no-root-of-unity", "no root of unity of order " + std::to_string(n) +
                                              " exists in characteristic " + std::to_string(p));
  }
  auto d = static_cast<unsigned>(multiplicative_order(static_cast<std::int64_t>(p), n));
  ExtensionField field(p, d);
  BigInt group_order = boost::multiprecision::pow(BigInt(p), d) - 1;
  BigInt cofactor = group_order / n;
  // Scan nonzero elements in enumeration order; the first whose cofactor
  // power has exact order n is returned.
  for (std::uint64_t index = 1;; ++index) {
    ExtElement zeta = power_big(field, field.element_at(index), cofactor);
    if (has_exact_order(field, zeta, n)) return FiniteFieldRoot{std::move(field), std::move(zeta)};
  }
}

}  // namespace covsum
