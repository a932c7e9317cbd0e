#include "covsum/prime_field.hpp"

#include "covsum/error.hpp"
#include "covsum/number_theory.hpp"

namespace covsum {

namespace {

void check_same(const ModP& a, const ModP& b) {
  if (a.modulus() != b.modulus()) {
    throw DomainError("field-mismatch", "operands from different prime fields");
  }
}

}  // namespace

ModP operator+(const ModP& a, const ModP& b) {
  check_same(a, b);
  std::uint64_t s = a.v_ + b.v_;
  return ModP(s >= a.p_ ? s - a.p_ : s, a.p_);
}

ModP operator-(const ModP& a, const ModP& b) {
  check_same(a, b);
  return ModP(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
}

ModP operator*(const ModP& a, const ModP& b) {
  check_same(a, b);
  return ModP(a.v_ * b.v_ % a.p_, a.p_);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw DomainError("not-prime", "prime field modulus must be a prime below 2^32, got " +
                                       std::to_string(p));
  }
}

ModP PrimeField::from_int(std::int64_t n) const {
  auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return ModP(static_cast<std::uint64_t>(r), p_);
}

ModP PrimeField::from_bigint(const BigInt& n) const {
  BigInt r = n % p_;
  if (r < 0) r += p_;
  return ModP(static_cast<std::uint64_t>(r), p_);
}

ModP PrimeField::inv(const ModP& a) const {
  if (a.is_zero()) throw DomainError("division-by-zero", "inverse of zero in Z/pZ");
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a.value();
  std::uint64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
    e >>= 1U;
  }
  return ModP(result, p_);
}

}  // namespace covsum
