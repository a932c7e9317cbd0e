#pragma once

#include <cstdint>
#include <vector>

#include "covsum/prime_field.hpp"
#include "covsum/rational.hpp"

namespace covsum {

/// Dense integer polynomial, index i holds the coefficient of x^i.
using IntPoly = std::vector<BigInt>;

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Exact C(n, k) for nonnegative arguments.
BigInt binomial(std::uint64_t n, std::uint64_t k);

std::int64_t gcd_int(std::int64_t a, std::int64_t b);

/// Least common multiple; throws CapExceeded if the result passes `cap`.
std::uint64_t lcm_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap);

/// C(n, k) mod p for any integer n and k >= 0, using the falling-factorial
/// binomial n(n-1)...(n-k+1)/k! when n < 0.
ModP binomial_mod_p(const BigInt& n, const BigInt& k, const PrimeField& field);

/// C(a-1, p^h - 1) mod p. Agrees with [p^h | a].
ModP binom_criterion(const BigInt& a, std::uint64_t p, unsigned h);

/// Least d >= 1 with p^d = 1 (mod n). Throws DomainError "order-undefined"
/// when gcd(p, n) != 1.
std::uint64_t multiplicative_order(std::int64_t p, std::uint64_t n);

/// The N-th cyclotomic polynomial over Z.
IntPoly cyclotomic_poly(std::uint64_t n);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

}  // namespace covsum
