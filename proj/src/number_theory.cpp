#include "covsum/number_theory.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "covsum/error.hpp"

namespace covsum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t gcd_int(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  std::uint64_t g = std::gcd(a, b);
  unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
  if (l > cap) {
    throw CapExceeded("modulus-cap", "least common multiple of moduli exceeds " +
                                         std::to_string(cap));
  }
  return static_cast<std::uint64_t>(l);
}

namespace {

// C(n, k) mod p for 0 <= n, k < p.
std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k, const PrimeField& field) {
  if (k > n) return 0;
  ModP num = field.one();
  ModP den = field.one();
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= field.from_int(static_cast<std::int64_t>(n - i));
    den *= field.from_int(static_cast<std::int64_t>(i + 1));
  }
  return (num * field.inv(den)).value();
}

}  // namespace

ModP binomial_mod_p(const BigInt& n, const BigInt& k, const PrimeField& field) {
  if (k < 0) return field.zero();
  if (n < 0) {
    // C(n, k) = (-1)^k C(k - n - 1, k)
    ModP value = binomial_mod_p(k - n - 1, k, field);
    return (k % 2 == 0) ? value : -value;
  }
  if (k > n) return field.zero();
  // Lucas: multiply digitwise binomials in base p.
  const std::uint64_t p = field.characteristic();
  BigInt top = n;
  BigInt bottom = k;
  ModP result = field.one();
  while (bottom > 0 || top > 0) {
    auto top_digit = static_cast<std::uint64_t>(top % p);
    auto bottom_digit = static_cast<std::uint64_t>(bottom % p);
    result *= ModP(small_binomial(top_digit, bottom_digit, field), p);
    if (result.is_zero()) break;
    top /= p;
    bottom /= p;
  }
  return result;
}

ModP binom_criterion(const BigInt& a, std::uint64_t p, unsigned h) {
  if (h == 0) throw DomainError("bad-exponent", "binom_criterion needs h >= 1");
  PrimeField field(p);
  BigInt q = boost::multiprecision::pow(BigInt(p), h);
  return binomial_mod_p(a - 1, q - 1, field);
}

std::uint64_t multiplicative_order(std::int64_t p, std::uint64_t n) {
  if (n == 0) throw DomainError("order-undefined", "modulus must be positive");
  auto sn = static_cast<std::int64_t>(n);
  if (std::gcd(p, sn) != 1) {
    throw DomainError("order-undefined", "order undefined: gcd(" + std::to_string(p) + ", " +
                                             std::to_string(n) + ") != 1");
  }
  if (n == 1) return 1;
  std::int64_t base = p % sn;
  if (base < 0) base += sn;
  unsigned __int128 acc = static_cast<std::uint64_t>(base);
  for (std::uint64_t d = 1;; ++d) {
    if (acc % n == 1) return d;
    acc = acc * static_cast<std::uint64_t>(base) % n;
  }
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

namespace {

// Exact quotient of a by a monic divisor b.
IntPoly divide_exact_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, BigInt(0));
  for (std::size_t i = a.size(); i-- > db;) {
    BigInt c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw DomainError("internal", "cyclotomic division left a remainder");
  }
  return q;
}

}  // namespace

IntPoly cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw DomainError("bad-level", "cyclotomic level must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly result(n + 1, BigInt(0));
  result[0] = -1;
  result[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) result = divide_exact_monic(std::move(result), cyclotomic_poly(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(n, result);
  return result;
}

}  // namespace covsum
