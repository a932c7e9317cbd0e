#include "covsum/extension_field.hpp"

#include "covsum/error.hpp"
#include "covsum/number_theory.hpp"
#include "covsum/text.hpp"

namespace covsum {

namespace {

using u64 = std::uint64_t;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod(u64 a, u64 p) {
  u64 result = 1;
  u64 e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = result * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return result;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

// Remainder of a modulo a nonzero trimmed b.
ModPoly mod(ModPoly a, const ModPoly& b, u64 p) {
  trim(a);
  const u64 lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    u64 c = a.back() * lead_inv % p;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
    }
    trim(a);
  }
  return a;
}

ModPoly sub(ModPoly a, const ModPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly powmod(ModPoly base, BigInt e, const ModPoly& f, u64 p) {
  ModPoly result{1};
  base = mod(std::move(base), f, p);
  while (e > 0) {
    if ((e & 1) != 0) result = mod(mul(result, base, p), f, p);
    e >>= 1;
    if (e > 0) base = mod(mul(base, base, p), f, p);
  }
  return result;
}

void check_same(const ExtElement& a, const ExtElement& b) {
  if (a.context() != b.context() &&
      (a.context()->p != b.context()->p || a.context()->modulus != b.context()->modulus)) {
    throw DomainError("field-mismatch", "operands from different extension fields");
  }
}

}  // namespace

bool is_irreducible_mod_p(const ModPoly& f_in, std::uint64_t p) {
  ModPoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  const ModPoly x{0, 1};
  // Rabin: x^(p^d) = x mod f, and gcd(x^(p^(d/q)) - x, f) = 1 for primes q | d.
  auto frobenius = [&](std::size_t times) {
    ModPoly y = x;
    for (std::size_t i = 0; i < times; ++i) y = powmod(y, BigInt(p), f, p);
    return y;
  };
  if (sub(frobenius(d), x, p) != ModPoly{}) return false;
  for (auto q : prime_factors(d)) {
    ModPoly g = gcd(f, sub(frobenius(d / q), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

ExtElement::ExtElement(std::shared_ptr<const ExtensionContext> ctx, ModPoly coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  const u64 p = ctx_->p;
  for (auto& c : c_) c %= p;
  if (c_.size() > ctx_->degree) c_ = mod(std::move(c_), ctx_->modulus, p);
  c_.resize(ctx_->degree, 0);
}

bool ExtElement::is_zero() const {
  for (auto c : c_) {
    if (c != 0) return false;
  }
  return true;
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  const u64 p = a.ctx_->p;
  ModPoly out = a.c_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + b.c_[i]) % p;
  return ExtElement(a.ctx_, std::move(out));
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  const u64 p = a.ctx_->p;
  ModPoly out = a.c_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + p - b.c_[i]) % p;
  return ExtElement(a.ctx_, std::move(out));
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  check_same(a, b);
  return ExtElement(a.ctx_, mod(mul(a.c_, b.c_, a.ctx_->p), a.ctx_->modulus, a.ctx_->p));
}

ExtElement ExtElement::operator-() const {
  const u64 p = ctx_->p;
  ModPoly out = c_;
  for (auto& c : out) c = (p - c) % p;
  return ExtElement(ctx_, std::move(out));
}

bool operator==(const ExtElement& a, const ExtElement& b) {
  return a.ctx_->p == b.ctx_->p && a.ctx_->modulus == b.ctx_->modulus && a.c_ == b.c_;
}

bool operator<(const ExtElement& a, const ExtElement& b) {
  if (a.ctx_->p != b.ctx_->p) return a.ctx_->p < b.ctx_->p;
  if (a.ctx_->modulus != b.ctx_->modulus) return a.ctx_->modulus < b.ctx_->modulus;
  return a.c_ < b.c_;
}

ExtensionField::ExtensionField(std::uint64_t p, unsigned degree) {
  if (!is_prime(p) || p >= (u64{1} << 31U)) {
    throw DomainError("not-prime", "extension field characteristic must be a prime below 2^31");
  }
  if (degree == 0) throw DomainError("bad-degree", "extension degree must be positive");
  // Search monic candidates t^d + c_{d-1} t^{d-1} + ... + c_0 in base-p order.
  ModPoly candidate(degree + 1, 0);
  candidate[degree] = 1;
  while (true) {
    if (is_irreducible_mod_p(candidate, p)) break;
    std::size_t i = 0;
    while (i < degree && ++candidate[i] == p) candidate[i++] = 0;
    if (i == degree) throw DomainError("internal", "no irreducible polynomial found");
  }
  ctx_ = std::make_shared<ExtensionContext>(ExtensionContext{p, degree, candidate});
}

std::uint64_t ExtensionField::order() const {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    q *= characteristic();
    if (q > (static_cast<unsigned __int128>(1) << 62U)) {
      throw CapExceeded("field-size-cap", "extension field too large to enumerate");
    }
  }
  return static_cast<u64>(q);
}

ExtElement ExtensionField::zero() const { return ExtElement(ctx_, {}); }
ExtElement ExtensionField::one() const { return ExtElement(ctx_, {1}); }

ExtElement ExtensionField::from_int(std::int64_t n) const {
  auto p = static_cast<std::int64_t>(ctx_->p);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return ExtElement(ctx_, {static_cast<u64>(r)});
}

ExtElement ExtensionField::make(ModPoly coeffs) const { return ExtElement(ctx_, std::move(coeffs)); }

ExtElement ExtensionField::element_at(std::uint64_t index) const {
  ModPoly c(degree(), 0);
  for (unsigned i = 0; i < degree(); ++i) {
    c[i] = index % ctx_->p;
    index /= ctx_->p;
  }
  return ExtElement(ctx_, std::move(c));
}

ExtElement ExtensionField::inv(const ExtElement& a) const {
  if (a.is_zero()) throw DomainError("division-by-zero", "inverse of zero in GF(p^d)");
  const u64 p = ctx_->p;
  ModPoly r0 = ctx_->modulus;
  ModPoly r1 = a.coefficients();
  trim(r1);
  ModPoly s0;
  ModPoly s1{1};
  while (r1.size() > 1) {
    // one long-division step sequence: q = r0 / r1
    ModPoly q;
    ModPoly rem = r0;
    trim(rem);
    const u64 lead_inv = inv_mod(r1.back(), p);
    if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size()) {
      std::size_t shift = rem.size() - r1.size();
      u64 c = rem.back() * lead_inv % p;
      q[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j) {
        rem[shift + j] = (rem[shift + j] + p - c * r1[j] % p) % p;
      }
      trim(rem);
    }
    ModPoly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw DomainError("internal", "defining polynomial is not irreducible");
  }
  const u64 scale = inv_mod(r1[0], p);
  for (auto& c : s1) c = c * scale % p;
  return ExtElement(ctx_, mod(std::move(s1), ctx_->modulus, p));
}

bool ExtensionField::in_prime_subfield(const ExtElement& a) const {
  for (std::size_t i = 1; i < a.coefficients().size(); ++i) {
    if (a.coefficients()[i] != 0) return false;
  }
  return true;
}

std::string ExtensionField::format(const ExtElement& a) const {
  std::string out = "(";
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.coefficients()[i]);
  }
  return out + ")";
}

ExtElement ExtensionField::parse(std::string_view s) const {
  s = trim_space(s);
  if (!s.empty() && s.front() != '(' && s.front() != '[') {
    BigInt v = parse_bigint(s) % ctx_->p;
    if (v < 0) v += ctx_->p;
    return ExtElement(ctx_, {static_cast<u64>(v)});
  }
  ModPoly c;
  for (const auto& item : split_bracket_list(s)) {
    BigInt v = parse_bigint(item) % ctx_->p;
    if (v < 0) v += ctx_->p;
    c.push_back(static_cast<u64>(v));
  }
  if (c.size() > degree()) throw DomainError("parse", "too many coefficients for GF(p^d)");
  return ExtElement(ctx_, std::move(c));
}

}  // namespace covsum
