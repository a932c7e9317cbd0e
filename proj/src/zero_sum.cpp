#include "covsum/zero_sum.hpp"

#include "covsum/error.hpp"
#include "covsum/number_theory.hpp"
#include "covsum/subset.hpp"

namespace covsum {

namespace {

constexpr std::size_t kMaxZeroSumK = 26;
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;
constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 22;
constexpr std::uint64_t kMaxAssignments = std::uint64_t{1} << 24;

std::uint64_t checked_power(std::uint64_t p, unsigned h) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < h; ++i) {
    if (out > kMaxModulus / p) throw CapExceeded("modulus-cap", "p^h is too large");
    out *= p;
  }
  return out;
}

std::uint64_t mod(std::int64_t a, std::uint64_t m) {
  auto r = static_cast<std::int64_t>(static_cast<__int128>(a) % static_cast<__int128>(m));
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::vector<std::uint64_t> moduli(const ZeroSumInstance& inst) {
  std::vector<std::uint64_t> out;
  for (auto h : inst.h) out.push_back(checked_power(inst.p, h));
  return out;
}

std::uint64_t sign_mod_p(std::int64_t total, std::uint64_t p) { return mod(total, p); }

}  // namespace

std::uint64_t ZeroSumInstance::threshold() const {
  std::uint64_t out = 0;
  for (auto ht : h) out += checked_power(p, ht) - 1;
  return out;
}

void validate(const ZeroSumInstance& inst) {
  if (!is_prime(inst.p)) throw DomainError("not-prime", std::to_string(inst.p) + " is not prime");
  if (inst.h.empty()) throw DomainError("empty-group", "at least one component is required");
  for (auto ht : inst.h) {
    if (ht == 0) throw DomainError("bad-exponent", "every h_t must be positive");
  }
  if (inst.targets.size() != inst.l()) {
    throw DomainError("length-mismatch", "targets need one entry per component");
  }
  for (const auto& row : inst.c) {
    if (row.size() != inst.l()) throw DomainError("length-mismatch", "each row needs l entries");
  }
  if (inst.k() < inst.threshold()) {
    throw HypothesisViolation("k-below-threshold",
                              "k = " + std::to_string(inst.k()) + " is below sum (p^h_t - 1) = " +
                                  std::to_string(inst.threshold()));
  }
}

std::uint64_t thm32_lhs(const ZeroSumInstance& inst) {
  validate(inst);
  if (inst.k() > kMaxZeroSumK) {
    throw CapExceeded("enumeration-cap", "k exceeds " + std::to_string(kMaxZeroSumK));
  }
  const auto mods = moduli(inst);
  const std::size_t l = inst.l();
  std::vector<std::vector<std::uint64_t>> step(inst.k(), std::vector<std::uint64_t>(l));
  for (std::size_t s = 0; s < inst.k(); ++s) {
    for (std::size_t t = 0; t < l; ++t) step[s][t] = mod(inst.c[s][t], mods[t]);
  }
  std::vector<std::uint64_t> running(l), goal(l);
  for (std::size_t t = 0; t < l; ++t) goal[t] = mod(inst.targets[t], mods[t]);
  std::int64_t total = 0;
  for_each_subset_gray(full_mask(inst.k()), [&](Mask mask, std::size_t changed) {
    if (changed != 0) {
      const bool added = contains(mask, changed);
      for (std::size_t t = 0; t < l; ++t) {
        const std::uint64_t d = step[changed - 1][t];
        running[t] = added ? (running[t] + d) % mods[t] : (running[t] + mods[t] - d) % mods[t];
      }
    }
    if (running == goal) total += subset_size(mask) % 2 == 0 ? 1 : -1;
  });
  return sign_mod_p(total, inst.p);
}

std::uint64_t thm32_rhs(const ZeroSumInstance& inst) {
  validate(inst);
  const std::uint64_t p = inst.p;
  if (inst.k() != inst.threshold()) return 0;
  const std::size_t l = inst.l();
  std::vector<std::uint64_t> cap(l), radix(l);
  std::uint64_t states = 1;
  for (std::size_t t = 0; t < l; ++t) {
    cap[t] = checked_power(p, inst.h[t]) - 1;
    radix[t] = states;
    if (states > kMaxStates / (cap[t] + 1)) {
      throw CapExceeded("enumeration-cap", "too many partition states");
    }
    states *= cap[t] + 1;
  }
  // dp[state] = weighted count of assignments of the first s indices whose
  // part sizes are encoded by `state`; the size is implied by s.
  std::vector<std::uint64_t> dp(states, 0), next(states);
  dp[0] = 1 % p;
  for (std::size_t s = 0; s < inst.k(); ++s) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint64_t state = 0; state < states; ++state) {
      if (dp[state] == 0) continue;
      for (std::size_t t = 0; t < l; ++t) {
        if ((state / radix[t]) % (cap[t] + 1) == cap[t]) continue;
        const std::uint64_t w = mod(inst.c[s][t], p);
        auto& slot = next[state + radix[t]];
        slot = (slot + dp[state] * w) % p;
      }
    }
    dp.swap(next);
  }
  return dp[states - 1];
}

Thm32Report verify_thm32(const ZeroSumInstance& inst) {
  Thm32Report r;
  r.lhs = thm32_lhs(inst);
  r.rhs = thm32_rhs(inst);
  r.threshold = inst.threshold();
  r.holds = r.lhs == r.rhs;
  return r;
}

Cor33Report cor33_ii_check(std::uint64_t p, unsigned h, const std::vector<std::int64_t>& c,
                           std::int64_t target) {
  if (!is_prime(p)) throw DomainError("not-prime", std::to_string(p) + " is not prime");
  if (h == 0) throw DomainError("bad-exponent", "h must be positive");
  const std::uint64_t q = checked_power(p, h);
  if (q > 9) throw CapExceeded("enumeration-cap", "p^h must be at most 9");
  if (c.size() != 2 * q - 2) {
    throw DomainError("length-mismatch", "expected " + std::to_string(2 * q - 2) + " values");
  }
  Cor33Report r;
  const std::uint64_t goal = mod(target, q);
  for_each_subset_ordered(full_mask(c.size()), [&](Mask mask) {
    if (subset_size(mask) != q - 1) return;
    std::int64_t total = 0;
    for (auto s : indices_of(mask)) total += c[s - 1];
    if (mod(total, q) == goal) ++r.count;
  });
  IntPoly product{1};
  for (auto v : c) product = poly_mul(product, IntPoly{BigInt(-v), BigInt(1)});
  BigInt coeff = product[q - 1] % BigInt(p);
  if (coeff < 0) coeff += p;
  r.coefficient = static_cast<std::uint64_t>(coeff);
  r.holds = r.count % p == r.coefficient;
  return r;
}

KemnitzReport kemnitz_congruence(std::uint64_t q,
                                 const std::vector<std::pair<std::int64_t, std::int64_t>>& c) {
  if (q < 2) throw DomainError("not-prime-power", "q must exceed 1");
  auto factors = prime_factors(q);
  if (factors.size() != 1) throw DomainError("not-prime-power", std::to_string(q));
  if (q > 4) throw CapExceeded("enumeration-cap", "q must be at most 4");
  if (c.size() != 4 * q - 2) {
    throw DomainError("length-mismatch", "expected " + std::to_string(4 * q - 2) + " pairs");
  }
  KemnitzReport r;
  r.q = q;
  r.p = factors.front();
  std::uint64_t x = 0, y = 0;
  for_each_subset_gray(full_mask(c.size()), [&](Mask mask, std::size_t changed) {
    if (changed != 0) {
      const bool added = contains(mask, changed);
      const std::uint64_t dx = mod(c[changed - 1].first, q);
      const std::uint64_t dy = mod(c[changed - 1].second, q);
      x = added ? (x + dx) % q : (x + q - dx) % q;
      y = added ? (y + dy) % q : (y + q - dy) % q;
    }
    if (x != 0 || y != 0) return;
    const unsigned size = subset_size(mask);
    if (size == q) ++r.count_q;
    if (size == 3 * q) ++r.count_3q;
  });
  r.holds = r.count_q % r.p == (r.count_3q + 2) % r.p;
  return r;
}

namespace naive {

std::uint64_t thm32_lhs(const ZeroSumInstance& inst) {
  validate(inst);
  const auto mods = moduli(inst);
  std::int64_t total = 0;
  const Mask limit = full_mask(inst.k());
  for (Mask mask = 0;; ++mask) {
    bool ok = true;
    for (std::size_t t = 0; t < inst.l() && ok; ++t) {
      BigInt sum = -BigInt(inst.targets[t]);
      for (auto s : indices_of(mask)) sum += inst.c[s - 1][t];
      ok = sum % BigInt(mods[t]) == 0;
    }
    if (ok) total += subset_size(mask) % 2 == 0 ? 1 : -1;
    if (mask == limit) break;
  }
  return sign_mod_p(total, inst.p);
}

std::uint64_t thm32_rhs(const ZeroSumInstance& inst) {
  validate(inst);
  const std::size_t k = inst.k();
  const std::size_t l = inst.l();
  const auto mods = moduli(inst);
  std::uint64_t count = 1;
  for (std::size_t s = 0; s < k; ++s) {
    if (count > kMaxAssignments / l) throw CapExceeded("enumeration-cap", "l^k too large");
    count *= l;
  }
  BigInt total = 0;
  std::vector<std::size_t> part(k, 0);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t rest = code;
    std::vector<std::uint64_t> sizes(l, 0);
    for (std::size_t s = 0; s < k; ++s) {
      part[s] = rest % l;
      rest /= l;
      ++sizes[part[s]];
    }
    bool ok = true;
    for (std::size_t t = 0; t < l && ok; ++t) ok = sizes[t] == mods[t] - 1;
    if (!ok) continue;
    BigInt product = 1;
    for (std::size_t s = 0; s < k; ++s) product *= inst.c[s][part[s]];
    total += product;
  }
  BigInt r = total % BigInt(inst.p);
  if (r < 0) r += inst.p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace naive

}  // namespace covsum
