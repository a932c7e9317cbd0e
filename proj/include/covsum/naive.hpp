#pragma once

// Direct recomputations used to cross-check the incremental enumerations.
// Every subset sum is rebuilt from scratch as a Rational and alpha is
// scanned densely at resolution 1/N.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "covsum/lemma41.hpp"
#include "covsum/theorem21.hpp"

namespace covsum::naive {

inline Rational subset_sum(const CoverSystem& system, const Multipliers& multipliers, Mask mask) {
  Rational total;
  for (auto s : indices_of(mask)) {
    total += Rational(BigInt(multipliers[s - 1]), BigInt(system.at(s).modulus()));
  }
  return total;
}

/// Least alpha in {j/N : 0 <= j < N} whose progression lies in `keys`.
inline std::optional<Rational> least_alpha(const std::set<Rational>& keys, std::uint64_t n0,
                                           std::uint64_t period) {
  const Rational n0q(static_cast<std::int64_t>(n0));
  for (std::uint64_t j = 0; j < period; ++j) {
    Rational alpha{BigInt(j), BigInt(period)};
    bool ok = true;
    for (std::uint64_t r = 0; r < n0 && ok; ++r) {
      ok = keys.count(frac_part((alpha + Rational(static_cast<std::int64_t>(r))) / n0q)) > 0;
    }
    if (ok) return alpha;
  }
  return std::nullopt;
}

/// Fractional parts of every subset sum passing `filter`, each with its
/// list of masks in increasing order.
template <class Filter>
std::map<Rational, std::vector<Mask>> spectrum(const CoverSystem& system,
                                               const Multipliers& multipliers, Filter&& filter) {
  std::map<Rational, std::vector<Mask>> out;
  const Mask limit = full_mask(system.size());
  for (Mask mask = 0;; ++mask) {
    if (filter(mask)) out[frac_part(subset_sum(system, multipliers, mask))].push_back(mask);
    if (mask == limit) break;
  }
  return out;
}

template <class Map>
std::set<Rational> keys_of(const Map& m) {
  std::set<Rational> out;
  for (const auto& [k, v] : m) out.insert(k);
  return out;
}

/// Sets S_r rebuilt per assignment; returns (least alpha found
/// by dense scan, |S_r| at that alpha) or nothing if no alpha meets the bound.
template <Field F>
std::optional<std::pair<Rational, std::vector<std::size_t>>> theorem21(
    const Theorem21Instance<F>& inst) {
  const CoverSystem& tail = inst.system.tail();
  const std::size_t k = tail.size();
  const F& field = inst.field;
  std::map<Rational, std::set<value_t<F>>> sets;
  const Mask limit = full_mask(k);
  for (Mask mask = 0;; ++mask) {
    bool valid = true;
    std::vector<value_t<F>> point(k, field.zero());
    Mask counted = 0;
    for (std::size_t s = 1; s <= k; ++s) {
      const auto& [b, c] = inst.x[s - 1];
      if (contains(mask, s) && b == c) valid = false;
      point[s - 1] = contains(mask, s) ? c : b;
      if (!(point[s - 1] == b)) counted |= bit_of(s);
    }
    if (valid && !(inst.p.evaluate(point) == field.zero())) {
      value_t<F> sigma = field.zero();
      for (const auto& v : point) sigma = sigma + v;
      sets[frac_part(subset_sum(tail, inst.multipliers, counted))].insert(sigma);
    }
    if (mask == limit) break;
  }
  const std::uint64_t n0 = inst.system.distinguished().modulus();
  const std::uint64_t period = tail.period();
  const std::size_t bound = subset_size(inst.j) - static_cast<std::size_t>(inst.p.degree()) + 1;
  const Rational n0q(static_cast<std::int64_t>(n0));
  for (std::uint64_t j = 0; j < period; ++j) {
    Rational alpha{BigInt(j), BigInt(period)};
    std::vector<std::size_t> sizes;
    bool ok = true;
    for (std::uint64_t r = 0; r < n0; ++r) {
      auto it = sets.find(frac_part((alpha + Rational(static_cast<std::int64_t>(r))) / n0q));
      sizes.push_back(it == sets.end() ? 0 : it->second.size());
      ok = ok && sizes.back() >= bound;
    }
    if (ok) return std::make_pair(alpha, sizes);
  }
  return std::nullopt;
}

/// psi keyed by theta, with zeta^e computed by repeated multiplication from
/// e = N sum_{s in I} a_s m_s/n_s as an exact Rational.
template <Field F>
std::map<Rational, value_t<F>> psi(const CoverSystem& system, const Multipliers& multipliers,
                                   const MultiPoly<F>& f, const value_t<F>& zeta) {
  const F& field = f.ring();
  const std::size_t k = system.size();
  const auto n = static_cast<std::int64_t>(system.period());
  std::map<Rational, value_t<F>> out;
  const Mask limit = full_mask(k);
  for (Mask mask = 0;; ++mask) {
    Rational weighted;
    std::vector<value_t<F>> point(k, field.zero());
    for (auto s : indices_of(mask)) {
      weighted += Rational(BigInt(system.at(s).presented()) * multipliers[s - 1],
                           BigInt(system.at(s).modulus()));
      point[s - 1] = field.one();
    }
    Rational scaled = weighted * Rational(n);
    BigInt e = scaled.num() % n;
    if (e < 0) e += n;
    value_t<F> term = f.evaluate(point) * power(field, zeta, static_cast<std::uint64_t>(e));
    if (subset_size(mask) % 2 == 1) term = -term;
    auto theta = frac_part(subset_sum(system, multipliers, mask));
    auto it = out.find(theta);
    if (it == out.end()) {
      out.emplace(theta, term);
    } else {
      it->second = it->second + term;
    }
    if (mask == limit) break;
  }
  return out;
}

/// Count of I with sum 1/n_s = a/n0 by exact Rational comparison.
inline std::vector<std::uint64_t> unit_fraction_counts(const AugmentedSystem& system,
                                                       std::uint64_t limit_a) {
  const CoverSystem& tail = system.tail();
  const auto n0 = static_cast<std::int64_t>(system.distinguished().modulus());
  std::vector<std::uint64_t> counts(limit_a, 0);
  const Mask limit = full_mask(tail.size());
  for (Mask mask = 0;; ++mask) {
    Rational total;
    for (auto s : indices_of(mask)) total += Rational(BigInt(1), BigInt(tail.at(s).modulus()));
    Rational scaled = total * Rational(n0);
    if (scaled.den() == 1 && scaled.num() < static_cast<std::int64_t>(limit_a)) {
      ++counts[static_cast<std::uint64_t>(scaled.num())];
    }
    if (mask == limit) break;
  }
  return counts;
}

}  // namespace covsum::naive
