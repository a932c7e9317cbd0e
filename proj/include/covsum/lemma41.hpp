#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covsum/error.hpp"
#include "covsum/multipoly.hpp"
#include "covsum/residue.hpp"
#include "covsum/roots.hpp"
#include "covsum/spectrum.hpp"

namespace covsum {

/// zeta^0 .. zeta^(n-1).
template <Ring R>
std::vector<value_t<R>> power_table(const R& ring, const value_t<R>& zeta, std::uint64_t n) {
  std::vector<value_t<R>> out;
  out.reserve(n);
  value_t<R> cur = ring.one();
  for (std::uint64_t e = 0; e < n; ++e) {
    out.push_back(cur);
    cur = cur * zeta;
  }
  return out;
}

/// (a_s m_s (N/n_s)) mod N for each s, the integer exponent of zeta
/// contributed by class s.
inline std::vector<std::uint64_t> zeta_exponents(const CoverSystem& system,
                                                 const Multipliers& multipliers) {
  const std::uint64_t n = system.period();
  std::vector<std::uint64_t> out;
  for (std::size_t s = 1; s <= system.size(); ++s) {
    const auto& cls = system.at(s);
    auto m = static_cast<__int128>(multipliers[s - 1]);
    __int128 e = static_cast<__int128>(cls.residue()) * m * static_cast<__int128>(n / cls.modulus());
    e %= static_cast<__int128>(n);
    if (e < 0) e += n;
    out.push_back(static_cast<std::uint64_t>(e));
  }
  return out;
}

template <Field F>
void check_psi_inputs(const F& field, const CoverSystem& system, const Multipliers& multipliers,
                      int degree, const value_t<F>& zeta) {
  if (multipliers.size() != system.size()) {
    throw DomainError("length-mismatch", "expected one multiplier per class");
  }
  const std::uint64_t n = system.period();
  const std::uint64_t ch = field.characteristic();
  if (ch != 0 && n % ch == 0) {
    throw HypothesisViolation("characteristic-divides-modulus", "the characteristic divides N_A");
  }
  if (degree > static_cast<int>(covering_multiplicity(system))) {
    throw HypothesisViolation("degree-out-of-range", "deg f exceeds m(A)");
  }
  if (!has_exact_order(field, zeta, n)) {
    throw DomainError("zeta-order", "zeta does not have order N_A = " + std::to_string(n));
  }
  check_enumeration_cap(system.size(), "psi scan");
}

/// psi(u/N) for every u in [0, N): the sum over I with {sum m_s/n_s} = u/N of
/// (-1)^|I| f(1_I) zeta^(N sum_{s in I} a_s m_s/n_s).
template <Field F>
std::vector<value_t<F>> psi_all(const CoverSystem& system, const Multipliers& multipliers,
                                const MultiPoly<F>& f, const value_t<F>& zeta) {
  const F& field = f.ring();
  check_psi_inputs(field, system, multipliers, f.degree(), zeta);
  FractionalSums sums(system, multipliers, false);
  const std::uint64_t n = sums.period();
  const auto zpow = power_table(field, zeta, n);
  const auto exps = zeta_exponents(system, multipliers);
  std::vector<value_t<F>> out(n, field.zero());
  std::uint64_t exponent = 0;
  for_each_fractional_sum(sums, full_mask(system.size()),
                          [&](Mask mask, std::size_t changed, __int128 numerator) {
                            if (changed != 0) {
                              exponent = contains(mask, changed)
                                             ? (exponent + exps[changed - 1]) % n
                                             : (exponent + n - exps[changed - 1]) % n;
                            }
                            value_t<F> term = f.evaluate_indicator(mask) * zpow[exponent];
                            auto& slot = out[sums.residue(numerator)];
                            slot = subset_size(mask) % 2 == 0 ? slot + term : slot - term;
                          });
  return out;
}

/// psi(theta); zero when theta is not a multiple of 1/N_A in [0, 1).
template <Field F>
value_t<F> psi(const CoverSystem& system, const Multipliers& multipliers, const MultiPoly<F>& f,
               const value_t<F>& zeta, const Rational& theta) {
  auto all = psi_all(system, multipliers, f, zeta);
  Rational scaled = theta * Rational(static_cast<std::int64_t>(system.period()));
  if (theta < Rational(0) || !(theta < Rational(1)) || scaled.den() != 1) return f.ring().zero();
  return all[static_cast<std::uint64_t>(scaled.num())];
}

struct Lemma41Report {
  std::vector<std::uint64_t> identity_failures;  ///< z in [0, N) where both sides differ
  bool identity_holds = false;
  bool all_c_zero = false;    ///< c(I_z) = 0 for every z
  bool all_psi_zero = false;  ///< psi = 0 on the whole spectrum
  bool forward_holds = false;
  bool converse_applicable = false;  ///< multipliers coprime to moduli
  bool converse_holds = true;
  bool lemma_holds = false;
};

/// Both sides of the identity for each z, and the vanishing equivalence.
template <Field F>
Lemma41Report verify_lemma41(const CoverSystem& system, const Multipliers& multipliers,
                             const MultiPoly<F>& f, const value_t<F>& zeta) {
  const F& field = f.ring();
  auto psi_values = psi_all(system, multipliers, f, zeta);
  const std::uint64_t n = system.period();
  const std::size_t k = system.size();
  const auto zpow = power_table(field, zeta, n);

  Lemma41Report report;
  report.all_c_zero = true;
  report.all_psi_zero = true;
  for (const auto& v : psi_values) {
    if (!(v == field.zero())) report.all_psi_zero = false;
  }
  for (std::uint64_t z = 0; z < n; ++z) {
    value_t<F> lhs = field.zero();
    for (std::uint64_t u = 0; u < n; ++u) {
      lhs = lhs + zpow[(n - (z * u) % n) % n] * psi_values[u];
    }
    Mask iz = 0;
    value_t<F> rhs = field.one();
    for (std::size_t s = 1; s <= k; ++s) {
      const auto& cls = system.at(s);
      if (cls.contains(static_cast<std::int64_t>(z))) {
        iz |= bit_of(s);
        continue;
      }
      __int128 e = (static_cast<__int128>(cls.residue()) - static_cast<__int128>(z)) *
                   static_cast<__int128>(multipliers[s - 1]) *
                   static_cast<__int128>(n / cls.modulus());
      e %= static_cast<__int128>(n);
      if (e < 0) e += n;
      rhs = rhs * (zpow[static_cast<std::uint64_t>(e)] - field.one());
    }
    value_t<F> c = f.multilinear_coeff(iz);
    if (!(c == field.zero())) report.all_c_zero = false;
    rhs = rhs * c;
    if (k % 2 == 1) rhs = -rhs;
    if (!(lhs == rhs)) report.identity_failures.push_back(z);
  }
  report.identity_holds = report.identity_failures.empty();
  report.forward_holds = !report.all_c_zero || report.all_psi_zero;
  try {
    FractionalSums coprime(system, multipliers, true);
    report.converse_applicable = true;
    report.converse_holds = !report.all_psi_zero || report.all_c_zero;
  } catch (const HypothesisViolation&) {
    report.converse_applicable = false;
  }
  report.lemma_holds = report.identity_holds && report.forward_holds && report.converse_holds;
  return report;
}

}  // namespace covsum
