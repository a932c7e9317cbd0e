#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "covsum/error.hpp"
#include "covsum/multipoly.hpp"
#include "covsum/poly_ops.hpp"
#include "covsum/residue.hpp"
#include "covsum/spectrum.hpp"

namespace covsum {

template <Field F>
using ValuePair = std::pair<value_t<F>, value_t<F>>;

/// A_0 with multipliers, the index set J, the polynomial P and the pairs
/// X_s = {b_s, c_s}. J is a mask over the tail indices 1..k.
template <Field F>
struct Theorem21Instance {
  F field;
  AugmentedSystem system;
  Multipliers multipliers;
  Mask j = 0;
  MultiPoly<F> p;
  std::vector<ValuePair<F>> x;
};

struct Theorem21Report {
  /// Least alpha meeting the bound, or the least alpha with the largest
  /// minimum |S_r| when none does.
  Rational alpha;
  std::uint64_t n0 = 1;
  std::vector<std::size_t> sizes;  ///< |S_r| at alpha, r = 0..n0-1
  std::size_t bound = 0;           ///< |J| - deg P + 1
  bool theorem_holds = false;
  bool alpha_zero_valid = false;
  /// Least assignment mask (s set means x_s != b_s) reaching S_r at alpha.
  std::vector<std::optional<Mask>> witnesses;
};

/// Mask of tail indices s with a in a_s(n_s).
inline Mask covering_indices(const CoverSystem& tail, std::int64_t a) {
  Mask out = 0;
  for (std::size_t s = 1; s <= tail.size(); ++s) {
    if (tail.at(s).contains(a)) out |= bit_of(s);
  }
  return out;
}

inline void require(bool ok, const char* code, const std::string& message) {
  if (!ok) throw HypothesisViolation(code, message);
}

/// [prod_{j in J} x_j] P (x_1 + ... + x_k)^(|J| - deg P), evaluated through
/// the alternating subset formula, valid because the product has degree at
/// most |J|.
template <Field F>
value_t<F> nonvanishing_coefficient(const MultiPoly<F>& p, Mask j) {
  const F field = p.ring();
  const int h = static_cast<int>(subset_size(j)) - p.degree();
  BlackBoxPoly<F> product{field, p.variables(),
                          [&p, field, h](std::span<const value_t<F>> x) {
                            value_t<F> sum = field.zero();
                            for (const auto& v : x) sum = sum + v;
                            return p.evaluate(x) * power(field, sum, static_cast<std::uint64_t>(h));
                          },
                          static_cast<int>(subset_size(j))};
  return coeff_by_subsets(product, j);
}

/// Checks every hypothesis, throwing HypothesisViolation with codes
/// multiplier-not-coprime, a0-not-minimal, j-not-covering, degenerate-pair,
/// characteristic-divides-modulus, degree-out-of-range, coeff-zero.
template <Field F>
void check_theorem21(const Theorem21Instance<F>& inst) {
  const CoverSystem& tail = inst.system.tail();
  const std::size_t k = tail.size();
  if (inst.x.size() != k || inst.p.variables() != k || mask_exceeds(inst.j, k)) {
    throw DomainError("length-mismatch", "X, P and J must refer to the " + std::to_string(k) +
                                             " tail classes");
  }
  FractionalSums coprime_check(tail, inst.multipliers);
  const std::int64_t a0 = inst.system.distinguished().presented();
  require(covering_function(inst.system.full(), a0) ==
              covering_multiplicity(inst.system.full()),
          "a0-not-minimal", "w_{A_0}(a_0) differs from m(A_0)");
  const Mask covering = covering_indices(tail, a0);
  require((inst.j & ~covering) == 0, "j-not-covering", "J contains s with a_0 outside a_s(n_s)");
  for (std::size_t s = 1; s <= k; ++s) {
    if (inst.x[s - 1].first == inst.x[s - 1].second) {
      require(contains(covering, s) && !contains(inst.j, s), "degenerate-pair",
              "b_" + std::to_string(s) + " = c_" + std::to_string(s) +
                  " needs a_0 in a_s(n_s) and s outside J");
    }
  }
  const std::uint64_t ch = inst.field.characteristic();
  require(ch == 0 || tail.period() % ch != 0, "characteristic-divides-modulus",
          "the characteristic divides N");
  const int deg = inst.p.degree();
  require(deg >= 0 && deg <= static_cast<int>(subset_size(inst.j)), "degree-out-of-range",
          "deg P must lie in [0, |J|]");
  require(!(nonvanishing_coefficient(inst.p, inst.j) == inst.field.zero()), "coeff-zero",
          "the coefficient of prod_{j in J} x_j in P (x_1+...+x_k)^(|J|-deg P) vanishes");
}

/// Scans alpha in {t n0/N} against per-residue sum sets.
template <class Sets>
void fill_progression_report(const Sets& sets, std::uint64_t n0, std::uint64_t period,
                             std::size_t bound, Theorem21Report& report) {
  if (period % n0 != 0) {
    throw HypothesisViolation("n0-not-dividing", "n0 does not divide N");
  }
  report.n0 = n0;
  report.bound = bound;
  std::optional<std::uint64_t> best;
  std::size_t best_min = 0;
  for (std::uint64_t t = 0; t < period / n0; ++t) {
    std::size_t lowest = SIZE_MAX;
    for (std::uint64_t r = 0; r < n0; ++r) {
      lowest = std::min(lowest, sets[progression_slot(t, r, n0, period)].size());
    }
    if (t == 0) report.alpha_zero_valid = lowest >= bound;
    if (lowest >= bound) {
      best = t;
      report.theorem_holds = true;
      break;
    }
    if (!best || lowest > best_min) {
      best = t;
      best_min = lowest;
    }
  }
  report.alpha = Rational(BigInt(*best * n0), BigInt(period));
  report.sizes.clear();
  for (std::uint64_t r = 0; r < n0; ++r) {
    report.sizes.push_back(sets[progression_slot(*best, r, n0, period)].size());
  }
}

/// Enumerates all assignments x_s in X_s and reports |S_r| at the least
/// alpha meeting |J| - deg P + 1. Pairs with b_s = c_s are never counted in
/// the fractional sum.
template <Field F>
Theorem21Report verify_theorem21(const Theorem21Instance<F>& inst) {
  check_theorem21(inst);
  const CoverSystem& tail = inst.system.tail();
  const std::size_t k = tail.size();
  check_enumeration_cap(k, "theorem scan");
  const F& field = inst.field;
  FractionalSums sums(tail, inst.multipliers);
  const std::uint64_t period = sums.period();

  Mask universe = 0;
  std::vector<value_t<F>> point;
  std::vector<value_t<F>> diff;
  value_t<F> sigma = field.zero();
  for (std::size_t s = 1; s <= k; ++s) {
    const auto& [b, c] = inst.x[s - 1];
    if (!(b == c)) universe |= bit_of(s);
    point.push_back(b);
    diff.push_back(c - b);
    sigma = sigma + b;
  }
  const bool constant_p = inst.p.degree() == 0;
  std::vector<std::set<value_t<F>>> sets(period);
  std::vector<std::optional<Mask>> least(period);
  for_each_fractional_sum(sums, universe, [&](Mask mask, std::size_t changed, __int128 numerator) {
    if (changed != 0) {
      const auto& [b, c] = inst.x[changed - 1];
      if (contains(mask, changed)) {
        point[changed - 1] = c;
        sigma = sigma + diff[changed - 1];
      } else {
        point[changed - 1] = b;
        sigma = sigma - diff[changed - 1];
      }
    }
    if (!constant_p && inst.p.evaluate(point) == field.zero()) return;
    std::uint64_t u = sums.residue(numerator);
    sets[u].insert(sigma);
    if (!least[u] || mask < *least[u]) least[u] = mask;
  });

  Theorem21Report report;
  const std::size_t bound = subset_size(inst.j) - static_cast<std::size_t>(inst.p.degree()) + 1;
  fill_progression_report(sets, inst.system.distinguished().modulus(), period, bound, report);
  const std::uint64_t t = static_cast<std::uint64_t>(
      (report.alpha * Rational(static_cast<std::int64_t>(period / report.n0))).num());
  for (std::uint64_t r = 0; r < report.n0; ++r) {
    report.witnesses.push_back(least[progression_slot(t, r, report.n0, period)]);
  }
  return report;
}

/// Least a in a_0(n_0) (within one period of A_0) with w_{A_0}(a) = m(A_0).
inline std::int64_t minimal_point(const AugmentedSystem& system) {
  auto table = covering_table(system.full());
  std::uint64_t m = covering_multiplicity(system.full());
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] == m && system.distinguished().contains(static_cast<std::int64_t>(x))) {
      return static_cast<std::int64_t>(x);
    }
  }
  throw HypothesisViolation("not-essential", "a_0(n_0) has no point of minimal coverage");
}

/// Checks that A_0 is an m-cover with a_0(n_0) essential; returns m.
inline std::uint64_t require_essential_distinguished(const AugmentedSystem& system,
                                                     std::optional<std::uint64_t> expected_m) {
  std::uint64_t m = covering_multiplicity(system.full());
  require(m >= 1, "not-m-cover", "A_0 is not a cover");
  if (expected_m) {
    require(m == *expected_m, "wrong-multiplicity",
            "expected an " + std::to_string(*expected_m) + "-cover with an essential class, got m = " +
                std::to_string(m));
  }
  auto essential = essential_classes(system.full(), m);
  require(!essential.empty() && essential.front() == 1, "not-essential",
          "a_0(n_0) is not essential");
  return m;
}

struct Cor21Report {
  std::int64_t point = 0;  ///< the a in a_0(n_0) used as the distinguished residue
  Mask j = 0;
  Theorem21Report theorem;
};

/// Builds the progression instance with P = 1 and |J| = min(p', m) - 1
/// (the first covering indices of the minimal point) and verifies it.
template <Field F>
Cor21Report verify_cor21(const F& field, const AugmentedSystem& system,
                         const Multipliers& multipliers, const std::vector<ValuePair<F>>& x) {
  std::uint64_t m = require_essential_distinguished(system, std::nullopt);
  for (std::size_t s = 0; s < x.size(); ++s) {
    require(!(x[s].first == x[s].second), "pair-not-distinct",
            "X_" + std::to_string(s + 1) + " must have two elements");
  }
  Cor21Report out;
  out.point = minimal_point(system);
  const std::uint64_t p = field.characteristic();
  const std::uint64_t size = (p == 0 ? m : std::min(p, m)) - 1;
  auto covering = indices_of(covering_indices(system.tail(), out.point));
  for (std::size_t i = 0; i < size; ++i) out.j |= bit_of(covering.at(i));
  AugmentedSystem shifted(ResidueClass(out.point, system.distinguished().modulus()),
                          system.tail());
  Theorem21Instance<F> inst{field,
                            shifted,
                            multipliers,
                            out.j,
                            MultiPoly<F>::constant(field, system.tail().size(), field.one()),
                            x};
  out.theorem = verify_theorem21(inst);
  return out;
}

/// Progression inside {{sum_{s in I} m_s/n_s} : sum_{s in I} c_s = c} over
/// Z_p for a p-cover A_0 with a_0(n_0) essential.
std::optional<ProgressionWitness> verify_cor22(const AugmentedSystem& system,
                                               const Multipliers& multipliers, std::uint64_t p,
                                               const std::vector<std::int64_t>& c_values,
                                               std::int64_t target);

template <Field F>
using FieldMatrix = std::vector<std::vector<value_t<F>>>;

/// Progression inside the fractional sums over assignments avoiding every
/// sum_j a_ij x_j = b_i; the witness masks mark s with x_s = c_s.
template <Field F>
std::optional<ProgressionWitness> verify_cor23(const F& field, const AugmentedSystem& system,
                                               const Multipliers& multipliers,
                                               const std::vector<ValuePair<F>>& x,
                                               const FieldMatrix<F>& a,
                                               const std::vector<value_t<F>>& b) {
  const CoverSystem& tail = system.tail();
  const std::size_t k = tail.size();
  const std::size_t rows = a.size();
  if (x.size() != k || b.size() != rows) {
    throw DomainError("length-mismatch", "X needs k pairs and b one entry per row");
  }
  for (const auto& row : a) {
    if (row.size() != k) throw DomainError("length-mismatch", "each row needs k entries");
  }
  FractionalSums sums(tail, multipliers);
  const std::int64_t a0 = system.distinguished().presented();
  const std::uint64_t m_plus = covering_multiplicity(system.full());
  require(m_plus == rows + 1 && covering_function(system.full(), a0) == rows + 1,
          "wrong-multiplicity", "A_0 must be an (m+1)-cover with w(a_0) = m+1, m = " +
                                    std::to_string(rows));
  const std::uint64_t ch = field.characteristic();
  for (std::size_t s = 1; s <= k; ++s) {
    require(ch == 0 || tail.at(s).modulus() % ch != 0, "characteristic-divides-modulus",
            "the characteristic divides n_" + std::to_string(s));
    require(!(x[s - 1].first == x[s - 1].second), "pair-not-distinct",
            "X_" + std::to_string(s) + " must have two elements");
  }
  auto j = indices_of(covering_indices(tail, a0));
  Matrix<F> minor(rows, std::vector<value_t<F>>(rows, field.zero()));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < rows; ++c) minor[i][c] = a[i][j[c] - 1];
  }
  require(!(permanent(field, minor) == field.zero()), "hypothesis-fails",
          "the permanent of the J-columns vanishes");
  check_enumeration_cap(k, "corollary scan");

  std::vector<value_t<F>> row_sums(rows, field.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t s = 0; s < k; ++s) row_sums[i] = row_sums[i] + a[i][s] * x[s].first;
  }
  auto least = least_witnesses(sums, full_mask(k), [&](Mask mask, std::size_t changed) {
    if (changed != 0) {
      value_t<F> step = x[changed - 1].second - x[changed - 1].first;
      if (!contains(mask, changed)) step = -step;
      for (std::size_t i = 0; i < rows; ++i) row_sums[i] = row_sums[i] + a[i][changed - 1] * step;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_sums[i] == b[i]) return false;
    }
    return true;
  });
  return find_progression(sums, least, system.distinguished().modulus());
}

struct Cor24Report {
  std::vector<std::uint64_t> x_set;  ///< the admissible values of x_1 + ... + x_k
  std::set<Rational> s_set;
  std::optional<ProgressionWitness> progression;
  /// Set when n0 = N: whether S is all of {r/N}.
  std::optional<bool> full_when_n0_is_n;
  bool holds = false;
};

inline constexpr std::uint64_t kMaxGridPoints = std::uint64_t{1} << 24;

/// Admissible sums x_1 + ... + x_k over x in [0, p-1]^k avoiding every
/// constraint sum_j x_j a_ij = b_i.
template <Field F>
std::vector<std::uint64_t> constrained_grid_sums(const F& field, const FieldMatrix<F>& a,
                                                 const std::vector<value_t<F>>& b, std::size_t k) {
  const std::uint64_t p = field.characteristic();
  std::uint64_t points = 1;
  for (std::size_t s = 0; s < k; ++s) {
    if (points > kMaxGridPoints / p) throw CapExceeded("enumeration-cap", "p^k grid too large");
    points *= p;
  }
  const std::size_t rows = a.size();
  std::vector<bool> admissible(k * (p - 1) + 1, false);
  std::vector<std::uint64_t> digits(k, 0);
  std::vector<value_t<F>> row_sums(rows, field.zero());
  std::uint64_t total = 0;
  for (std::uint64_t step = 0; step < points; ++step) {
    if (step > 0) {
      // odometer increment, updating row sums by the changed digits
      for (std::size_t s = 0; s < k; ++s) {
        if (digits[s] + 1 < p) {
          ++digits[s];
          ++total;
          for (std::size_t i = 0; i < rows; ++i) row_sums[i] = row_sums[i] + a[i][s];
          break;
        }
        auto back = field.from_int(static_cast<std::int64_t>(p - 1));
        for (std::size_t i = 0; i < rows; ++i) row_sums[i] = row_sums[i] - a[i][s] * back;
        total -= digits[s];
        digits[s] = 0;
      }
    }
    if (admissible[total]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < rows && ok; ++i) ok = !(row_sums[i] == b[i]);
    if (ok) admissible[total] = true;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < admissible.size(); ++t) {
    if (admissible[t]) out.push_back(t);
  }
  return out;
}

template <Field F>
Cor24Report verify_cor24(const F& field, const AugmentedSystem& system,
                         const Multipliers& multipliers, const FieldMatrix<F>& a,
                         const std::vector<value_t<F>>& b) {
  const CoverSystem& tail = system.tail();
  const std::size_t k = tail.size();
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DomainError("length-mismatch", "b needs one entry per row");
  for (const auto& row : a) {
    if (row.size() != k) throw DomainError("length-mismatch", "each row needs k entries");
  }
  FractionalSums sums(tail, multipliers);
  require_essential_distinguished(system, rows + 1);
  const std::uint64_t p = field.characteristic();
  require(p != 0, "characteristic-zero", "a field of prime characteristic is required");
  require(tail.period() % p != 0, "characteristic-divides-modulus", "p divides N");
  require(matrix_rank(field, a) == rows, "rank-deficient", "the matrix does not have rank m");
  check_enumeration_cap(k, "corollary scan");

  Cor24Report out;
  out.x_set = constrained_grid_sums(field, a, b, k);
  std::vector<bool> size_ok(k + 1, false);
  for (auto t : out.x_set) {
    if (t <= k) size_ok[t] = true;
  }
  auto least = least_witnesses(sums, full_mask(k), [&](Mask mask, std::size_t) {
    return size_ok[subset_size(mask)];
  });
  for (std::size_t u = 0; u < least.size(); ++u) {
    if (least[u]) out.s_set.insert(sums.frac_of(u));
  }
  const std::uint64_t n0 = system.distinguished().modulus();
  out.progression = find_progression(sums, least, n0);
  out.holds = out.progression.has_value();
  if (n0 == sums.period()) {
    out.full_when_n0_is_n = out.s_set.size() == sums.period();
    out.holds = out.holds && *out.full_when_n0_is_n;
  }
  return out;
}

/// For a nonsingular k x k matrix M over a field of characteristic p and c
/// outside the prime subfield, finds x in [0, p-1]^k with sum x_j <= k and
/// M (x + c) nowhere zero, returning the vector x + c.
template <Field F>
std::optional<std::vector<value_t<F>>> nowhere_zero_pair(const F& field, const FieldMatrix<F>& m,
                                                         const value_t<F>& c) {
  const std::size_t k = m.size();
  for (const auto& row : m) {
    if (row.size() != k) throw DomainError("not-square", "the matrix must be square");
  }
  require(matrix_rank(field, m) == k, "rank-deficient", "the matrix is singular");
  const std::uint64_t p = field.characteristic();
  for (std::uint64_t i = 0; i < p; ++i) {
    require(!(c == field.from_int(static_cast<std::int64_t>(i))), "c-in-prime-subfield",
            "c lies in the prime subfield");
  }
  std::uint64_t points = 1;
  for (std::size_t s = 0; s < k; ++s) {
    if (points > kMaxGridPoints / p) throw CapExceeded("enumeration-cap", "p^k grid too large");
    points *= p;
  }
  for (std::uint64_t code = 0; code < points; ++code) {
    std::vector<value_t<F>> v(k, field.zero());
    std::uint64_t rest = code;
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < k; ++s) {
      total += rest % p;
      v[s] = field.from_int(static_cast<std::int64_t>(rest % p)) + c;
      rest /= p;
    }
    if (total > k) continue;
    bool ok = std::none_of(v.begin(), v.end(), [&](const auto& e) { return e == field.zero(); });
    for (std::size_t i = 0; i < k && ok; ++i) {
      value_t<F> dot = field.zero();
      for (std::size_t j = 0; j < k; ++j) dot = dot + m[i][j] * v[j];
      ok = !(dot == field.zero());
    }
    if (ok) return v;
  }
  return std::nullopt;
}

}  // namespace covsum
