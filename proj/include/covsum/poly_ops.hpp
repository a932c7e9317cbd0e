#pragma once

#include <optional>
#include <span>
#include <vector>

#include "covsum/error.hpp"
#include "covsum/multipoly.hpp"
#include "covsum/ring.hpp"
#include "covsum/subset.hpp"

namespace covsum {

template <Ring R>
using Matrix = std::vector<std::vector<value_t<R>>>;

/// Sum over I subset of J of (-1)^{|J|-|I|} f(1_I). For deg f <= |J| this is
/// the coefficient of prod_{j in J} x_j. Throws DomainError
/// "formula-inapplicable" when the declared degree bound exceeds |J|.
template <Ring R>
value_t<R> coeff_by_subsets(const BlackBoxPoly<R>& f, Mask subset) {
  const R& ring = f.ring;
  if (f.degree_bound == kDegreeNegInf) return ring.zero();
  if (f.degree_bound > static_cast<int>(subset_size(subset))) {
    throw DomainError("formula-inapplicable",
                      "formula inapplicable: degree bound " + std::to_string(f.degree_bound) +
                          " exceeds |J| = " + std::to_string(subset_size(subset)));
  }
  if (mask_exceeds(subset, f.variables)) {
    throw DomainError("bad-index", "subset refers to a variable beyond k");
  }
  check_enumeration_cap(subset_size(subset), "coeff_by_subsets");
  std::vector<value_t<R>> point(f.variables, ring.zero());
  value_t<R> total = ring.zero();
  bool odd_complement = subset_size(subset) % 2 == 1;
  for_each_subset_gray(subset, [&](Mask, std::size_t changed) {
    if (changed != 0) {
      auto& slot = point[changed - 1];
      slot = (slot == ring.zero()) ? ring.one() : ring.zero();
      odd_complement = !odd_complement;
    }
    value_t<R> value = f.evaluate(point);
    total = odd_complement ? total - value : total + value;
  });
  return total;
}

template <Ring R>
value_t<R> coeff_by_subsets(const MultiPoly<R>& f, Mask subset) {
  return coeff_by_subsets(BlackBoxPoly<R>::from(f), subset);
}

/// sum_{I subset [1,k]} (-1)^{|I|} (sum_{s in I} c_s)^n, evaluated with
/// subsets in increasing mask order, inner sums in index order and powers
/// multiplied left to right.
template <Ring R>
value_t<R> escott_sum(const R& ring, std::span<const value_t<R>> c, unsigned n) {
  check_enumeration_cap(c.size(), "escott_sum");
  const Mask universe = c.empty() ? 0 : (Mask{1} << c.size()) - 1;
  value_t<R> total = ring.zero();
  for_each_subset_ordered(universe, [&](Mask subset) {
    value_t<R> inner = ring.zero();
    for (auto s : indices_of(subset)) inner = inner + c[s - 1];
    value_t<R> term = ring.one();
    for (unsigned i = 0; i < n; ++i) term = term * inner;
    total = (subset_size(subset) % 2 == 0) ? total + term : total - term;
  });
  return total;
}

/// Rank by Gaussian elimination.
template <Field F>
std::size_t matrix_rank(const F& field, Matrix<F> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == field.zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const value_t<F> inv = field.inv(a[rank][col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == field.zero()) continue;
      const value_t<F> factor = a[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c) a[r][c] = a[r][c] - factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Whether the functions chi_I(x) = prod_{s in I} x_s, I subset [1,k], are
/// linearly independent on {0,1}^k, via the rank of their evaluation matrix.
template <Field F>
bool chi_basis_independence(unsigned k, const F& field) {
  if (k > 5) throw CapExceeded("size-cap", "chi basis check is limited to k <= 5");
  const std::size_t size = std::size_t{1} << k;
  Matrix<F> m(size, std::vector<value_t<F>>(size, field.zero()));
  for (std::size_t point = 0; point < size; ++point) {
    for (std::size_t subset = 0; subset < size; ++subset) {
      if ((subset & ~point) == 0) m[point][subset] = field.one();
    }
  }
  return matrix_rank(field, std::move(m)) == size;
}

/// Permanent by Ryser's inclusion-exclusion with Gray-code column updates.
template <Ring R>
value_t<R> permanent(const R& ring, const Matrix<R>& a) {
  const std::size_t m = a.size();
  for (const auto& row : a) {
    if (row.size() != m) throw DomainError("not-square", "permanent needs a square matrix");
  }
  if (m > 20) throw CapExceeded("size-cap", "permanent is limited to m <= 20");
  if (m == 0) return ring.one();
  std::vector<value_t<R>> row_sums(m, ring.zero());
  value_t<R> total = ring.zero();
  const Mask columns = (Mask{1} << m) - 1;
  for_each_subset_gray(columns, [&](Mask subset, std::size_t changed) {
    if (changed == 0) return;
    const bool added = contains(subset, changed);
    for (std::size_t i = 0; i < m; ++i) {
      row_sums[i] = added ? row_sums[i] + a[i][changed - 1] : row_sums[i] - a[i][changed - 1];
    }
    value_t<R> prod = ring.one();
    for (const auto& s : row_sums) prod = prod * s;
    total = (subset_size(subset) % 2 == m % 2) ? total + prod : total - prod;
  });
  return total;
}

/// Nonvanishing point on the grid X_1 x ... x X_k for a polynomial whose
/// coefficient of prod_{j in J} x_j is nonzero and whose degree is at most
/// |J|. Every X_s has one or two elements and J only names indices with
/// two. The search substitutes x_s -> b_s + (c_s - b_s) x_s and scans
/// I subset J in increasing mask order, returning the first I that works.
/// Throws HypothesisViolation "hypothesis-fails" when the coefficient is 0.
template <Field F>
std::optional<std::vector<value_t<F>>> cn_witness(const BlackBoxPoly<F>& f,
                                                  const std::vector<std::vector<value_t<F>>>& grid,
                                                  Mask subset) {
  const F& field = f.ring;
  const std::size_t k = f.variables;
  if (grid.size() != k) throw DomainError("length-mismatch", "need one grid set per variable");
  std::vector<value_t<F>> low;
  std::vector<value_t<F>> high;
  for (std::size_t s = 1; s <= k; ++s) {
    const auto& set = grid[s - 1];
    if (set.empty() || set.size() > 2) throw DomainError("precondition", "grid sets need size 1 or 2");
    if (set.size() == 2 && set[0] == set[1]) throw DomainError("precondition", "repeated grid value");
    if (contains(subset, s) && set.size() != 2) {
      throw DomainError("precondition", "J may only contain indices whose set has two elements");
    }
    low.push_back(set[0]);
    high.push_back(contains(subset, s) ? set[1] : set[0]);
  }
  if (mask_exceeds(subset, k)) throw DomainError("bad-index", "J refers to a variable beyond k");
  auto shifted_point = [&](Mask chosen) {
    std::vector<value_t<F>> x = low;
    for (auto s : indices_of(chosen)) x[s - 1] = high[s - 1];
    return x;
  };
  BlackBoxPoly<F> shifted{field, k,
                          [&](std::span<const value_t<F>> delta) {
                            std::vector<value_t<F>> x(k, field.zero());
                            for (std::size_t s = 0; s < k; ++s) {
                              x[s] = low[s] + (high[s] - low[s]) * delta[s];
                            }
                            return f.evaluate(x);
                          },
                          f.degree_bound};
  if (coeff_by_subsets(shifted, subset) == field.zero()) {
    throw HypothesisViolation("hypothesis-fails",
                              "coefficient of prod_{j in J} x_j vanishes; no witness guaranteed");
  }
  std::optional<std::vector<value_t<F>>> found;
  for_each_subset_ordered(subset, [&](Mask chosen) {
    if (found) return;
    auto x = shifted_point(chosen);
    if (!(f.evaluate(x) == field.zero())) found = std::move(x);
  });
  return found;
}

}  // namespace covsum
