#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "covsum/error.hpp"
#include "covsum/ring.hpp"
#include "covsum/subset.hpp"

namespace covsum {

using Exponents = std::vector<std::uint32_t>;

/// Degree of the zero polynomial.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

/// Sparse polynomial in k variables over a ring R. Zero coefficients are
/// never stored.
template <Ring R>
class MultiPoly {
 public:
  using value_type = value_t<R>;
  using TermMap = std::map<Exponents, value_type>;

  MultiPoly(R ring, std::size_t variables) : ring_(std::move(ring)), k_(variables) {}

  static MultiPoly constant(R ring, std::size_t variables, value_type c) {
    MultiPoly p(std::move(ring), variables);
    p.add_term(Exponents(variables, 0), std::move(c));
    return p;
  }

  /// The monomial x_index (1-based).
  static MultiPoly variable(R ring, std::size_t variables, std::size_t index) {
    MultiPoly p(ring, variables);
    Exponents e(variables, 0);
    e.at(index - 1) = 1;
    p.add_term(std::move(e), ring.one());
    return p;
  }

  /// prod_{s in subset} x_s with coefficient c.
  static MultiPoly multilinear(R ring, std::size_t variables, Mask subset, value_type c) {
    MultiPoly p(std::move(ring), variables);
    Exponents e(variables, 0);
    for (auto s : indices_of(subset)) e.at(s - 1) = 1;
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t variables() const noexcept { return k_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Exponents e, const value_type& c) {
    if (e.size() != k_) throw DomainError("length-mismatch", "exponent vector length != k");
    if (c == ring_.zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second == ring_.zero()) terms_.erase(it);
    }
  }

  int degree() const {
    int best = kDegreeNegInf;
    for (const auto& [e, c] : terms_) best = std::max(best, total_degree(e));
    return best;
  }

  value_type coeff(const Exponents& e) const {
    if (e.size() != k_) throw DomainError("length-mismatch", "exponent vector length != k");
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  /// Coefficient of prod_{s in subset} x_s.
  value_type multilinear_coeff(Mask subset) const {
    Exponents e(k_, 0);
    for (auto s : indices_of(subset)) e.at(s - 1) = 1;
    return coeff(e);
  }

  value_type evaluate(std::span<const value_type> point) const {
    if (point.size() != k_) throw DomainError("length-mismatch", "evaluation point length != k");
    value_type total = ring_.zero();
    for (const auto& [e, c] : terms_) {
      value_type term = c;
      for (std::size_t s = 0; s < k_; ++s) {
        if (e[s] != 0) term = term * power(ring_, point[s], e[s]);
      }
      total = total + term;
    }
    return total;
  }

  /// f evaluated at the 0/1 point with ones exactly on `subset`: the sum of
  /// coefficients of monomials whose support lies in `subset`.
  value_type evaluate_indicator(Mask subset) const {
    value_type total = ring_.zero();
    for (const auto& [e, c] : terms_) {
      if ((support(e) & ~subset) == 0) total = total + c;
    }
    return total;
  }

  static Mask support(const Exponents& e) {
    Mask m = 0;
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (e[s] != 0) m |= bit_of(s + 1);
    }
    return m;
  }

  static int total_degree(const Exponents& e) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly operator-() const {
    MultiPoly out(ring_, k_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.ring_, a.k_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.k_);
        for (std::size_t s = 0; s < a.k_; ++s) e[s] = ea[s] + eb[s];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }
  MultiPoly scaled(const value_type& c) const {
    MultiPoly out(ring_, k_);
    for (const auto& [e, x] : terms_) out.add_term(e, x * c);
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiPoly& other) const {
    if (other.k_ != k_) throw DomainError("length-mismatch", "polynomials in different variables");
  }

  R ring_;
  std::size_t k_;
  TermMap terms_;
};

/// Applies `map` to every coefficient, giving a polynomial over `target`.
template <Ring R, Ring S, class Map>
MultiPoly<S> map_poly(const MultiPoly<R>& p, const S& target, Map&& map) {
  MultiPoly<S> out(target, p.variables());
  for (const auto& [e, c] : p.terms()) out.add_term(e, map(c));
  return out;
}

/// A polynomial known only through evaluation, with a caller-asserted upper
/// bound on its total degree (kDegreeNegInf for the zero polynomial).
template <Ring R>
struct BlackBoxPoly {
  using value_type = value_t<R>;
  using Evaluator = std::function<value_type(std::span<const value_type>)>;

  R ring;
  std::size_t variables;
  Evaluator evaluate;
  int degree_bound;

  static BlackBoxPoly from(const MultiPoly<R>& p) {
    return BlackBoxPoly{p.ring(), p.variables(),
                        [p](std::span<const value_type> x) { return p.evaluate(x); }, p.degree()};
  }
};

}  // namespace covsum
