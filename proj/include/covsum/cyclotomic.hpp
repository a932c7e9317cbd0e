#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "covsum/number_theory.hpp"
#include "covsum/rational.hpp"

namespace covsum {

struct CyclotomicContext {
  std::uint64_t level;
  IntPoly modulus;  // Phi_level, monic
  std::size_t degree() const { return modulus.size() - 1; }
};

/// Element of Q[x]/(Phi_N(x)), stored as exactly phi(N) rational coefficients.
/// Zero-testing is coefficient comparison.
class CyclotomicElement {
 public:
  CyclotomicElement(std::shared_ptr<const CyclotomicContext> ctx, std::vector<Rational> coeffs);

  std::uint64_t level() const { return ctx_->level; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const std::shared_ptr<const CyclotomicContext>& context() const { return ctx_; }
  bool is_zero() const;

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  CyclotomicElement operator-() const;
  CyclotomicElement& operator+=(const CyclotomicElement& b) { return *this = *this + b; }
  CyclotomicElement& operator*=(const CyclotomicElement& b) { return *this = *this * b; }

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator<(const CyclotomicElement& a, const CyclotomicElement& b);

 private:
  std::shared_ptr<const CyclotomicContext> ctx_;
  std::vector<Rational> coeffs_;
};

/// The field Q(zeta_N).
class CyclotomicField {
 public:
  using value_type = CyclotomicElement;

  explicit CyclotomicField(std::uint64_t level);

  std::uint64_t level() const { return ctx_->level; }
  std::size_t degree() const { return ctx_->degree(); }
  std::uint64_t characteristic() const { return 0; }

  CyclotomicElement zero() const;
  CyclotomicElement one() const;
  CyclotomicElement from_int(std::int64_t n) const { return embed(Rational(n)); }
  CyclotomicElement embed(const Rational& q) const;
  /// The class of x; a primitive N-th root of unity.
  CyclotomicElement generator() const;
  CyclotomicElement make(std::vector<Rational> coeffs) const;
  CyclotomicElement inv(const CyclotomicElement& a) const;

  /// "[c0,c1,...]" with each c_i in short rational form.
  std::string format(const CyclotomicElement& a) const;
  CyclotomicElement parse(std::string_view s) const;

  friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) {
    return a.level() == b.level();
  }

 private:
  std::shared_ptr<const CyclotomicContext> ctx_;
};

}  // namespace covsum
