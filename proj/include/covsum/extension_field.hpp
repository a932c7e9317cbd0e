#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "covsum/rational.hpp"

namespace covsum {

/// Dense polynomial over Z/pZ, index i holds the coefficient of x^i.
using ModPoly = std::vector<std::uint64_t>;

struct ExtensionContext {
  std::uint64_t p;
  unsigned degree;
  ModPoly modulus;  // monic, irreducible, size degree + 1
};

/// Element of GF(p^d) = F_p[t]/(g(t)), stored as d coefficients.
class ExtElement {
 public:
  ExtElement(std::shared_ptr<const ExtensionContext> ctx, ModPoly coeffs);

  const ModPoly& coefficients() const { return c_; }
  const std::shared_ptr<const ExtensionContext>& context() const { return ctx_; }
  bool is_zero() const;

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  ExtElement operator-() const;
  ExtElement& operator+=(const ExtElement& b) { return *this = *this + b; }
  ExtElement& operator*=(const ExtElement& b) { return *this = *this * b; }

  friend bool operator==(const ExtElement& a, const ExtElement& b);
  friend bool operator<(const ExtElement& a, const ExtElement& b);

 private:
  std::shared_ptr<const ExtensionContext> ctx_;
  ModPoly c_;
};

bool is_irreducible_mod_p(const ModPoly& f, std::uint64_t p);

/// GF(p^d). The defining polynomial is the first monic irreducible one of
/// degree d when candidates are ordered by the base-p integer
/// c_0 + c_1 p + ... + c_{d-1} p^{d-1}.
class ExtensionField {
 public:
  using value_type = ExtElement;

  ExtensionField(std::uint64_t p, unsigned degree);

  std::uint64_t characteristic() const { return ctx_->p; }
  unsigned degree() const { return ctx_->degree; }
  const ModPoly& modulus() const { return ctx_->modulus; }
  /// p^d; throws CapExceeded above 2^62.
  std::uint64_t order() const;

  ExtElement zero() const;
  ExtElement one() const;
  ExtElement from_int(std::int64_t n) const;
  ExtElement make(ModPoly coeffs) const;
  /// Element number `index` in the base-p enumeration (index < p^d).
  ExtElement element_at(std::uint64_t index) const;
  ExtElement inv(const ExtElement& a) const;
  /// True when a lies in the prime subfield {0, e, ..., (p-1)e}.
  bool in_prime_subfield(const ExtElement& a) const;

  /// "(c0,c1,...)" coefficient list.
  std::string format(const ExtElement& a) const;
  ExtElement parse(std::string_view s) const;

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.characteristic() == b.characteristic() && a.modulus() == b.modulus();
  }

 private:
  std::shared_ptr<const ExtensionContext> ctx_;
};

}  // namespace covsum
