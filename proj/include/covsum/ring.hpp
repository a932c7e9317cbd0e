#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "covsum/rational.hpp"

namespace covsum {

// A ring is described by a small "ring object" that knows how to produce
// constants; its elements carry whatever context they need for +, -, *.
// Element types provide a total order (canonical, not algebraic) so they can
// be stored in ordered containers.
template <class R>
concept Ring = requires(const R& ring, const typename R::value_type& a,
                        const typename R::value_type& b, std::int64_t n, std::string_view s) {
  typename R::value_type;
  { ring.zero() } -> std::convertible_to<typename R::value_type>;
  { ring.one() } -> std::convertible_to<typename R::value_type>;
  { ring.from_int(n) } -> std::convertible_to<typename R::value_type>;
  { a + b } -> std::convertible_to<typename R::value_type>;
  { a - b } -> std::convertible_to<typename R::value_type>;
  { a * b } -> std::convertible_to<typename R::value_type>;
  { -a } -> std::convertible_to<typename R::value_type>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { ring.format(a) } -> std::convertible_to<std::string>;
  { ring.parse(s) } -> std::convertible_to<typename R::value_type>;
};

/// A ring whose nonzero elements are invertible, with a known characteristic
/// (0 for fields of characteristic zero).
template <class F>
concept Field = Ring<F> && requires(const F& field, const typename F::value_type& a) {
  { field.inv(a) } -> std::convertible_to<typename F::value_type>;
  { field.characteristic() } -> std::convertible_to<std::uint64_t>;
};

template <Ring R>
using value_t = typename R::value_type;

template <Ring R>
value_t<R> power(const R& ring, value_t<R> base, std::uint64_t exponent) {
  value_t<R> result = ring.one();
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

struct IntegerRing {
  using value_type = BigInt;

  BigInt zero() const { return 0; }
  BigInt one() const { return 1; }
  BigInt from_int(std::int64_t n) const { return n; }
  std::string format(const BigInt& a) const { return a.str(); }
  BigInt parse(std::string_view s) const { return parse_bigint(s); }
  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

struct RationalField {
  using value_type = Rational;

  Rational zero() const { return {}; }
  Rational one() const { return 1; }
  Rational from_int(std::int64_t n) const { return n; }
  Rational inv(const Rational& a) const { return Rational(1) / a; }
  std::uint64_t characteristic() const { return 0; }
  std::string format(const Rational& a) const { return a.to_short_string(); }
  Rational parse(std::string_view s) const { return Rational::parse(s); }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

}  // namespace covsum
