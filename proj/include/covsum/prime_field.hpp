#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "covsum/rational.hpp"

namespace covsum {

/// Element of Z/pZ, stored reduced into [0, p-1]. The modulus travels with
/// the value; mixing moduli is a logic error and throws.
class ModP {
 public:
  ModP(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator*(const ModP& a, const ModP& b);
  ModP operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP& operator+=(const ModP& b) { return *this = *this + b; }
  ModP& operator-=(const ModP& b) { return *this = *this - b; }
  ModP& operator*=(const ModP& b) { return *this = *this * b; }

  friend bool operator==(const ModP& a, const ModP& b) = default;
  friend auto operator<=>(const ModP& a, const ModP& b) = default;

 private:
  std::uint64_t v_;
  std::uint64_t p_;
};

/// Z/pZ for a prime p < 2^32.
class PrimeField {
 public:
  using value_type = ModP;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  ModP zero() const { return ModP(0, p_); }
  ModP one() const { return ModP(1, p_); }
  ModP from_int(std::int64_t n) const;
  ModP from_bigint(const BigInt& n) const;
  ModP inv(const ModP& a) const;
  std::string format(const ModP& a) const { return std::to_string(a.value()); }
  ModP parse(std::string_view s) const { return from_bigint(parse_bigint(s)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace covsum
