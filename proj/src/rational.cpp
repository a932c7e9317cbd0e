#include "covsum/rational.hpp"

#include <cctype>
#include <sstream>

#include "covsum/error.hpp"

namespace covsum {

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw DomainError("parse", "expected an integer, got '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw DomainError("parse", "expected an integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("zero-denominator", "rational with zero denominator");
  normalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("division-by-zero", "rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return num_.str() + "/" + den_.str(); }

std::string Rational::to_short_string() const {
  return den_ == 1 ? num_.str() : to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_short_string(); }

BigInt floor(const Rational& q) {
  BigInt quotient = q.num() / q.den();  // truncates toward zero
  if (q.num() < 0 && quotient * q.den() != q.num()) quotient -= 1;
  return quotient;
}

Rational frac_part(const Rational& q) { return q - Rational(floor(q)); }

}  // namespace covsum
