#include "covsum/cyclotomic.hpp"

#include "covsum/error.hpp"
#include "covsum/text.hpp"

namespace covsum {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

void check_same(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.level() != b.level()) {
    throw DomainError("field-mismatch", "operands from different cyclotomic fields");
  }
}

QPoly to_qpoly(const IntPoly& p) { return QPoly(p.begin(), p.end()); }

// Remainder of a modulo a monic integer polynomial.
QPoly reduce(QPoly a, const IntPoly& modulus) {
  const std::size_t d = modulus.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    if (a[i].is_zero()) continue;
    Rational c = a[i];
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * Rational(modulus[j]);
  }
  a.resize(d);
  return a;
}

// q, r with a = q*b + r over Q; b nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational());
  const Rational lead_inv = Rational(1) / b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

CyclotomicElement::CyclotomicElement(std::shared_ptr<const CyclotomicContext> ctx,
                                     std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx_->degree()) coeffs_ = reduce(std::move(coeffs_), ctx_->modulus);
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  check_same(a, b);
  std::vector<Rational> out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
  return CyclotomicElement(a.ctx_, std::move(out));
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  check_same(a, b);
  std::vector<Rational> out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs_[i];
  return CyclotomicElement(a.ctx_, std::move(out));
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  check_same(a, b);
  return CyclotomicElement(a.ctx_, reduce(mul(a.coeffs_, b.coeffs_), a.ctx_->modulus));
}

CyclotomicElement CyclotomicElement::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return CyclotomicElement(ctx_, std::move(out));
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  return a.level() == b.level() && a.coeffs_ == b.coeffs_;
}

bool operator<(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.level() != b.level()) return a.level() < b.level();
  return a.coeffs_ < b.coeffs_;
}

CyclotomicField::CyclotomicField(std::uint64_t level)
    : ctx_(std::make_shared<CyclotomicContext>(CyclotomicContext{level, cyclotomic_poly(level)})) {}

CyclotomicElement CyclotomicField::zero() const {
  return CyclotomicElement(ctx_, std::vector<Rational>(degree()));
}

CyclotomicElement CyclotomicField::one() const { return embed(Rational(1)); }

CyclotomicElement CyclotomicField::embed(const Rational& q) const {
  std::vector<Rational> c(degree());
  c[0] = q;
  return CyclotomicElement(ctx_, std::move(c));
}

CyclotomicElement CyclotomicField::generator() const {
  return CyclotomicElement(ctx_, {Rational(), Rational(1)});
}

CyclotomicElement CyclotomicField::make(std::vector<Rational> coeffs) const {
  return CyclotomicElement(ctx_, std::move(coeffs));
}

CyclotomicElement CyclotomicField::inv(const CyclotomicElement& a) const {
  if (a.is_zero()) throw DomainError("division-by-zero", "inverse of zero in cyclotomic field");
  // Extended Euclid: track s with s*a = r (mod Phi).
  QPoly r0 = to_qpoly(ctx_->modulus);
  QPoly r1 = a.coefficients();
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw DomainError("internal", "cyclotomic modulus is not irreducible");
  }
  Rational scale = Rational(1) / r1[0];
  for (auto& c : s1) c *= scale;
  return CyclotomicElement(ctx_, reduce(std::move(s1), ctx_->modulus));
}

std::string CyclotomicField::format(const CyclotomicElement& a) const {
  std::string out = "[";
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    if (i) out += ",";
    out += a.coefficients()[i].to_short_string();
  }
  return out + "]";
}

CyclotomicElement CyclotomicField::parse(std::string_view s) const {
  std::vector<Rational> coeffs;
  for (const auto& item : split_bracket_list(s)) coeffs.push_back(Rational::parse(item));
  if (coeffs.size() != degree()) {
    throw DomainError("parse", "cyclotomic element needs " + std::to_string(degree()) +
                                   " coefficients");
  }
  return make(std::move(coeffs));
}

}  // namespace covsum
