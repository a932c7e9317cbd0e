#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "covsum/error.hpp"
#include "covsum/multipoly.hpp"
#include "covsum/text.hpp"

namespace covsum {

// Text form: terms joined by " + ", each term `c*x1^e1*...*xk^ek` with
// factors of exponent 1 written `xi`, exponent-0 factors omitted and a unit
// coefficient omitted on non-constant terms. Terms are ordered by total
// degree, then exponent vector, both descending. The zero polynomial is "0".

template <Ring R>
std::string format_poly(const MultiPoly<R>& p) {
  if (p.is_zero()) return "0";
  std::vector<const typename MultiPoly<R>::TermMap::value_type*> terms;
  for (const auto& entry : p.terms()) terms.push_back(&entry);
  std::sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
    int da = MultiPoly<R>::total_degree(a->first);
    int db = MultiPoly<R>::total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  for (const auto* term : terms) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> factors;
    bool constant = MultiPoly<R>::total_degree(term->first) == 0;
    if (constant || !(term->second == p.ring().one())) factors.push_back(p.ring().format(term->second));
    for (std::size_t s = 0; s < term->first.size(); ++s) {
      auto e = term->first[s];
      if (e == 0) continue;
      std::string f = "x" + std::to_string(s + 1);
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::pair<bool, std::string>> split_terms(std::string_view text) {
  std::vector<std::pair<bool, std::string>> terms;
  bool negative = false;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    auto body = std::string(trim_space(current));
    if (body.empty()) throw DomainError("parse", "empty term in polynomial");
    terms.emplace_back(negative, body);
    current.clear();
    negative = false;
  };
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (trim_space(current).empty()) {
        if (ch == '-') negative = !negative;
        continue;
      }
      flush();
      negative = ch == '-';
      continue;
    }
    current += ch;
  }
  flush();
  return terms;
}

}  // namespace detail

/// Parses the text form above (also accepting '-' between terms and
/// repeated factors) into a polynomial in k variables.
template <Ring R>
MultiPoly<R> parse_poly(const R& ring, std::size_t variables, std::string_view text) {
  MultiPoly<R> out(ring, variables);
  if (trim_space(text).empty()) throw DomainError("parse", "empty polynomial text");
  for (const auto& [negative, body] : detail::split_terms(text)) {
    Exponents e(variables, 0);
    value_t<R> coeff = ring.one();
    std::string_view rest = body;
    int depth = 0;
    std::size_t start = 0;
    std::vector<std::string_view> factors;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      if (i < rest.size() && (rest[i] == '(' || rest[i] == '[')) ++depth;
      if (i < rest.size() && (rest[i] == ')' || rest[i] == ']')) --depth;
      if (i == rest.size() || (depth == 0 && rest[i] == '*')) {
        factors.push_back(trim_space(rest.substr(start, i - start)));
        start = i + 1;
      }
    }
    for (auto factor : factors) {
      if (factor.empty()) throw DomainError("parse", "empty factor in '" + body + "'");
      if (factor[0] == 'x') {
        auto caret = factor.find('^');
        auto index_text = factor.substr(1, caret == std::string_view::npos ? std::string_view::npos
                                                                           : caret - 1);
        std::uint32_t exponent = 1;
        if (caret != std::string_view::npos) {
          exponent = static_cast<std::uint32_t>(parse_bigint(factor.substr(caret + 1)));
        }
        auto index = static_cast<std::size_t>(parse_bigint(index_text));
        if (index == 0 || index > variables) {
          throw DomainError("parse", "variable index out of range in '" + body + "'");
        }
        e[index - 1] += exponent;
      } else {
        coeff = coeff * ring.parse(factor);
      }
    }
    out.add_term(std::move(e), negative ? value_t<R>(-coeff) : coeff);
  }
  return out;
}

}  // namespace covsum
