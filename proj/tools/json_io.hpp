#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "covsum/extension_field.hpp"
#include "covsum/multipoly.hpp"
#include "covsum/poly_text.hpp"
#include "covsum/prime_field.hpp"
#include "covsum/residue.hpp"
#include "covsum/spectrum.hpp"
#include "covsum/zero_sum.hpp"

namespace covsum::cli {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; DomainError "parse" on failure.
Json read_json(const std::filesystem::path& path);

/// Member lookup with a DomainError "schema" naming the missing key.
const Json& member(const Json& j, const char* key);

std::int64_t as_int(const Json& j, const char* what);
std::uint64_t as_uint(const Json& j, const char* what);
std::vector<std::int64_t> int_list(const Json& j, const char* what);

ResidueClass parse_class(const Json& j);
Json to_json(const ResidueClass& c);

/// {"classes": [...]}
CoverSystem parse_system(const Json& j);
Json to_json(const CoverSystem& s);

/// {"a0": {...}, "classes": [...]} with the classes forming the tail.
AugmentedSystem parse_augmented(const Json& j);
Json to_json(const AugmentedSystem& s);

/// "multipliers" if present, otherwise all ones.
Multipliers parse_multipliers(const Json& j, std::size_t k);

/// 1-based index list to a mask, checked against k.
Mask parse_index_set(const Json& j, std::size_t k);
Json index_list(Mask m);

using AnyField = std::variant<RationalField, PrimeField, ExtensionField>;

/// {"type": "rational"} | {"type": "prime", "p": p} |
/// {"type": "extension", "p": p, "d": d}.
AnyField parse_field(const Json& j);

/// Strings go through the field's parser; integers are embedded.
template <Ring R>
value_t<R> parse_element(const R& ring, const Json& j) {
  if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
  if (j.is_string()) return ring.parse(j.get<std::string>());
  throw DomainError("schema", "expected a field element, got " + j.dump());
}

template <Ring R>
std::vector<value_t<R>> parse_vector(const R& ring, const Json& j) {
  if (!j.is_array()) throw DomainError("schema", "expected an array of field elements");
  std::vector<value_t<R>> out;
  for (const auto& e : j) out.push_back(parse_element(ring, e));
  return out;
}

template <Ring R>
std::vector<std::vector<value_t<R>>> parse_matrix(const R& ring, const Json& j) {
  if (!j.is_array()) throw DomainError("schema", "expected a matrix");
  std::vector<std::vector<value_t<R>>> out;
  for (const auto& row : j) out.push_back(parse_vector(ring, row));
  return out;
}

template <Ring R>
std::vector<std::pair<value_t<R>, value_t<R>>> parse_pairs(const R& ring, const Json& j,
                                                           std::size_t k) {
  if (!j.is_array() || j.size() != k) {
    throw DomainError("schema", "X needs " + std::to_string(k) + " pairs");
  }
  std::vector<std::pair<value_t<R>, value_t<R>>> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw DomainError("schema", "each X_s is [b, c]");
    out.emplace_back(parse_element(ring, pair[0]), parse_element(ring, pair[1]));
  }
  return out;
}

template <Ring R>
MultiPoly<R> parse_polynomial(const R& ring, const Json& j, std::size_t k) {
  if (j.is_number_integer()) return MultiPoly<R>::constant(ring, k, ring.from_int(j.get<std::int64_t>()));
  if (!j.is_string()) throw DomainError("schema", "a polynomial is given as text");
  return parse_poly(ring, k, j.get<std::string>());
}

Json to_json(const SubsetRecord& r);
Json to_json(const ProgressionWitness& w);

ZeroSumInstance parse_zero_sum(const Json& j);
Json to_json(const ZeroSumInstance& z);

/// Hex SHA-256 of the compact serialization.
std::string digest(const Json& j);

/// Deterministic text: two-space indent and a trailing newline.
std::string pretty(const Json& j);

}  // namespace covsum::cli
