#include "json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "covsum/error.hpp"

namespace covsum::cli {

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("io", "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("parse", path.string() + ": " + e.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError("schema", std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw DomainError("schema", std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_uint(const Json& j, const char* what) {
  std::int64_t v = as_int(j, what);
  if (v < 0) throw DomainError("schema", std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError("schema", std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& e : j) out.push_back(as_int(e, what));
  return out;
}

ResidueClass parse_class(const Json& j) {
  std::int64_t a = as_int(member(j, "a"), "a");
  std::uint64_t n = as_uint(member(j, "n"), "n");
  if (n == 0) throw DomainError("schema", "moduli must be positive");
  return ResidueClass(a, n);
}

Json to_json(const ResidueClass& c) { return Json{{"a", c.presented()}, {"n", c.modulus()}}; }

CoverSystem parse_system(const Json& j) {
  const Json& classes = member(j, "classes");
  if (!classes.is_array()) throw DomainError("schema", "classes must be an array");
  std::vector<ResidueClass> out;
  for (const auto& c : classes) out.push_back(parse_class(c));
  return CoverSystem(std::move(out));
}

Json to_json(const CoverSystem& s) {
  Json classes = Json::array();
  for (const auto& c : s.classes()) classes.push_back(to_json(c));
  return Json{{"classes", classes}};
}

AugmentedSystem parse_augmented(const Json& j) {
  return AugmentedSystem(parse_class(member(j, "a0")), parse_system(j));
}

Json to_json(const AugmentedSystem& s) {
  Json out{{"a0", to_json(s.distinguished())}};
  out["classes"] = to_json(s.tail())["classes"];
  return out;
}

Multipliers parse_multipliers(const Json& j, std::size_t k) {
  if (!j.contains("multipliers")) return Multipliers(k, 1);
  auto m = int_list(j.at("multipliers"), "multipliers");
  if (m.size() != k) {
    throw DomainError("schema", "expected " + std::to_string(k) + " multipliers");
  }
  return m;
}

Mask parse_index_set(const Json& j, std::size_t k) {
  Mask out = 0;
  for (auto i : int_list(j, "index set")) {
    if (i < 1 || static_cast<std::size_t>(i) > k) {
      throw DomainError("schema", "index " + std::to_string(i) + " outside [1, " +
                                      std::to_string(k) + "]");
    }
    out |= bit_of(static_cast<std::size_t>(i));
  }
  return out;
}

Json index_list(Mask m) {
  Json out = Json::array();
  for (auto i : indices_of(m)) out.push_back(i);
  return out;
}

AnyField parse_field(const Json& j) {
  const std::string type = member(j, "type").get<std::string>();
  if (type == "rational") return RationalField{};
  if (type == "prime") return PrimeField(as_uint(member(j, "p"), "p"));
  if (type == "extension") {
    auto d = as_uint(member(j, "d"), "d");
    if (d == 0 || d > 32) throw DomainError("schema", "extension degree must be in [1, 32]");
    return ExtensionField(as_uint(member(j, "p"), "p"), static_cast<unsigned>(d));
  }
  throw DomainError("schema", "unknown field type \"" + type + "\"");
}

Json to_json(const SubsetRecord& r) {
  Json out{{"I", index_list(r.mask)},
           {"mask", r.mask},
           {"frac", r.frac.to_string()},
           {"whole", r.whole.str()},
           {"size", r.size}};
  if (r.aux) out["aux"] = *r.aux;
  return out;
}

Json to_json(const ProgressionWitness& w) {
  Json values = Json::array();
  for (const auto& v : w.values()) values.push_back(v.to_string());
  Json witnesses = Json::array();
  for (const auto& r : w.witnesses) witnesses.push_back(to_json(r));
  return Json{{"alpha", w.alpha.to_string()}, {"n0", w.n0}, {"values", values},
              {"witnesses", witnesses}};
}

ZeroSumInstance parse_zero_sum(const Json& j) {
  ZeroSumInstance z;
  z.p = as_uint(member(j, "p"), "p");
  for (auto h : int_list(member(j, "h"), "h")) {
    if (h <= 0) throw DomainError("schema", "h entries must be positive");
    z.h.push_back(static_cast<unsigned>(h));
  }
  const Json& c = member(j, "C");
  if (!c.is_array()) throw DomainError("schema", "C must be a matrix");
  for (const auto& row : c) z.c.push_back(int_list(row, "C"));
  z.targets = int_list(member(j, "targets"), "targets");
  return z;
}

Json to_json(const ZeroSumInstance& z) {
  return Json{{"p", z.p}, {"h", z.h}, {"C", z.c}, {"targets", z.targets}};
}

std::string digest(const Json& j) {
  const std::string text = j.dump();
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(text.data(), text.size(), hash, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(hash[i]);
  }
  return out.str();
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace covsum::cli
