#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "covsum/generate.hpp"
#include "covsum/lemma41.hpp"
#include "covsum/naive.hpp"
#include "covsum/roots.hpp"
#include "covsum/theorem21.hpp"

namespace covsum::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::hypothesis_violation: return "hypothesis-violation";
    case Status::counterexample: return "counterexample";
    case Status::error: return "error";
  }
  return "error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::verified: return 0;
    case Status::counterexample: return 1;
    case Status::hypothesis_violation: return 3;
    case Status::error: return 2;
  }
  return 2;
}

Json RunReport::to_json() const {
  return Json{{"command", command}, {"digest", digest}, {"status", cli::to_string(status)},
              {"payload", payload}};
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\nstatus: " << cli::to_string(status) << "\n";
  if (!digest.empty()) out << "digest: " << digest << "\n";
  if (payload.is_object()) {
    for (const auto& [key, value] : payload.items()) {
      if (key == "instance") continue;
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return out.str();
}

namespace {

Json error_payload(const std::string& code, const std::string& message) {
  return Json{{"code", code}, {"message", message}};
}

/// Output of one verifier before status assignment.
struct Outcome {
  bool holds = false;
  Json payload = Json::object();
  std::optional<bool> oracle_agrees;
};

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

Json optional_progression(const std::optional<ProgressionWitness>& w) {
  return w ? to_json(*w) : Json(nullptr);
}

std::string normalized(const CoverSystem& system) {
  std::string out = "{";
  for (std::size_t s = 1; s <= system.size(); ++s) {
    if (s > 1) out += ",";
    out += std::to_string(system.at(s).residue()) + "(" +
           std::to_string(system.at(s).modulus()) + ")";
  }
  return out + "}";
}

template <class Map>
std::optional<Rational> naive_alpha(const Map& spectrum, std::uint64_t n0, std::uint64_t period) {
  return naive::least_alpha(naive::keys_of(spectrum), n0, period);
}

bool same_alpha(const std::optional<ProgressionWitness>& fast, const std::optional<Rational>& slow) {
  if (fast.has_value() != slow.has_value()) return false;
  return !fast || fast->alpha == *slow;
}

// --- progressions with field values --------------------------------------------------

Json theorem21_json(const Theorem21Report& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(w ? index_list(*w) : Json(nullptr));
  return Json{{"alpha", r.alpha.to_string()},
              {"n0", r.n0},
              {"sizes", r.sizes},
              {"bound", r.bound},
              {"theorem_holds", r.theorem_holds},
              {"alpha_zero_valid", r.alpha_zero_valid},
              {"witnesses", witnesses}};
}

template <Field F>
bool theorem21_oracle(const Theorem21Instance<F>& inst, const Theorem21Report& r) {
  auto slow = naive::theorem21(inst);
  if (!slow) return !r.theorem_holds;
  return r.theorem_holds && r.alpha == slow->first && r.sizes == slow->second;
}

template <class Fn>
auto with_field(const Json& instance, Fn&& fn) {
  AnyField field = parse_field(member(instance, "field"));
  return std::visit(std::forward<Fn>(fn), field);
}

Outcome run_t21(const Json& in, bool oracle) {
  return with_field(in, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    AugmentedSystem aug = parse_augmented(in);
    const std::size_t k = aug.tail().size();
    Theorem21Instance<F> inst{field,
                              aug,
                              parse_multipliers(in, k),
                              parse_index_set(member(in, "J"), k),
                              parse_polynomial(field, member(in, "P"), k),
                              parse_pairs(field, member(in, "X"), k)};
    Theorem21Report r = verify_theorem21(inst);
    Outcome out{r.theorem_holds, theorem21_json(r), std::nullopt};
    if (oracle) out.oracle_agrees = theorem21_oracle(inst, r);
    return out;
  });
}

Outcome run_c21(const Json& in, bool oracle) {
  return with_field(in, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    AugmentedSystem aug = parse_augmented(in);
    const std::size_t k = aug.tail().size();
    Multipliers m = parse_multipliers(in, k);
    auto x = parse_pairs(field, member(in, "X"), k);
    Cor21Report r = verify_cor21(field, aug, m, x);
    Outcome out{r.theorem.theorem_holds,
                Json{{"point", r.point}, {"J", index_list(r.j)}, {"theorem", theorem21_json(r.theorem)}},
                std::nullopt};
    if (oracle) {
      AugmentedSystem shifted(ResidueClass(r.point, aug.distinguished().modulus()), aug.tail());
      Theorem21Instance<F> inst{field, shifted, m, r.j,
                                MultiPoly<F>::constant(field, k, field.one()), x};
      out.oracle_agrees = theorem21_oracle(inst, r.theorem);
    }
    return out;
  });
}

Outcome run_c22(const Json& in, bool oracle) {
  AugmentedSystem aug = parse_augmented(in);
  const CoverSystem& tail = aug.tail();
  const std::size_t k = tail.size();
  Multipliers m = parse_multipliers(in, k);
  const std::uint64_t p = as_uint(member(in, "p"), "p");
  auto c = int_list(member(in, "c"), "c");
  std::vector<std::int64_t> targets;
  if (in.contains("target")) {
    targets.push_back(as_int(in.at("target"), "target"));
  } else {
    for (std::uint64_t t = 0; t < p; ++t) targets.push_back(static_cast<std::int64_t>(t));
  }
  Outcome out{true, Json::object(), std::nullopt};
  if (oracle) out.oracle_agrees = true;
  Json rows = Json::array();
  const auto ip = static_cast<std::int64_t>(p);
  for (auto target : targets) {
    auto w = verify_cor22(aug, m, p, c, target);
    out.holds = out.holds && w.has_value();
    rows.push_back(Json{{"target", target}, {"progression", optional_progression(w)}});
    if (oracle) {
      auto spectrum = naive::spectrum(tail, m, [&](Mask mask) {
        std::int64_t total = 0;
        for (auto s : indices_of(mask)) total += c[s - 1];
        return ((total - target) % ip + ip) % ip == 0;
      });
      auto slow = naive_alpha(spectrum, aug.distinguished().modulus(), tail.period());
      out.oracle_agrees = *out.oracle_agrees && same_alpha(w, slow);
    }
  }
  out.payload["p"] = p;
  out.payload["results"] = rows;
  return out;
}

Outcome run_c23(const Json& in, bool oracle) {
  return with_field(in, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    AugmentedSystem aug = parse_augmented(in);
    const CoverSystem& tail = aug.tail();
    const std::size_t k = tail.size();
    Multipliers m = parse_multipliers(in, k);
    auto x = parse_pairs(field, member(in, "X"), k);
    FieldMatrix<F> a = parse_matrix(field, member(in, "A"));
    auto b = parse_vector(field, member(in, "b"));
    auto w = verify_cor23(field, aug, m, x, a, b);
    Outcome out{w.has_value(), Json{{"progression", optional_progression(w)}}, std::nullopt};
    if (oracle) {
      auto spectrum = naive::spectrum(tail, m, [&](Mask mask) {
        for (std::size_t i = 0; i < a.size(); ++i) {
          value_t<F> row = field.zero();
          for (std::size_t s = 1; s <= k; ++s) {
            row = row + a[i][s - 1] * (contains(mask, s) ? x[s - 1].second : x[s - 1].first);
          }
          if (row == b[i]) return false;
        }
        return true;
      });
      out.oracle_agrees =
          same_alpha(w, naive_alpha(spectrum, aug.distinguished().modulus(), tail.period()));
    }
    return out;
  });
}

/// Digits d with v = d + c in the prime subfield, or nothing.
template <Field F>
std::optional<std::uint64_t> prime_digit(const F& field, const value_t<F>& v) {
  for (std::uint64_t d = 0; d < field.characteristic(); ++d) {
    if (v == field.from_int(static_cast<std::int64_t>(d))) return d;
  }
  return std::nullopt;
}

Outcome run_c24(const Json& in, bool oracle) {
  return with_field(in, [&](const auto& field) -> Outcome {
    using F = std::decay_t<decltype(field)>;
    if (in.contains("M")) {
      FieldMatrix<F> mat = parse_matrix(field, in.at("M"));
      auto c = parse_element(field, member(in, "c"));
      auto v = nowhere_zero_pair(field, mat, c);
      Outcome out{v.has_value(), Json::object(), std::nullopt};
      if (v) {
        Json values = Json::array();
        for (const auto& e : *v) values.push_back(field.format(e));
        out.payload["point"] = values;
      } else {
        out.payload["point"] = nullptr;
      }
      if (oracle) {
        // recheck the returned point directly
        bool ok = v.has_value();
        std::uint64_t total = 0;
        for (std::size_t j = 0; ok && j < v->size(); ++j) {
          auto d = prime_digit(field, (*v)[j] - c);
          ok = d.has_value() && !((*v)[j] == field.zero());
          if (ok) total += *d;
        }
        ok = ok && total <= mat.size();
        for (std::size_t i = 0; ok && i < mat.size(); ++i) {
          value_t<F> dot = field.zero();
          for (std::size_t j = 0; j < mat.size(); ++j) dot = dot + mat[i][j] * (*v)[j];
          ok = !(dot == field.zero());
        }
        out.oracle_agrees = ok || !v.has_value();
      }
      return out;
    }
    AugmentedSystem aug = parse_augmented(in);
    const CoverSystem& tail = aug.tail();
    const std::size_t k = tail.size();
    Multipliers m = parse_multipliers(in, k);
    FieldMatrix<F> a = parse_matrix(field, member(in, "A"));
    auto b = parse_vector(field, member(in, "b"));
    Cor24Report r = verify_cor24(field, aug, m, a, b);
    std::vector<Rational> s_values(r.s_set.begin(), r.s_set.end());
    Outcome out{r.holds,
                Json{{"x_set", r.x_set},
                     {"s_set", rational_list(s_values)},
                     {"progression", optional_progression(r.progression)},
                     {"full_when_n0_is_n",
                      r.full_when_n0_is_n ? Json(*r.full_when_n0_is_n) : Json(nullptr)}},
                std::nullopt};
    if (oracle) {
      const std::uint64_t p = field.characteristic();
      std::uint64_t points = 1;
      for (std::size_t s = 0; s < k; ++s) points *= p;
      std::set<std::uint64_t> sums;
      for (std::uint64_t code = 0; code < points; ++code) {
        std::vector<std::uint64_t> digits(k);
        std::uint64_t rest = code, total = 0;
        for (std::size_t s = 0; s < k; ++s) {
          digits[s] = rest % p;
          total += digits[s];
          rest /= p;
        }
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
          value_t<F> row = field.zero();
          for (std::size_t s = 0; s < k; ++s) {
            row = row + a[i][s] * field.from_int(static_cast<std::int64_t>(digits[s]));
          }
          ok = !(row == b[i]);
        }
        if (ok) sums.insert(total);
      }
      auto spectrum = naive::spectrum(tail, m, [&](Mask mask) {
        return sums.count(subset_size(mask)) > 0;
      });
      const bool same_x = std::vector<std::uint64_t>(sums.begin(), sums.end()) == r.x_set;
      out.oracle_agrees = same_x && naive::keys_of(spectrum) == r.s_set &&
                          same_alpha(r.progression, naive_alpha(spectrum, aug.distinguished().modulus(),
                                                                tail.period()));
    }
    return out;
  });
}

Outcome run_c25(const Json& in, bool oracle) {
  CoverSystem system = parse_system(in);
  const std::size_t k = system.size();
  if (k < 2) throw DomainError("schema", "at least two classes are required");
  Multipliers m = parse_multipliers(in, k - 1);
  LastClassData data = check_last_class(system, m);
  const std::uint64_t period = system.period();
  CoverSystem head = system.without(k);

  // naive: is r/N hit by some I in [1, k-1] with I and K meeting in J?
  auto naive_keys = [&](Mask j) {
    return naive::keys_of(naive::spectrum(head, m, [&](Mask mask) { return (mask & data.k_set) == j; }));
  };
  auto hit = [&](const std::set<Rational>& keys, std::uint64_t r) {
    return keys.count(Rational{BigInt(r), BigInt(period)}) > 0;
  };

  Outcome out{false,
              Json{{"multiplicity", data.multiplicity}, {"K", index_list(data.k_set)}, {"N", period}},
              std::nullopt};
  if (in.contains("J") || in.contains("r")) {
    const Mask j = parse_index_set(member(in, "J"), k - 1);
    const std::uint64_t r = as_uint(member(in, "r"), "r");
    auto rec = verify_cor25(system, m, j, r);
    out.holds = rec.has_value();
    out.payload["J"] = index_list(j);
    out.payload["r"] = r;
    out.payload["witness"] = rec ? to_json(*rec) : Json(nullptr);
    if (oracle) out.oracle_agrees = rec.has_value() == hit(naive_keys(j), r);
    return out;
  }
  auto failures = cor25_failures(system, m);
  Json list = Json::array();
  for (const auto& [j, r] : failures) list.push_back(Json{{"J", index_list(j)}, {"r", r}});
  out.holds = failures.empty();
  out.payload["failures"] = list;
  if (oracle) {
    std::set<std::pair<Mask, std::uint64_t>> slow;
    Mask j = 0;
    do {
      auto keys = naive_keys(j);
      for (std::uint64_t r = 0; r < period; ++r) {
        if (!hit(keys, r)) slow.emplace(j, r);
      }
      j = (j - data.k_set) & data.k_set;
    } while (j != 0);
    out.oracle_agrees = slow == std::set<std::pair<Mask, std::uint64_t>>(failures.begin(), failures.end());
  }
  return out;
}

// --- psi identity ---------------------------------------------------------

template <Field F>
Outcome lemma41_outcome(const CoverSystem& system, const Multipliers& m, const MultiPoly<F>& f,
                        const value_t<F>& zeta, bool oracle) {
  const F& field = f.ring();
  Lemma41Report r = verify_lemma41(system, m, f, zeta);
  auto values = psi_all(system, m, f, zeta);
  const std::uint64_t n = system.period();
  Json psi = Json::array();
  for (std::uint64_t u = 0; u < n; ++u) {
    if (values[u] == field.zero()) continue;
    psi.push_back(Json{{"theta", Rational{BigInt(u), BigInt(n)}.to_string()},
                       {"value", field.format(values[u])}});
  }
  Json failures = r.identity_failures;
  Outcome out{r.lemma_holds,
              Json{{"N", n},
                   {"identity_holds", r.identity_holds},
                   {"identity_failures", failures},
                   {"all_c_zero", r.all_c_zero},
                   {"all_psi_zero", r.all_psi_zero},
                   {"forward_holds", r.forward_holds},
                   {"converse_applicable", r.converse_applicable},
                   {"converse_holds", r.converse_holds},
                   {"psi", psi}},
              std::nullopt};
  if (oracle) {
    auto slow = naive::psi(system, m, f, zeta);
    bool agree = true;
    for (std::uint64_t u = 0; u < n; ++u) {
      auto it = slow.find(Rational{BigInt(u), BigInt(n)});
      const value_t<F> expected = it == slow.end() ? field.zero() : it->second;
      agree = agree && expected == values[u];
    }
    out.oracle_agrees = agree;
  }
  return out;
}

Outcome run_l41(const Json& in, bool oracle) {
  CoverSystem system = parse_system(in);
  const std::size_t k = system.size();
  Multipliers m = parse_multipliers(in, k);
  AnyField base = parse_field(member(in, "field"));
  const std::uint64_t n = system.period();
  if (std::holds_alternative<RationalField>(base)) {
    auto f = parse_polynomial(RationalField{}, member(in, "f"), k);
    auto root = std::get<CyclotomicRoot>(root_of_unity({0, 1}, n));
    auto g = map_poly(f, root.field, [&](const Rational& c) { return root.field.embed(c); });
    return lemma41_outcome(system, m, g, root.zeta, oracle);
  }
  if (const auto* prime = std::get_if<PrimeField>(&base)) {
    auto f = parse_polynomial(*prime, member(in, "f"), k);
    auto root = std::get<FiniteFieldRoot>(root_of_unity({prime->characteristic(), 1}, n));
    auto g = map_poly(f, root.field, [&](const ModP& c) {
      return root.field.from_int(static_cast<std::int64_t>(c.value()));
    });
    return lemma41_outcome(system, m, g, root.zeta, oracle);
  }
  throw DomainError("schema", "the psi identity takes a rational or prime field");
}

// --- zero-sum family -----------------------------------------------------

Outcome run_t32(const Json& in, bool oracle) {
  ZeroSumInstance z = parse_zero_sum(in);
  Thm32Report r = verify_thm32(z);
  Outcome out{r.holds,
              Json{{"k", z.k()}, {"threshold", r.threshold}, {"lhs", r.lhs}, {"rhs", r.rhs}},
              std::nullopt};
  if (oracle) {
    out.oracle_agrees = naive::thm32_lhs(z) == r.lhs && naive::thm32_rhs(z) == r.rhs;
  }
  return out;
}

Outcome run_c33(const Json& in, bool oracle) {
  const std::uint64_t p = as_uint(member(in, "p"), "p");
  const auto h = static_cast<unsigned>(as_uint(member(in, "h"), "h"));
  auto c = int_list(member(in, "c"), "c");
  const std::int64_t target = as_int(member(in, "target"), "target");
  Cor33Report r = cor33_ii_check(p, h, c, target);
  Outcome out{r.holds, Json{{"count", r.count}, {"coefficient", r.coefficient}}, std::nullopt};
  if (oracle) {
    std::int64_t q = 1;
    for (unsigned i = 0; i < h; ++i) q *= static_cast<std::int64_t>(p);
    const auto n = c.size();
    std::uint64_t count = 0;
    for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
      if (std::popcount(mask) != q - 1) continue;
      std::int64_t total = -target;
      for (std::size_t s = 0; s < n; ++s) {
        if (mask >> s & 1) total += c[s];
      }
      if (total % q == 0) ++count;
    }
    // elementary symmetric e_{q-1} mod p, signed by (-1)^(q-1)
    const auto ip = static_cast<std::int64_t>(p);
    std::vector<std::int64_t> e(n + 1, 0);
    e[0] = 1;
    for (auto v : c) {
      for (std::size_t d = n; d >= 1; --d) e[d] = ((e[d] + e[d - 1] * (v % ip)) % ip + ip) % ip;
    }
    std::int64_t coefficient = e[static_cast<std::size_t>(n - (q - 1))];
    if ((n - (q - 1)) % 2 == 1) coefficient = (ip - coefficient) % ip;
    out.oracle_agrees = count == r.count && static_cast<std::uint64_t>(coefficient) == r.coefficient;
  }
  return out;
}

Outcome run_kemnitz(const Json& in, bool oracle) {
  const std::uint64_t q = as_uint(member(in, "q"), "q");
  std::vector<std::pair<std::int64_t, std::int64_t>> c;
  for (const auto& pair : member(in, "c")) {
    auto v = int_list(pair, "c");
    if (v.size() != 2) throw DomainError("schema", "each c_s is a pair");
    c.emplace_back(v[0], v[1]);
  }
  KemnitzReport r = kemnitz_congruence(q, c);
  Outcome out{r.holds,
              Json{{"q", r.q}, {"p", r.p}, {"count_q", r.count_q}, {"count_3q", r.count_3q}},
              std::nullopt};
  if (oracle) {
    const auto iq = static_cast<std::int64_t>(q);
    std::uint64_t count_q = 0, count_3q = 0;
    for (Mask mask = 0; mask < (Mask{1} << c.size()); ++mask) {
      std::int64_t x = 0, y = 0;
      for (std::size_t s = 0; s < c.size(); ++s) {
        if (mask >> s & 1) {
          x += c[s].first;
          y += c[s].second;
        }
      }
      if (x % iq != 0 || y % iq != 0) continue;
      const auto size = std::popcount(mask);
      if (size == iq) ++count_q;
      if (size == 3 * iq) ++count_3q;
    }
    out.oracle_agrees = count_q == r.count_q && count_3q == r.count_3q;
  }
  return out;
}

Outcome run_s10count(const Json& in, bool oracle) {
  AugmentedSystem aug = parse_augmented(in);
  const std::uint64_t m = covering_multiplicity(aug.full());
  const std::uint64_t n0 = aug.distinguished().modulus();
  std::vector<UnitFractionCount> counts;
  if (in.contains("a")) {
    counts.push_back(count_unit_fraction_subsets(aug, as_uint(in.at("a"), "a")));
  } else {
    counts = unit_fraction_counts(aug);
  }
  Outcome out{true, Json{{"multiplicity", m}, {"n0", n0}}, std::nullopt};
  Json rows = Json::array();
  for (const auto& c : counts) {
    out.holds = out.holds && c.holds;
    rows.push_back(Json{{"a", c.a}, {"count", c.count}, {"bound", c.bound.str()}, {"holds", c.holds}});
  }
  out.payload["counts"] = rows;
  if (oracle) {
    std::uint64_t limit = m * n0;
    for (const auto& c : counts) limit = std::max(limit, c.a + 1);
    auto slow = naive::unit_fraction_counts(aug, limit);
    bool agree = true;
    for (const auto& c : counts) agree = agree && slow[c.a] == c.count;
    out.oracle_agrees = agree;
  }
  return out;
}

using Runner = std::function<Outcome(const Json&, bool)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"t21", run_t21}, {"c21", run_c21}, {"c22", run_c22},         {"c23", run_c23},
      {"c24", run_c24}, {"c25", run_c25}, {"l41", run_l41},         {"t32", run_t32},
      {"c33", run_c33}, {"kemnitz", run_kemnitz}, {"s10count", run_s10count}};
  return table;
}

/// Maps library and JSON exceptions onto report statuses.
template <class Body>
RunReport guarded(const std::string& command, const Json& instance, Body&& body) {
  RunReport report;
  report.command = command;
  report.digest = digest(instance);
  try {
    body(report);
  } catch (const HypothesisViolation& e) {
    report.status = Status::hypothesis_violation;
    report.payload = error_payload(e.code(), e.what());
  } catch (const Error& e) {
    report.status = Status::error;
    report.payload = error_payload(e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    report.status = Status::error;
    report.payload = error_payload("schema", e.what());
  } catch (const std::out_of_range& e) {
    report.status = Status::error;
    report.payload = error_payload("schema", e.what());
  }
  return report;
}

RunReport parse_failure(const std::string& command, const Error& e) {
  RunReport report;
  report.command = command;
  report.status = Status::error;
  report.payload = error_payload(e.code(), e.what());
  return report;
}

}  // namespace

RunReport system_report(const Json& instance) {
  return guarded("system", instance, [&](RunReport& report) {
    CoverSystem system = parse_system(instance);
    if (system.size() == 0) throw DomainError("schema", "the system has no classes");
    const std::uint64_t m = covering_multiplicity(system);
    Json table = covering_table(system);
    Json essential = Json::array();
    if (m >= 1) {
      for (auto s : essential_classes(system, m)) essential.push_back(s);
    }
    CoverSystem dual = dual_system(system);
    const std::uint64_t top = max_covering(system);
    report.status = Status::verified;
    report.payload = Json{{"system", system.to_string()},
                          {"k", system.size()},
                          {"period", system.period()},
                          {"multiplicity", m},
                          {"covering_table", table},
                          {"essential", essential},
                          {"dual", normalized(dual)},
                          {"dual_multiplicity", dual.size() ? covering_multiplicity(dual) : 0},
                          {"max_covering", top},
                          {"m_system", top}};
  });
}

RunReport cmd_system(const std::filesystem::path& path) {
  Json instance;
  try {
    instance = read_json(path);
  } catch (const Error& e) {
    return parse_failure("system", e);
  }
  return system_report(instance);
}

RunReport verify_instance(const std::string& theorem, const Json& instance, bool oracle) {
  return guarded("verify " + theorem, instance, [&](RunReport& report) {
    auto it = runners().find(theorem);
    if (it == runners().end()) throw DomainError("usage", "unknown theorem \"" + theorem + "\"");
    Outcome outcome = it->second(instance, oracle);
    report.payload = std::move(outcome.payload);
    const bool agrees = outcome.oracle_agrees.value_or(true);
    if (outcome.oracle_agrees) report.payload["oracle_agrees"] = *outcome.oracle_agrees;
    report.payload["holds"] = outcome.holds;
    report.status = outcome.holds && agrees ? Status::verified : Status::counterexample;
    if (report.status == Status::counterexample) {
      report.payload["reason"] = outcome.holds ? "oracle-disagreement" : "statement-fails";
      report.payload["instance"] = instance;
    }
  });
}

RunReport cmd_verify(const std::string& theorem, const std::filesystem::path& path, bool oracle) {
  Json instance;
  try {
    instance = read_json(path);
  } catch (const Error& e) {
    return parse_failure("verify " + theorem, e);
  }
  return verify_instance(theorem, instance, oracle);
}

// --- generation ---------------------------------------------------------

namespace {

template <Field F>
Json theorem21_instance_json(const Theorem21Instance<F>& inst, const Json& field_json) {
  Json out{{"theorem", "t21"}, {"field", field_json}};
  Json aug = to_json(inst.system);
  out["a0"] = aug["a0"];
  out["classes"] = aug["classes"];
  out["multipliers"] = inst.multipliers;
  out["J"] = index_list(inst.j);
  out["P"] = format_poly(inst.p);
  Json pairs = Json::array();
  for (const auto& [b, c] : inst.x) pairs.push_back(Json::array({inst.field.format(b), inst.field.format(c)}));
  out["X"] = pairs;
  return out;
}

}  // namespace

Json cmd_generate(const GenerateOptions& o) {
  Rng rng(o.seed);
  if (o.kind == "m-cover") {
    CoverShape shape{o.multiplicity, o.max_classes, o.max_period, o.split_steps};
    CoverSystem cover = random_m_cover(rng, shape);
    const std::uint64_t m = covering_multiplicity(cover);
    if (m < o.multiplicity || cover.size() > o.max_classes || cover.period() > o.max_period) {
      throw DomainError("infeasible", "generated cover failed validation");
    }
    Json out{{"kind", "m-cover"}, {"seed", o.seed}, {"multiplicity", m}};
    out["classes"] = to_json(cover)["classes"];
    return out;
  }
  if (o.kind == "zero-sum") {
    ZeroSumInstance z = random_zero_sum(rng, o.p, o.l, o.max_h, o.extra);
    validate(z);
    Json out{{"theorem", "t32"}, {"seed", o.seed}};
    const Json body = to_json(z);
    for (const auto& [key, value] : body.items()) out[key] = value;
    return out;
  }
  if (o.kind == "t21-instance") {
    CoverShape shape{o.multiplicity, o.max_classes, o.max_period, o.split_steps};
    Json out;
    auto emit = [&](const auto& field, const Json& field_json) {
      auto inst = random_theorem21(field, rng, shape);
      if (!inst) throw DomainError("infeasible", "no compatible cover for this field");
      check_theorem21(*inst);
      out = theorem21_instance_json(*inst, field_json);
    };
    if (o.field == "rational") {
      emit(RationalField{}, Json{{"type", "rational"}});
    } else if (o.field == "prime") {
      emit(PrimeField(o.p), Json{{"type", "prime"}, {"p", o.p}});
    } else {
      throw DomainError("usage", "field must be rational or prime");
    }
    out["seed"] = o.seed;
    return out;
  }
  throw DomainError("usage", "unknown kind \"" + o.kind + "\"");
}

}  // namespace covsum::cli
