#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>

#include "commands.hpp"
#include "covsum/generate.hpp"
#include "covsum/lemma41.hpp"
#include "covsum/naive.hpp"
#include "covsum/number_theory.hpp"
#include "covsum/poly_ops.hpp"
#include "covsum/roots.hpp"

namespace covsum::cli {

namespace {

std::vector<std::pair<std::string, Json>> load_dir(const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, Json>> out;
  if (!std::filesystem::is_directory(dir)) return out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) out.emplace_back(f.filename().string(), read_json(f));
  return out;
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw DomainError("missing-corpus", "missing corpus: " + dir.string() + " is not a directory");
  }
  Corpus corpus{load_dir(dir / "systems"), load_dir(dir / "instances")};
  if (corpus.systems.empty() && corpus.instances.empty()) {
    throw DomainError("missing-corpus", "missing corpus: no systems/*.json or instances/*.json in " +
                                            dir.string());
  }
  return corpus;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name +
         " (" + timing + "): " + r.detail;
}

namespace {

/// Outcome of a criterion body: empty failure means success.
struct Check {
  std::optional<std::string> failure;
  std::string summary;
};

Check fail(std::string why) { return Check{std::move(why), {}}; }
Check ok(std::string summary) { return Check{std::nullopt, std::move(summary)}; }

AugmentedSystem augment_at(const CoverSystem& system, std::size_t index) {
  return AugmentedSystem(system.at(index), system.without(index));
}

std::vector<std::pair<std::string, CoverSystem>> corpus_systems(const Corpus& corpus) {
  std::vector<std::pair<std::string, CoverSystem>> out;
  for (const auto& [name, json] : corpus.systems) out.emplace_back(name, parse_system(json));
  return out;
}

// 1 ---------------------------------------------------------------------

template <Ring R>
std::optional<std::string> coeff_formula(const R& ring, Rng& rng, int wanted) {
  for (int done = 0; done < wanted;) {
    const std::size_t k = 1 + uniform_below(rng, 8);
    const Mask subset = uniform_below(rng, Mask{1} << k);
    const unsigned size = subset_size(subset);
    auto f = random_poly(ring, k, size, 1 + static_cast<unsigned>(uniform_below(rng, 10)), rng);
    if (uniform_below(rng, 2) == 0) {
      f += MultiPoly<R>::multilinear(ring, k, subset, random_element(ring, rng));
    }
    if (f.degree() > static_cast<int>(size)) continue;
    if (!(coeff_by_subsets(f, subset) == f.multilinear_coeff(subset))) {
      return format_poly(f) + " at J mask " + std::to_string(subset);
    }
    ++done;
  }
  return std::nullopt;
}

Check criterion1(const Corpus&) {
  Rng rng(101);
  if (auto bad = coeff_formula(RationalField{}, rng, 200)) return fail("Q: " + *bad);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    if (auto bad = coeff_formula(PrimeField(p), rng, 200)) {
      return fail("Z_" + std::to_string(p) + ": " + *bad);
    }
  }
  return ok("1000 polynomials over Q, Z_2, Z_3, Z_5, Z_7");
}

// 2 ---------------------------------------------------------------------

Check criterion2(const Corpus&) {
  Rng rng(202);
  const IntegerRing zz;
  std::size_t checks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + uniform_below(rng, 10);
    std::vector<BigInt> c(k);
    for (auto& v : c) v = uniform_between(rng, -1000, 1000);
    for (unsigned n = 0; n < k; ++n) {
      if (escott_sum<IntegerRing>(zz, c, n) != 0) {
        return fail("nonzero sum at n = " + std::to_string(n) + ", k = " + std::to_string(k));
      }
      ++checks;
    }
  }
  return ok(std::to_string(checks) + " vanishing sums over 200 tuples");
}

// 3 ---------------------------------------------------------------------

/// C(n, k) for any integer n as n(n-1)...(n-k+1)/k!.
BigInt falling_binomial(const BigInt& n, std::uint64_t k) {
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

Check criterion3(const Corpus&) {
  std::size_t checks = 0;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uint64_t q = 1;
    for (unsigned h = 1; h <= 3; ++h) {
      q *= p;
      for (std::int64_t a = -200; a <= 200; ++a) {
        const std::uint64_t got = binom_criterion(BigInt(a), p, h).value();
        const std::uint64_t iverson = a % static_cast<std::int64_t>(q) == 0 ? 1 : 0;
        BigInt big = falling_binomial(BigInt(a - 1), q - 1) % p;
        if (big < 0) big += p;
        if (got != iverson || BigInt(got) != big) {
          return fail("a = " + std::to_string(a) + ", p = " + std::to_string(p) +
                      ", h = " + std::to_string(h));
        }
        ++checks;
      }
    }
  }
  return ok(std::to_string(checks) + " values of a, p, h");
}

// 4 ---------------------------------------------------------------------

template <Field F>
std::optional<std::string> theorem21_batch(const F& field, Rng& rng, int wanted, int& verified,
                                           std::size_t& largest_k, std::size_t& total_k) {
  const CoverShape shape{3, 13, 24, 4};
  for (int done = 0, attempts = 0; done < wanted; ++attempts) {
    if (attempts > 50 * wanted) return "could not generate enough instances";
    auto inst = random_theorem21(field, rng, shape);
    if (!inst) continue;
    if (inst->system.tail().size() > 12 || inst->system.full().period() > 24) continue;
    Theorem21Report r = verify_theorem21(*inst);
    bool sizes_ok = r.sizes.size() == r.n0;
    for (auto s : r.sizes) sizes_ok = sizes_ok && s >= r.bound;
    if (!r.theorem_holds || !sizes_ok) {
      return "fails on " + inst->system.full().to_string() + " with P = " + format_poly(inst->p);
    }
    ++done;
    ++verified;
    largest_k = std::max(largest_k, inst->system.tail().size());
    total_k += inst->system.tail().size();
  }
  return std::nullopt;
}

Check criterion4(const Corpus&) {
  Rng rng(404);
  int verified = 0;
  std::size_t largest_k = 0, total_k = 0;
  if (auto bad = theorem21_batch(RationalField{}, rng, 60, verified, largest_k, total_k)) {
    return fail("Q: " + *bad);
  }
  for (std::uint64_t p : {5, 7, 11}) {
    if (auto bad = theorem21_batch(PrimeField(p), rng, 20, verified, largest_k, total_k)) {
      return fail("Z_" + std::to_string(p) + ": " + *bad);
    }
  }
  if (verified < 100) return fail("only " + std::to_string(verified) + " instances");
  return ok(std::to_string(verified) + " instances over Q, Z_5, Z_7, Z_11 (k up to " +
            std::to_string(largest_k) + ", mean " + std::to_string(total_k / verified) + ")");
}

// 5 ---------------------------------------------------------------------

/// Existence of every target as a subset sum, with the witness rechecked.
std::optional<std::string> wu_tuple(std::uint64_t p, const std::vector<std::int64_t>& c) {
  std::vector<ResidueClass> ones(p - 1, ResidueClass(0, 1));
  AugmentedSystem aug(ResidueClass(0, 1), CoverSystem(ones));
  const Multipliers m(p - 1, 1);
  for (std::uint64_t target = 0; target < p; ++target) {
    auto w = verify_cor22(aug, m, p, c, static_cast<std::int64_t>(target));
    if (!w || w->witnesses.empty() || w->witnesses.front().aux != std::to_string(target)) {
      std::string tuple;
      for (auto v : c) tuple += std::to_string(v) + " ";
      return "p = " + std::to_string(p) + ", c = " + tuple + "target " + std::to_string(target);
    }
  }
  return std::nullopt;
}

Check criterion5(const Corpus& corpus) {
  std::size_t tuples = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    std::vector<std::int64_t> c(p - 1, 1);
    while (true) {
      if (auto bad = wu_tuple(p, c)) return fail(*bad);
      ++tuples;
      std::size_t i = 0;
      while (i < c.size() && c[i] == static_cast<std::int64_t>(p - 1)) c[i++] = 1;
      if (i == c.size()) break;
      ++c[i];
    }
  }
  Rng rng(505);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::int64_t> c(6);
    for (auto& v : c) v = 1 + static_cast<std::int64_t>(uniform_below(rng, 6));
    if (auto bad = wu_tuple(7, c)) return fail(*bad);
    ++tuples;
  }

  std::size_t progressions = 0, applicable = 0;
  for (const auto& [name, system] : corpus_systems(corpus)) {
    const std::uint64_t p = covering_multiplicity(system);
    if (p < 2 || !is_prime(p) || system.size() > 20) continue;
    for (auto index : essential_classes(system, p)) {
      AugmentedSystem aug = augment_at(system, index);
      const CoverSystem& tail = aug.tail();
      bool coprime = true;
      for (const auto& cls : tail.classes()) coprime = coprime && cls.modulus() % p != 0;
      if (!coprime) continue;
      ++applicable;
      for (int trial = 0; trial < 3; ++trial) {
        Multipliers m = random_coprime_multipliers(tail, rng);
        std::vector<std::int64_t> c(tail.size());
        for (auto& v : c) v = 1 + static_cast<std::int64_t>(uniform_below(rng, p - 1));
        for (std::uint64_t target = 0; target < p; ++target) {
          if (!verify_cor22(aug, m, p, c, static_cast<std::int64_t>(target))) {
            return fail(name + ": no progression with class " + std::to_string(index) +
                        " distinguished, target " + std::to_string(target));
          }
          ++progressions;
        }
      }
    }
  }
  if (applicable == 0) return fail("no corpus p-cover with an essential class and p not dividing the tail moduli");
  return ok(std::to_string(tuples) + " tuples; " + std::to_string(progressions) +
            " progressions on " + std::to_string(applicable) + " corpus configurations");
}

// 6 ---------------------------------------------------------------------

Check criterion6(const Corpus& corpus) {
  Rng rng(606);
  std::size_t runs = 0;
  for (std::uint64_t n = 2; n <= 8; ++n) {
    std::vector<ResidueClass> classes;
    for (std::uint64_t r = 0; r < n; ++r) classes.emplace_back(static_cast<std::int64_t>(r), n);
    CoverSystem trivial(classes);
    for (int trial = 0; trial < 20; ++trial) {
      Multipliers m = random_coprime_multipliers(trivial.without(n), rng);
      if (!cor25_failures(trivial, m).empty()) {
        return fail("residues missed for the trivial cover mod " + std::to_string(n));
      }
      ++runs;
    }
  }
  std::size_t unit_checks = 0, sweeps = 0;
  for (const auto& [name, system] : corpus_systems(corpus)) {
    const std::uint64_t m = covering_multiplicity(system);
    const std::uint64_t period = system.period();
    if (m == 0 || system.size() > 16) continue;
    auto essential = essential_classes(system, m);
    for (auto index : essential) {
      if (system.at(index).modulus() != period) continue;
      std::vector<ResidueClass> reordered;
      for (std::size_t s = 1; s <= system.size(); ++s) {
        if (s != index) reordered.push_back(system.at(s));
      }
      reordered.push_back(system.at(index));
      CoverSystem last(reordered);
      const Multipliers ones(system.size() - 1, 1);
      if (m == 1) {
        auto spectrum = fractional_spectrum(last.without(last.size()), ones);
        if (spectrum.size() != period) {
          return fail(name + ": only " + std::to_string(spectrum.size()) + " of " +
                      std::to_string(period) + " values r/N are fractional sums");
        }
        ++unit_checks;
      }
      if (!cor25_failures(last, ones).empty()) {
        return fail(name + ": some (J, r) has no I with class " + std::to_string(index) + " last");
      }
      ++sweeps;
      break;
    }
  }
  if (unit_checks == 0) return fail("no corpus 1-cover with an essential class of modulus N_A");
  return ok(std::to_string(runs) + " trivial-cover runs; " + std::to_string(unit_checks) +
            " corpus 1-covers; " + std::to_string(sweeps) + " corpus sweeps");
}

// 7 ---------------------------------------------------------------------

Check criterion7(const Corpus& corpus) {
  Rng rng(707);
  std::size_t systems = 0, polys = 0, vanishing = 0;
  for (const auto& [name, system] : corpus_systems(corpus)) {
    const std::uint64_t n = system.period();
    const std::size_t k = system.size();
    if (n > 12 || k > 14) continue;
    ++systems;
    const auto m = static_cast<unsigned>(covering_multiplicity(system));
    auto root = std::get<CyclotomicRoot>(root_of_unity({0, 1}, n));
    std::set<Mask> covering_sets;
    for (std::uint64_t z = 0; z < n; ++z) {
      Mask iz = 0;
      for (std::size_t s = 1; s <= k; ++s) {
        if (system.at(s).contains(static_cast<std::int64_t>(z))) iz |= bit_of(s);
      }
      covering_sets.insert(iz);
    }
    for (int trial = 0; trial < 50; ++trial) {
      Multipliers mult = random_coprime_multipliers(system, rng);
      auto f = random_poly(root.field, k, m, 1 + static_cast<unsigned>(uniform_below(rng, 5)), rng);
      if (trial % 2 == 0) {
        // plant a monomial on a covering set of minimal size
        for (Mask iz : covering_sets) {
          if (subset_size(iz) == m) {
            f += MultiPoly<CyclotomicField>::multilinear(root.field, k, iz,
                                                         random_nonzero(root.field, rng));
            break;
          }
        }
      } else {
        // drop the coefficients the identity reads, so both sides vanish
        MultiPoly<CyclotomicField> g(root.field, k);
        for (const auto& [e, c] : f.terms()) {
          Mask support = 0;
          bool multilinear = true;
          for (std::size_t s = 0; s < k; ++s) {
            if (e[s] > 1) multilinear = false;
            if (e[s] != 0) support |= bit_of(s + 1);
          }
          if (!multilinear || covering_sets.count(support) == 0) g.add_term(e, c);
        }
        f = g;
      }
      Lemma41Report r = verify_lemma41(system, mult, f, root.zeta);
      if (!r.identity_holds || !r.lemma_holds || !r.converse_applicable) {
        return fail(name + ": identity or vanishing equivalence fails for " + format_poly(f));
      }
      if (r.all_c_zero) ++vanishing;
      ++polys;
    }
  }
  if (systems == 0) return fail("no corpus system with N_A <= 12");
  return ok(std::to_string(systems) + " systems, " + std::to_string(polys) + " polynomials (" +
            std::to_string(vanishing) + " with every c(I_z) = 0)");
}

// 8 ---------------------------------------------------------------------

Check criterion8(const Corpus&) {
  Rng rng(808);
  std::size_t nonzero_rhs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t p = trial % 2 == 0 ? 2 : 3;
    const std::size_t l = 1 + uniform_below(rng, 2);
    const std::size_t extra = trial % 4 == 3 ? 1 : 0;
    ZeroSumInstance z = random_zero_sum(rng, p, l, 2, extra, 12);
    Thm32Report r = verify_thm32(z);
    if (!r.holds) return fail("sides differ: " + to_json(z).dump());
    if (r.rhs != 0) ++nonzero_rhs;
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t p = trial % 2 == 0 ? 2 : 3;
    const std::size_t l = 1 + uniform_below(rng, 2);
    ZeroSumInstance z = random_zero_sum(rng, p, l, 2, 1 + uniform_below(rng, 3), 12);
    if (z.k() <= z.threshold() || thm32_lhs(z) != 0) return fail("no vanishing: " + to_json(z).dump());
  }
  return ok("1000 equalities (" + std::to_string(nonzero_rhs) + " with nonzero value), 200 vanishing");
}

// 9 ---------------------------------------------------------------------

Check criterion9(const Corpus&) {
  Rng rng(909);
  const std::pair<std::uint64_t, unsigned> groups[] = {{2, 1}, {3, 1}, {2, 2}};
  for (auto [p, h] : groups) {
    const std::uint64_t q = h == 1 ? p : p * p;
    for (int trial = 0; trial < 200; ++trial) {
      Json c = Json::array();
      for (std::uint64_t s = 0; s < 2 * q - 2; ++s) c.push_back(uniform_between(rng, -20, 20));
      Json inst{{"p", p}, {"h", h}, {"c", c}, {"target", uniform_between(rng, -20, 20)}};
      RunReport r = verify_instance("c33", inst, true);
      if (r.status != Status::verified) return fail("count fails: " + inst.dump());
    }
  }
  for (std::uint64_t q : {2, 3, 4}) {
    for (int trial = 0; trial < 200; ++trial) {
      Json c = Json::array();
      for (std::uint64_t s = 0; s < 4 * q - 2; ++s) {
        c.push_back(Json::array({uniform_between(rng, -20, 20), uniform_between(rng, -20, 20)}));
      }
      Json inst{{"q", q}, {"c", c}};
      RunReport r = verify_instance("kemnitz", inst, true);
      if (r.status != Status::verified) return fail("congruence fails: " + inst.dump());
    }
  }
  return ok("600 counts for p^h in {2, 3, 4}; 600 congruences for q in {2, 3, 4}");
}

// 10 --------------------------------------------------------------------

Check criterion10(const Corpus& corpus) {
  std::size_t applicable = 0, values = 0;
  for (const auto& [name, system] : corpus_systems(corpus)) {
    const std::uint64_t m = covering_multiplicity(system);
    if (m == 0 || m > 3 || system.size() > 24) continue;
    for (std::size_t index = 1; index <= system.size(); ++index) {
      AugmentedSystem aug = augment_at(system, index);
      Rational reciprocal;
      for (const auto& cls : aug.tail().classes()) {
        reciprocal += Rational(BigInt(1), BigInt(cls.modulus()));
      }
      if (!(reciprocal < Rational(static_cast<std::int64_t>(m)))) continue;
      for (const auto& c : unit_fraction_counts(aug)) {
        if (!c.holds) {
          return fail(name + ": class " + std::to_string(index) + " distinguished, a = " +
                      std::to_string(c.a) + " has " + std::to_string(c.count) + " < " + c.bound.str());
        }
        ++values;
      }
      ++applicable;
    }
  }
  if (applicable == 0) return fail("no corpus m-cover with m <= 3 and reciprocal sum below m");
  return ok(std::to_string(values) + " values of a over " + std::to_string(applicable) +
            " corpus configurations");
}

// 11 --------------------------------------------------------------------

Check criterion11(const Corpus& corpus) {
  std::size_t checked = 0;
  for (const auto& [name, json] : corpus.instances) {
    if (!json.contains("theorem") || !json.at("theorem").is_string()) {
      return fail(name + ": no \"theorem\" key");
    }
    RunReport r = verify_instance(json.at("theorem").get<std::string>(), json, true);
    if (r.status != Status::verified) {
      return fail(name + ": " + to_string(r.status) + " " + r.payload.value("code", std::string()) +
                  r.payload.value("reason", std::string()));
    }
    if (!r.payload.value("oracle_agrees", false)) return fail(name + ": oracle disagrees");
    ++checked;
  }
  for (const auto& [name, json] : corpus.systems) {
    RunReport r = system_report(json);
    if (r.status != Status::verified) return fail(name + ": system analysis failed");
    CoverSystem system = parse_system(json);
    if (system.size() > 16) continue;
    const Multipliers ones(system.size(), 1);
    auto fast = fractional_spectrum(system, ones);
    auto slow = naive::spectrum(system, ones, [](Mask) { return true; });
    bool same = fast.size() == slow.size();
    for (const auto& [key, records] : fast) {
      auto it = slow.find(key);
      same = same && it != slow.end() && it->second.size() == records.size();
      for (std::size_t i = 0; same && i < records.size(); ++i) same = records[i].mask == it->second[i];
    }
    if (!same) return fail(name + ": fractional spectrum differs from the naive one");
    ++checked;
  }
  if (checked == 0) return fail("empty corpus");
  return ok(std::to_string(corpus.instances.size()) + " instances and " +
            std::to_string(corpus.systems.size()) + " systems agree with the naive paths");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Check(const Corpus&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table{
      {1, "coefficient formula", 10, criterion1},
      {2, "Escott identity", 5, criterion2},
      {3, "binomial criterion", 5, criterion3},
      {4, "subset-sum progressions with field values", 120, criterion4},
      {5, "prescribed subset sums mod p", 60, criterion5},
      {6, "last-class residues", 30, criterion6},
      {7, "psi identity and vanishing equivalence", 60, criterion7},
      {8, "zero-sum congruence", 60, criterion8},
      {9, "size-restricted counts and Kemnitz congruence", 120, criterion9},
      {10, "unit fraction counting bound", 60, criterion10},
      {11, "oracle agreement on the corpus", 300, criterion11},
  };
  return table;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const Corpus& corpus, const std::set<int>& selection) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!selection.empty() && selection.count(c.id) == 0) continue;
    CriterionResult r{c.id, c.name, false, 0, c.limit_seconds, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
      Check check = c.body(corpus);
      r.passed = !check.failure;
      r.detail = check.failure ? *check.failure : check.summary;
    } catch (const Error& e) {
      r.detail = "error " + e.code() + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.seconds >= r.limit_seconds) {
      r.passed = false;
      r.detail += "; over the time limit";
    }
    out.push_back(std::move(r));
  }
  return out;
}

RunReport cmd_suite(const std::filesystem::path& dir, const SuiteOptions& options) {
  RunReport report;
  report.command = "suite";
  Corpus corpus;
  try {
    corpus = load_corpus(dir);
  } catch (const Error& e) {
    report.status = Status::error;
    report.payload = Json{{"code", e.code()}, {"message", e.what()}};
    return report;
  }
  for (int id : options.criteria) {
    if (id < 1 || id > kCriteria) {
      report.status = Status::error;
      report.payload = Json{{"code", "usage"}, {"message", "criteria are numbered 1 to 11"}};
      return report;
    }
  }
  Json files = Json::array();
  for (const auto& [name, json] : corpus.systems) files.push_back(Json{{"systems/" + name, json}});
  for (const auto& [name, json] : corpus.instances) files.push_back(Json{{"instances/" + name, json}});
  report.digest = digest(files);

  Json rows = Json::array();
  std::size_t passed = 0;
  for (const auto& r : run_acceptance(corpus, options.criteria)) {
    if (r.passed) ++passed;
    rows.push_back(Json{{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"limit_seconds", r.limit_seconds},
                        {"detail", r.detail}});
  }
  report.payload = Json{{"criteria", rows}, {"passed", passed}, {"failed", rows.size() - passed}};
  report.status = passed == rows.size() ? Status::verified : Status::counterexample;
  return report;
}

}  // namespace covsum::cli
