#include "covsum/generate.hpp"

#include <numeric>

#include "covsum/error.hpp"

namespace covsum {

namespace {

CoverSystem make(std::initializer_list<std::pair<std::int64_t, std::uint64_t>> classes) {
  std::vector<ResidueClass> out;
  for (auto [a, n] : classes) out.emplace_back(a, n);
  return CoverSystem(std::move(out));
}

}  // namespace

CoverSystem erdos_cover() { return make({{0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12}}); }

std::vector<CoverSystem> base_exact_covers() {
  return {
      make({{0, 1}}),
      make({{0, 2}, {1, 2}}),
      make({{0, 3}, {1, 3}, {2, 3}}),
      make({{0, 2}, {1, 4}, {3, 4}}),
      make({{1, 2}, {0, 3}, {2, 6}, {4, 6}}),
      make({{0, 2}, {1, 4}, {3, 8}, {7, 8}}),
  };
}

CoverSystem random_m_cover(Rng& rng, const CoverShape& shape) {
  const auto bases = base_exact_covers();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<ResidueClass> classes;
    std::uint64_t period = 1;
    for (std::uint64_t copy = 0; copy < shape.multiplicity; ++copy) {
      const CoverSystem& base = bases[uniform_below(rng, bases.size())];
      auto shift = static_cast<std::int64_t>(uniform_below(rng, base.period()));
      for (const auto& c : base.classes()) {
        classes.emplace_back(static_cast<std::int64_t>(c.residue()) + shift, c.modulus());
      }
      period = std::lcm(period, base.period());
    }
    if (classes.size() > shape.max_classes || period > shape.max_period) continue;
    SplitOptions options;
    options.max_classes = shape.max_classes;
    options.max_period = shape.max_period;
    CoverSystem cover = split_class_generator(CoverSystem(std::move(classes)), rng(),
                                              uniform_below(rng, shape.split_steps + 1), options);
    if (!is_m_cover(cover, shape.multiplicity)) {
      throw Error("internal", "generated system lost its covering multiplicity");
    }
    return cover;
  }
  throw DomainError("infeasible", "no cover of multiplicity " +
                                      std::to_string(shape.multiplicity) + " fits the limits");
}

AugmentedSystem random_tight_augmentation(const CoverSystem& cover, Rng& rng) {
  auto table = covering_table(cover);
  const std::uint64_t m = covering_multiplicity(cover);
  std::vector<std::pair<std::size_t, std::int64_t>> choices;
  for (std::size_t s = 1; s <= cover.size(); ++s) {
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (table[x] == m && cover.at(s).contains(static_cast<std::int64_t>(x))) {
        choices.emplace_back(s, static_cast<std::int64_t>(x));
        break;
      }
    }
  }
  auto [index, point] = choices[uniform_below(rng, choices.size())];
  return AugmentedSystem(ResidueClass(point, cover.at(index).modulus()), cover.without(index));
}

Multipliers random_coprime_multipliers(const CoverSystem& system, Rng& rng, std::int64_t bound) {
  Multipliers out;
  for (const auto& c : system.classes()) {
    while (true) {
      std::int64_t m = uniform_between(rng, -bound, bound);
      if (std::gcd(static_cast<std::uint64_t>(m < 0 ? -m : m), c.modulus()) == 1) {
        out.push_back(m);
        break;
      }
    }
  }
  return out;
}

ZeroSumInstance random_zero_sum(Rng& rng, std::uint64_t p, std::size_t l, unsigned max_h,
                                std::size_t extra, std::size_t max_k) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ZeroSumInstance inst;
    inst.p = p;
    for (std::size_t t = 0; t < l; ++t) {
      inst.h.push_back(1 + static_cast<unsigned>(uniform_below(rng, max_h)));
    }
    const std::uint64_t k = inst.threshold() + extra;
    if (k > max_k) continue;
    for (std::uint64_t s = 0; s < k; ++s) {
      std::vector<std::int64_t> row;
      for (std::size_t t = 0; t < l; ++t) row.push_back(uniform_between(rng, -20, 20));
      inst.c.push_back(std::move(row));
    }
    for (std::size_t t = 0; t < l; ++t) inst.targets.push_back(uniform_between(rng, -20, 20));
    return inst;
  }
  throw DomainError("infeasible", "no zero-sum instance fits k <= " + std::to_string(max_k));
}

}  // namespace covsum
