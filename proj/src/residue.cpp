#include "covsum/residue.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "covsum/error.hpp"
#include "covsum/number_theory.hpp"

namespace covsum {

ResidueClass::ResidueClass(std::int64_t a, std::uint64_t n) : presented_(a), modulus_(n) {
  if (n == 0) throw DomainError("bad-modulus", "residue class modulus must be positive");
  if (n > kMaxPeriod) {
    throw CapExceeded("modulus-cap", "modulus exceeds " + std::to_string(kMaxPeriod));
  }
  auto sn = static_cast<std::int64_t>(n);
  std::int64_t r = a % sn;
  if (r < 0) r += sn;
  residue_ = static_cast<std::uint64_t>(r);
}

bool ResidueClass::contains(std::int64_t x) const noexcept {
  auto sn = static_cast<std::int64_t>(modulus_);
  std::int64_t r = x % sn;
  if (r < 0) r += sn;
  return static_cast<std::uint64_t>(r) == residue_;
}

std::string ResidueClass::to_string() const {
  return std::to_string(presented_) + "(" + std::to_string(modulus_) + ")";
}

CoverSystem::CoverSystem(std::vector<ResidueClass> classes) : classes_(std::move(classes)) {
  for (const auto& c : classes_) period_ = lcm_capped(period_, c.modulus(), kMaxPeriod);
}

const ResidueClass& CoverSystem::at(std::size_t index) const {
  if (index == 0 || index > classes_.size()) {
    throw DomainError("bad-index", "class index " + std::to_string(index) + " out of range");
  }
  return classes_[index - 1];
}

std::string CoverSystem::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) out += ",";
    out += classes_[i].to_string();
  }
  return out + "}";
}

CoverSystem CoverSystem::without(std::size_t index) const {
  at(index);
  std::vector<ResidueClass> rest = classes_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index - 1));
  return CoverSystem(std::move(rest));
}

AugmentedSystem::AugmentedSystem(ResidueClass distinguished, CoverSystem tail)
    : distinguished_(distinguished), tail_(std::move(tail)), full_([&] {
        std::vector<ResidueClass> all{distinguished_};
        all.insert(all.end(), tail_.classes().begin(), tail_.classes().end());
        return CoverSystem(std::move(all));
      }()) {}

std::uint64_t covering_function(const CoverSystem& system, std::int64_t x) {
  return static_cast<std::uint64_t>(
      std::count_if(system.classes().begin(), system.classes().end(),
                    [x](const ResidueClass& c) { return c.contains(x); }));
}

std::vector<std::uint32_t> covering_table(const CoverSystem& system) {
  std::vector<std::uint32_t> w(system.period(), 0);
  for (const auto& c : system.classes()) {
    for (std::uint64_t x = c.residue(); x < w.size(); x += c.modulus()) ++w[x];
  }
  return w;
}

std::uint64_t covering_multiplicity(const CoverSystem& system) {
  auto w = covering_table(system);
  return *std::min_element(w.begin(), w.end());
}

std::uint64_t max_covering(const CoverSystem& system) {
  auto w = covering_table(system);
  return *std::max_element(w.begin(), w.end());
}

bool is_m_cover(const CoverSystem& system, std::uint64_t m) {
  return covering_multiplicity(system) >= m;
}

std::vector<std::size_t> essential_classes(const CoverSystem& system, std::uint64_t m) {
  auto w = covering_table(system);
  if (*std::min_element(w.begin(), w.end()) < m) {
    throw HypothesisViolation("not-m-cover", "system is not an m-cover for m = " +
                                                 std::to_string(m));
  }
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t <= system.size(); ++t) {
    const auto& c = system.at(t);
    for (std::uint64_t x = c.residue(); x < w.size(); x += c.modulus()) {
      if (w[x] - 1 < m) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

CoverSystem dual_system(const CoverSystem& system) {
  std::vector<ResidueClass> out;
  for (const auto& c : system.classes()) {
    for (std::uint64_t r = 1; r < c.modulus(); ++r) {
      out.emplace_back(c.presented() + static_cast<std::int64_t>(r), c.modulus());
    }
  }
  return CoverSystem(std::move(out));
}

bool is_m_system(const CoverSystem& system, std::uint64_t m) { return max_covering(system) <= m; }

CoverSystem split_class(const CoverSystem& system, std::size_t index, std::uint64_t factor) {
  const auto& target = system.at(index);
  if (factor == 0) throw DomainError("bad-factor", "split factor must be positive");
  std::vector<ResidueClass> out;
  for (std::size_t s = 1; s <= system.size(); ++s) {
    if (s != index) {
      out.push_back(system.at(s));
      continue;
    }
    for (std::uint64_t i = 0; i < factor; ++i) {
      out.emplace_back(target.presented() + static_cast<std::int64_t>(i * target.modulus()),
                       target.modulus() * factor);
    }
  }
  return CoverSystem(std::move(out));
}

CoverSystem split_class_generator(const CoverSystem& base, std::uint64_t seed, std::size_t steps,
                                  const SplitOptions& options) {
  std::mt19937_64 rng(seed);
  CoverSystem current = base;
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<std::pair<std::size_t, std::uint64_t>> candidates;
    for (std::size_t s = 1; s <= current.size(); ++s) {
      for (auto d : options.factors) {
        if (current.size() + d - 1 > options.max_classes) continue;
        std::uint64_t n = current.at(s).modulus() * d;
        if (n > options.max_period) continue;
        if (std::lcm(current.period(), n) > options.max_period) continue;
        candidates.emplace_back(s, d);
      }
    }
    if (candidates.empty()) break;
    auto [index, factor] = candidates[rng() % candidates.size()];
    current = split_class(current, index, factor);
  }
  return current;
}

}  // namespace covsum
