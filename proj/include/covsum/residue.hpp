#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace covsum {

/// Largest period N_A the library will scan.
inline constexpr std::uint64_t kMaxPeriod = 1'000'000;

/// The class a(n) = a + nZ. The residue is kept both as presented and
/// reduced into [0, n-1]; equality uses the reduced form.
class ResidueClass {
 public:
  ResidueClass(std::int64_t a, std::uint64_t n);

  std::int64_t presented() const noexcept { return presented_; }
  std::uint64_t residue() const noexcept { return residue_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool contains(std::int64_t x) const noexcept;
  /// "a(n)" using the presented residue.
  std::string to_string() const;

  friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_;
  }

 private:
  std::int64_t presented_;
  std::uint64_t residue_;
  std::uint64_t modulus_;
};

/// Finite multiset of residue classes indexed 1..k. The period N_A is
/// computed at construction and capped at kMaxPeriod. The empty system
/// (k = 0, N_A = 1) only arises as the dual of a system of full classes.
class CoverSystem {
 public:
  CoverSystem() = default;
  explicit CoverSystem(std::vector<ResidueClass> classes);

  std::size_t size() const noexcept { return classes_.size(); }
  bool empty() const noexcept { return classes_.empty(); }
  /// 1-based access, matching the mathematical indexing.
  const ResidueClass& at(std::size_t index) const;
  const std::vector<ResidueClass>& classes() const noexcept { return classes_; }
  std::uint64_t period() const noexcept { return period_; }
  std::string to_string() const;

  CoverSystem without(std::size_t index) const;

  friend bool operator==(const CoverSystem& a, const CoverSystem& b) {
    return a.classes_ == b.classes_;
  }

 private:
  std::vector<ResidueClass> classes_;
  std::uint64_t period_ = 1;
};

/// A_0 = {a_s(n_s)}_{s=0}^k: a distinguished class plus a tail of k classes.
class AugmentedSystem {
 public:
  AugmentedSystem(ResidueClass distinguished, CoverSystem tail);

  const ResidueClass& distinguished() const noexcept { return distinguished_; }
  const CoverSystem& tail() const noexcept { return tail_; }
  /// The whole system with the distinguished class first.
  const CoverSystem& full() const noexcept { return full_; }

 private:
  ResidueClass distinguished_;
  CoverSystem tail_;
  CoverSystem full_;
};

/// w_A(x) = number of classes containing x.
std::uint64_t covering_function(const CoverSystem& system, std::int64_t x);

/// w_A over one period [0, N_A - 1].
std::vector<std::uint32_t> covering_table(const CoverSystem& system);

/// m(A) = min_x w_A(x).
std::uint64_t covering_multiplicity(const CoverSystem& system);

/// max_x w_A(x).
std::uint64_t max_covering(const CoverSystem& system);

bool is_m_cover(const CoverSystem& system, std::uint64_t m);

/// Indices t (1-based) such that removing class t leaves no m-cover.
/// Throws HypothesisViolation "not-m-cover" if the system is not an m-cover.
std::vector<std::size_t> essential_classes(const CoverSystem& system, std::uint64_t m);

/// A* = {a_s + r (n_s) : 1 <= r < n_s}; w_A + w_{A*} = k pointwise.
CoverSystem dual_system(const CoverSystem& system);

/// True iff w_A(x) <= m everywhere.
bool is_m_system(const CoverSystem& system, std::uint64_t m);

/// Replaces class `index` (1-based) a(n) by a + i n (d n), i = 0..d-1, in place.
CoverSystem split_class(const CoverSystem& system, std::size_t index, std::uint64_t factor);

struct SplitOptions {
  std::vector<std::uint64_t> factors{2, 3};
  std::uint64_t max_period = 24;
  std::size_t max_classes = 12;
};

/// Applies up to `steps` random splits (deterministic in `seed`). Each split
/// refines one class, so the covering function is unchanged. Stops early
/// when no split satisfies the limits in `options`.
CoverSystem split_class_generator(const CoverSystem& base, std::uint64_t seed, std::size_t steps,
                                  const SplitOptions& options = {});

}  // namespace covsum
