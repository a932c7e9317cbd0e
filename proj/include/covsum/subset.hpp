#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace covsum {

/// Subset of [1, k]: index s is bit s-1.
using Mask = std::uint64_t;

inline constexpr Mask bit_of(std::size_t index) { return Mask{1} << (index - 1); }
inline unsigned subset_size(Mask m) { return static_cast<unsigned>(std::popcount(m)); }
inline bool contains(Mask m, std::size_t index) { return (m & bit_of(index)) != 0; }
/// True when m names an index above k.
inline bool mask_exceeds(Mask m, std::size_t k) { return k < 64 && (m >> k) != 0; }
/// [1, k] as a mask.
inline Mask full_mask(std::size_t k) { return k == 0 ? 0 : (k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1); }

/// Bitmask from 1-based indices.
Mask mask_from_indices(const std::vector<std::size_t>& indices);
std::vector<std::size_t> indices_of(Mask m);

/// Enumeration cap on k for 2^k scans: 30, or COVSUM_MAX_K when set (a
/// warning is printed to stderr once). Never above 62.
std::size_t max_enumeration_k();

/// Throws CapExceeded "enumeration-cap" when k exceeds max_enumeration_k().
void check_enumeration_cap(std::size_t k, const std::string& what);

/// Visits every subset of `universe` in reflected Gray-code order starting
/// at the empty set. `visit(mask, changed)` gets the index (1-based) of the
/// element toggled to reach `mask`, or 0 for the first visit.
template <class Visit>
void for_each_subset_gray(Mask universe, Visit&& visit) {
  std::vector<std::size_t> positions;
  for (Mask rest = universe; rest != 0; rest &= rest - 1) {
    positions.push_back(static_cast<std::size_t>(std::countr_zero(rest)) + 1);
  }
  Mask current = 0;
  visit(current, std::size_t{0});
  const std::uint64_t total = std::uint64_t{1} << positions.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t index = positions[static_cast<std::size_t>(std::countr_zero(step))];
    current ^= bit_of(index);
    visit(current, index);
  }
}

/// Visits every subset of `universe` in increasing numeric order.
template <class Visit>
void for_each_subset_ordered(Mask universe, Visit&& visit) {
  Mask sub = 0;
  while (true) {
    visit(sub);
    if (sub == universe) break;
    sub = (sub - universe) & universe;
  }
}

}  // namespace covsum
