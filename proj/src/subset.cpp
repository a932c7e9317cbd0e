#include "covsum/subset.hpp"

#include <iostream>
#include <mutex>

#include "covsum/error.hpp"

namespace covsum {

Mask mask_from_indices(const std::vector<std::size_t>& indices) {
  Mask m = 0;
  for (auto s : indices) {
    if (s == 0 || s > 62) throw DomainError("bad-index", "subset index out of range");
    m |= bit_of(s);
  }
  return m;
}

std::vector<std::size_t> indices_of(Mask m) {
  std::vector<std::size_t> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
  return out;
}

std::size_t max_enumeration_k() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("COVSUM_MAX_K");
    if (env == nullptr || *env == '\0') return std::size_t{30};
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      std::cerr << "warning: ignoring malformed COVSUM_MAX_K='" << env << "'\n";
      return std::size_t{30};
    }
    if (value > 62) value = 62;
    std::cerr << "warning: COVSUM_MAX_K overrides the enumeration cap to " << value << "\n";
    return static_cast<std::size_t>(value);
  }();
  return cap;
}

void check_enumeration_cap(std::size_t k, const std::string& what) {
  if (k > max_enumeration_k()) {
    throw CapExceeded("enumeration-cap", what + ": k = " + std::to_string(k) +
                                             " exceeds the enumeration cap of " +
                                             std::to_string(max_enumeration_k()));
  }
}

}  // namespace covsum
