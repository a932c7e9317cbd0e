#include "covsum/number_theory.hpp"
#include "covsum/theorem21.hpp"

namespace covsum {

std::optional<ProgressionWitness> verify_cor22(const AugmentedSystem& system,
                                               const Multipliers& multipliers, std::uint64_t p,
                                               const std::vector<std::int64_t>& c_values,
                                               std::int64_t target) {
  const CoverSystem& tail = system.tail();
  const std::size_t k = tail.size();
  if (!is_prime(p)) throw DomainError("not-prime", std::to_string(p) + " is not prime");
  if (c_values.size() != k) throw DomainError("length-mismatch", "expected k values c_s");
  FractionalSums sums(tail, multipliers);
  require_essential_distinguished(system, p);
  const auto ip = static_cast<std::int64_t>(p);
  std::vector<std::int64_t> c(k);
  for (std::size_t s = 1; s <= k; ++s) {
    require(tail.at(s).modulus() % p != 0, "characteristic-divides-modulus",
            "p divides n_" + std::to_string(s));
    c[s - 1] = ((c_values[s - 1] % ip) + ip) % ip;
    require(c[s - 1] != 0, "zero-coefficient", "c_" + std::to_string(s) + " is 0 mod p");
  }
  const std::int64_t goal = ((target % ip) + ip) % ip;
  check_enumeration_cap(k, "corollary scan");
  std::int64_t running = 0;
  auto least = least_witnesses(sums, full_mask(k), [&](Mask mask, std::size_t changed) {
    if (changed != 0) {
      running += contains(mask, changed) ? c[changed - 1] : ip - c[changed - 1];
      running %= ip;
    }
    return running == goal;
  });
  auto witness = find_progression(sums, least, system.distinguished().modulus());
  if (witness) {
    for (auto& rec : witness->witnesses) {
      std::int64_t total = 0;
      for (auto s : indices_of(rec.mask)) total += c[s - 1];
      rec.aux = std::to_string(total % ip);
    }
  }
  return witness;
}

}  // namespace covsum
