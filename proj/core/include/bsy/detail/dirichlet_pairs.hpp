#pragma once

#include <cstdint>

namespace bsy {

template <typename F>
void for_each_prime_power_pair(const ResonatorTable& table, F&& visit) {
  // For each entry k and each prime power q = p^j dividing k, the pair
  // (m, n) = (k / q, q) contributes when k / q is in the table.
  for (const auto& e : table.entries) {
    std::uint64_t rest = e.n;
    for (std::uint64_t p = 2; p <= rest; p += (p == 2 ? 1 : 2)) {
      if (p * p > rest) p = rest;
      if (rest % p != 0) continue;
      std::uint64_t q = 1;
      while (rest % p == 0) {
        rest /= p;
        q *= p;
        const double rm = table.r(e.n / q);
        if (rm != 0.0) visit(e.n / q, q, p, rm, e.r);
      }
      if (rest == 1) break;
    }
  }
}

}  // namespace bsy
