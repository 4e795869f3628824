#pragma once

#include <cstdint>
#include <vector>

namespace bsy {

/// Primes p with lo <= p <= hi by a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Lambda(n): log p when n = p^k, k >= 1, otherwise 0.
double von_mangoldt(std::uint64_t n);

/// The prime p with n = p^k, or 0 when n is not a prime power.
std::uint64_t prime_power_base(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// Number of distinct prime factors.
int distinct_prime_factors(std::uint64_t n);

/// Moebius function.
int mobius(std::uint64_t n);

}  // namespace bsy
