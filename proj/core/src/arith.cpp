#include "bsy/arith.hpp"

#include <algorithm>
#include <cmath>

#include "bsy/error.hpp"

namespace bsy {

namespace {

constexpr std::uint64_t kSegment = 1 << 16;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  require(hi < (std::uint64_t{1} << 40), ErrorKind::InvalidArgument, "sieve bound too large");
  std::vector<std::uint64_t> out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi < lo) return out;
  const auto base = small_primes(isqrt(hi));
  std::vector<char> composite;
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    const std::uint64_t end = std::min(hi, start + kSegment - 1);
    composite.assign(end - start + 1, 0);
    for (const std::uint64_t p : base) {
      if (p * p > end) break;
      std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
      for (std::uint64_t j = first; j <= end; j += p) composite[j - start] = 1;
    }
    for (std::uint64_t n = start; n <= end; ++n) {
      if (!composite[n - start]) out.push_back(n);
    }
    if (end == hi) break;
  }
  return out;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? p : 0;
    }
  }
  return n;
}

double von_mangoldt(std::uint64_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "von_mangoldt requires n >= 1");
  const std::uint64_t p = prime_power_base(n);
  return p == 0 ? 0.0 : std::log(static_cast<double>(p));
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

int distinct_prime_factors(std::uint64_t n) {
  int count = 0;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ++count;
  return count;
}

int mobius(std::uint64_t n) {
  require(n >= 1, ErrorKind::InvalidArgument, "mobius requires n >= 1");
  if (!is_squarefree(n)) return 0;
  return distinct_prime_factors(n) % 2 == 0 ? 1 : -1;
}

}  // namespace bsy
