#pragma once

#include <cstdint>

namespace addbase {

/// Number of prime factors of n counted with multiplicity; omega(1) = 0.
constexpr unsigned omega(std::uint64_t n) {
  unsigned count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

constexpr bool is_prime(std::uint64_t n) { return n >= 2 && omega(n) == 1; }

}  // namespace addbase
