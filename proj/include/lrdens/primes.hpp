#pragma once

#include <cstdint>
#include <vector>

namespace lrdens {

/// All primes <= n, ascending (plain Eratosthenes over odd numbers).
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  out.push_back(2);
  // composite[i] describes 2i + 1.
  std::vector<bool> composite((n + 1) / 2, false);
  for (std::uint64_t i = 1; 2 * i + 1 <= n; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= n; q += 2 * p) composite[q / 2] = true;
  }
  return out;
}

}  // namespace lrdens
