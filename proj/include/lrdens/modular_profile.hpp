#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrdens/recurrence.hpp"

namespace lrdens {

inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

/// Eventual periodic structure of (u_n mod p).
struct ModularProfile {
  std::uint64_t prime = 0;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  /// zero_mask[n mod period] for n >= preperiod.
  std::vector<bool> zero_mask;
  /// u_n mod p for n < preperiod.
  std::vector<std::uint64_t> head;

  std::vector<std::uint64_t> zeros() const;
  /// u_n == 0 (mod p), for any n >= 0.
  bool is_zero_at(std::uint64_t n) const {
    if (n < preperiod) return head[n] == 0;
    return zero_mask[n % period];
  }
};

/// Minimal preperiod and period of the state vector mod p. When a_k is a unit
/// mod p the state map is invertible, so the preperiod is 0 and the period is
/// the first return to the initial state; otherwise visited states are hashed.
/// Throws StateSpaceCapExceeded after state_cap steps, BadModulus for p < 2.
ModularProfile modular_profile(const Recurrence& rec, std::uint64_t p,
                               std::uint64_t state_cap = kDefaultStateCap);

/// As modular_profile, but reports an exceeded cap as std::nullopt.
std::optional<ModularProfile> try_modular_profile(const Recurrence& rec, std::uint64_t p, std::uint64_t state_cap);

}  // namespace lrdens
