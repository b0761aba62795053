#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lrdens/bigint.hpp"
#include "lrdens/classifier.hpp"
#include "lrdens/modular_profile.hpp"
#include "lrdens/recurrence.hpp"
#include "lrdens/tvalues.hpp"

namespace lrdens {

inline constexpr std::uint64_t kDefaultWindowCap = 100'000'000;
inline constexpr std::uint64_t kDefaultProfileBitBudget = std::uint64_t{1} << 26;

struct SieveOptions {
  std::uint64_t state_cap = kDefaultStateCap;
  /// Largest period a per-prime profile may have before the sieve switches
  /// that prime to hop evaluation.
  std::uint64_t profile_bit_budget = kDefaultProfileBitBudget;
  unsigned threads = 1;
  /// Number of disjoint blocks [1, x] is split into; 0 means one per thread.
  std::size_t blocks = 0;
};

/// #A_u(x) by one gcd(n, u_n mod n) per n. The reference oracle.
std::uint64_t count_A_naive(const Recurrence& rec, std::uint64_t x);

/// #A_u(x) by marking, for every prime p <= x, the multiples n of p with
/// p | u_n. Small primes walk their period bitmap; primes whose period does
/// not fit the budget hop n -> n + p with the p-th power of the companion
/// matrix mod p.
std::uint64_t count_A_sieve(const Recurrence& rec, std::uint64_t x, const SieveOptions& opts = {});

/// Number of n in [lo, hi] with gcd(n, u_n) = 1; `primes` must contain every
/// prime <= hi.
std::uint64_t count_A_sieve_range(const Recurrence& rec, std::uint64_t lo, std::uint64_t hi,
                                  std::span<const std::uint64_t> primes, const SieveOptions& opts = {});

struct DeltaResult {
  Rational delta;
  /// lcm over p <= y of lcm(p, period_p): the period of the marked set.
  BigInt modulus;
  /// Length of the window actually scanned.
  std::uint64_t window = 0;
};

/// Exact density of C^-_{u,y} = {n : p | gcd(n, u_n) for some p <= y}.
///
/// Primes p <= y that do not divide the lcm M of the periods are independent
/// of n mod M by CRT and are folded in as exact factors (1 - 1/p); only a
/// window of length lcm(M, remaining primes) is scanned. Throws
/// ModulusCapExceeded when that window exceeds window_cap.
DeltaResult delta_y(const Recurrence& rec, std::uint64_t y, std::uint64_t window_cap = kDefaultWindowCap,
                    std::uint64_t state_cap = kDefaultStateCap);

/// Same quantity from a single window over the full modulus.
DeltaResult delta_y_full_window(const Recurrence& rec, std::uint64_t y, std::uint64_t window_cap = kDefaultWindowCap,
                                std::uint64_t state_cap = kDefaultStateCap);

struct DeltaEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
};

/// Monte Carlo estimate of delta_y from uniformly sampled n < 2^62.
DeltaEstimate delta_y_monte_carlo(const Recurrence& rec, std::uint64_t y, std::uint64_t samples, std::uint64_t seed);

/// #C^-_{u,y}(x), counted directly (preperiodic heads included).
std::uint64_t count_C_minus(const Recurrence& rec, std::uint64_t y, std::uint64_t x,
                            std::uint64_t state_cap = kDefaultStateCap);

/// prod_{p <= y} (1 - 1/p).
Rational mertens_product(std::uint64_t y);

struct TailReport {
  Rational gamma;
  /// Sum of 1/(p T_w(p)) over y < p <= pmax. Capped primes add
  /// [0, 1/(p cap)]; T = 0 adds 1/p; T = infinity adds 0.
  Rational tail_lo;
  Rational tail_hi;
  std::uint64_t resolved = 0;
  std::uint64_t capped = 0;
  std::uint64_t infinite = 0;
  std::uint64_t ramified = 0;
  /// Primes in (y, pmax] belonging to P_{w,gamma}.
  std::uint64_t members = 0;
  std::vector<TProfileEntry> entries;
};

/// Tail diagnostics for the w-part of the decomposition. Throws NotApplicable
/// when w vanishes and DegenerateW when w is degenerate.
TailReport tail_report(const Decomposition& decomp, std::uint64_t y, std::uint64_t pmax,
                       std::optional<Rational> gamma = std::nullopt, unsigned threads = 1);

struct DensityOptions {
  SieveOptions sieve;
  std::uint64_t window_cap = kDefaultWindowCap;
  std::optional<Rational> gamma;
  std::uint64_t monte_carlo_samples = 200'000;
  std::uint64_t seed = 1;
};

struct DensityReport {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t pmax = 0;
  std::uint64_t count_A = 0;
  std::uint64_t count_C = 0;
  Rational empirical_C_ratio;
  /// Set when A_u is finite; density_report then skips the sieve.
  std::optional<std::vector<BigInt>> finite_set;
  std::optional<DeltaResult> delta;
  /// Filled instead of `delta` when the window exceeds its cap.
  std::optional<DeltaEstimate> delta_estimate;
  std::optional<TailReport> tail;
  Rational mertens_product;
  /// delta_y <= count_C / x + 2 / sqrt(x).
  bool delta_bound_ok = true;
};

/// Throws Degenerate for degenerate recurrences and Inconsistency when the
/// two classifier routes disagree.
DensityReport density_report(const Recurrence& rec, std::uint64_t x, std::uint64_t y, std::uint64_t pmax,
                             const DensityOptions& opts = {});

}  // namespace lrdens
