#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lrdens/bigint.hpp"
#include "lrdens/char_data.hpp"

namespace lrdens {

/// T_u(p): the largest T such that p divides none of the nonzero norms of
/// det(alpha_i^{x_j}) with x_1 = 0 and 1 <= x_2, ..., x_k <= T.
struct TValue {
  enum class Kind { Finite, Infinite, CappedAtLeast };

  Kind kind = Kind::Finite;
  /// T for Finite, the searched cap for CappedAtLeast.
  std::uint64_t value = 0;
  /// p divides the discriminant; the D^2 test stands in for the norm test
  /// there without the unramified guarantee.
  bool ramified = false;

  static TValue finite(std::uint64_t t) { return {Kind::Finite, t, false}; }
  static TValue infinite() { return {Kind::Infinite, 0, false}; }
  static TValue capped(std::uint64_t cap) { return {Kind::CappedAtLeast, cap, false}; }

  friend bool operator==(const TValue&, const TValue&) = default;
};

inline constexpr std::uint64_t kDefaultTCap = 1000;

/// D_u(0, x_2, ..., x_k)^2 as det(s_{x_i + x_j}), the Gram matrix A^T A of
/// A = (alpha_i^{x_j}). Every permutation of the roots flips at most the sign
/// of D, so D^2 is a rational integer. Throws NotSimpleRoots when f_u has a
/// repeated root, InvalidArgument when the exponent count is not k - 1.
BigInt gram_det_squared(const CharData& cd, std::span<const std::uint64_t> exponents);

/// Scans shells T = 1..cap of strictly increasing exponent tuples with
/// largest entry T. A tuple is a hit when p | D^2 and D^2 != 0; the first hit
/// in shell T gives Finite(T - 1). Throws NotSimpleRoots, BadPrime (p | a_k).
TValue t_value(const CharData& cd, std::uint64_t p, std::uint64_t cap = kDefaultTCap);

/// Smallest integer c with c >= p^gamma, for rational 0 < gamma < 1.
std::uint64_t gamma_threshold(std::uint64_t p, const Rational& gamma);

struct TProfileEntry {
  std::uint64_t prime = 0;
  std::uint64_t threshold = 0;
  TValue value;
  bool member = false;
};

/// Primes p <= pmax with p not dividing a_k, with membership in
/// P_{u,gamma} = {p : T_u(p) < p^gamma}.
struct TProfile {
  Rational gamma;
  std::vector<TProfileEntry> entries;

  std::vector<std::uint64_t> members() const;
};

Rational default_gamma(std::size_t order);

/// Each prime is searched only up to ceil(p^gamma), which decides membership.
TProfile t_profile(const CharData& cd, std::uint64_t pmax, const Rational& gamma, unsigned threads = 1);

}  // namespace lrdens
