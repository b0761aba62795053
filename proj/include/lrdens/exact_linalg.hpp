#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrdens/bigint.hpp"

namespace lrdens {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
BigInt det_bareiss(Matrix<BigInt> a);

/// Determinant modulo a prime p (p may exceed 2^32).
std::uint64_t det_mod_prime(Matrix<std::uint64_t> a, std::uint64_t p);

/// Solves the square system A x = b over Q. Throws Error(SingularSystem).
std::vector<Rational> solve_rational(Matrix<Rational> a, std::vector<Rational> b);

/// Shortest linear recurrence generating seq over Q (Berlekamp-Massey).
/// Returns c_1..c_L with seq[n] = sum c_i seq[n-i] for L <= n < seq.size().
std::vector<Rational> berlekamp_massey(const std::vector<Rational>& seq);

}  // namespace lrdens
