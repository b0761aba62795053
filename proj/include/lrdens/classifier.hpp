#pragma once

#include <cstdint>
#include <vector>

#include "lrdens/bigint.hpp"
#include "lrdens/char_data.hpp"
#include "lrdens/int_poly.hpp"
#include "lrdens/recurrence.hpp"

namespace lrdens {

/// Integer splitting scale * u_n = n * v_n + w_n.
///
/// w carries the constant terms g_i(0) of the generalized power sum and has
/// the squarefree part f0 as characteristic polynomial; v carries
/// (g_i(n) - g_i(0)) / n and has f_u / f0. `scale` is the least common
/// denominator of the rational seeds, so both sequences are integral. It can
/// differ from the algebraic-integer denominator of the g_i (Fibonacci gives
/// 1 here, 5 there); w being zero does not depend on it.
struct Decomposition {
  BigInt scale = 1;
  IntPoly w_char;
  std::vector<BigInt> w_init;
  IntPoly v_char;
  std::vector<BigInt> v_init;
  bool w_is_zero = false;

  std::vector<BigInt> w_terms(std::size_t count) const;
  std::vector<BigInt> v_terms(std::size_t count) const;
};

/// Throws Error(SingularSystem) only on an internal bug.
Decomposition decompose(const Recurrence& rec, const CharData& cd);

/// (u_n / n)_{n >= 1} is a linear recurrence iff w vanishes.
inline bool is_un_over_n_recurrence(const Decomposition& d) { return d.w_is_zero; }

/// Independent test: fit the shortest rational recurrence to u_n / n on
/// n = 1..4k (Berlekamp-Massey), require order <= k, then confirm that
/// u_n - n t_n vanishes on 3k + 1 further terms.
bool un_over_n_recurrence_by_fit(const Recurrence& rec);

/// A_u when w vanishes: n | scale * u_n for all n, so every element divides
/// `scale`. Sorted ascending. Throws NotFiniteCase when w is nonzero.
std::vector<BigInt> enumerate_finite_A(const Recurrence& rec, const Decomposition& d);

/// Terms 0..count-1 of the sequence with monic characteristic polynomial f and
/// the given seeds; zero-degree f yields the zero sequence.
std::vector<BigInt> extend_sequence(const IntPoly& f, const std::vector<BigInt>& init, std::size_t count);

}  // namespace lrdens
