#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrdens/bigint.hpp"
#include "lrdens/int_poly.hpp"
#include "lrdens/recurrence.hpp"

namespace lrdens {

/// Rational invariants of the characteristic roots. The roots themselves are
/// never materialized: everything downstream works with f_u, its squarefree
/// part, the discriminant and the power sums s_m = sum_i alpha_i^m (roots
/// counted with multiplicity).
struct CharData {
  IntPoly f;
  IntPoly squarefree;
  bool simple_roots = false;
  /// Present only when simple_roots.
  std::optional<BigInt> discriminant;
  /// a_1..a_k; s_m obeys the same recurrence as u for m >= k.
  std::vector<BigInt> coeffs;
  /// s_0..s_{k-1} from Newton's identities.
  std::vector<BigInt> power_sum_seeds;

  std::size_t order() const { return coeffs.size(); }
  std::size_t distinct_roots() const { return static_cast<std::size_t>(squarefree.degree()); }
  const BigInt& last_coeff() const { return coeffs.back(); }

  /// s_0..s_{count-1}.
  std::vector<BigInt> power_sums(std::size_t count) const;
  std::vector<std::uint64_t> power_sums_mod(std::size_t count, std::uint64_t m) const;
};

CharData char_data(const Recurrence& rec);

/// CharData of a monic integer polynomial with nonzero constant term.
CharData char_data(const IntPoly& monic);

/// R(z) = Res_x(f0(x), f0(z x)) = prod_{i,j} (z alpha_i - alpha_j) over the
/// distinct roots; its roots are the ratios alpha_j / alpha_i.
IntPoly ratio_polynomial(const CharData& cd);

/// True iff no ratio of two distinct roots is a root of unity.
bool is_nondegenerate(const CharData& cd);

}  // namespace lrdens
