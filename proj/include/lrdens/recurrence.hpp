#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lrdens/bigint.hpp"
#include "lrdens/int_poly.hpp"
#include "lrdens/modarith.hpp"

namespace lrdens {

/// An integer linear recurrence u_n = a_1 u_{n-1} + ... + a_k u_{n-k} with
/// a_k != 0 and a nonzero initial window u_0..u_{k-1}. Instances can only be
/// obtained through validate() and are immutable.
class Recurrence {
 public:
  std::size_t order() const { return coeffs_.size(); }
  /// a_1..a_k.
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// u_0..u_{k-1}.
  const std::vector<BigInt>& initial() const { return initial_; }
  const BigInt& last_coeff() const { return coeffs_.back(); }

  /// f_u(X) = X^k - a_1 X^{k-1} - ... - a_k.
  IntPoly characteristic() const;

  friend Recurrence validate(std::vector<BigInt> coeffs, std::vector<BigInt> initial);
  friend bool operator==(const Recurrence&, const Recurrence&) = default;

 private:
  Recurrence(std::vector<BigInt> coeffs, std::vector<BigInt> initial)
      : coeffs_(std::move(coeffs)), initial_(std::move(initial)) {}

  std::vector<BigInt> coeffs_;
  std::vector<BigInt> initial_;
};

/// Throws Error with kind EmptyInput, ZeroLeadingCoefficient, IdenticallyZero,
/// or InvalidArgument (window length differs from the number of coefficients).
Recurrence validate(std::vector<BigInt> coeffs, std::vector<BigInt> initial);
Recurrence validate(const std::vector<long>& coeffs, const std::vector<long>& initial);
Recurrence validate(std::initializer_list<long> coeffs, std::initializer_list<long> initial);

/// Recurrence whose characteristic polynomial is the monic f.
Recurrence recurrence_from_characteristic(const IntPoly& f, std::vector<BigInt> initial);

BigInt eval_exact(const Recurrence& rec, std::uint64_t n);

/// u_0..u_{count-1}.
std::vector<BigInt> terms_exact(const Recurrence& rec, std::size_t count);

/// u_n mod m via X^n mod (f_u, m); O(k^2 log n). Throws BadModulus for m < 2.
std::uint64_t eval_mod(const Recurrence& rec, std::uint64_t n, std::uint64_t m);

/// Matrix advancing (u_n, ..., u_{n+k-1}) to (u_{n+1}, ..., u_{n+k}) mod m.
ModMatrix companion_matrix(const Recurrence& rec, std::uint64_t m);

/// (u_0, ..., u_{k-1}) mod m.
std::vector<std::uint64_t> initial_state_mod(const Recurrence& rec, std::uint64_t m);

/// (u_n, ..., u_{n+k-1}) mod m.
std::vector<std::uint64_t> state_at_mod(const Recurrence& rec, std::uint64_t n, std::uint64_t m);

}  // namespace lrdens
