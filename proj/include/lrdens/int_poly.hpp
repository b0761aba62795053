#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lrdens/bigint.hpp"

namespace lrdens {

/// Dense univariate polynomial over Z. Coefficients are stored in ascending
/// order with no trailing zeros; the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// Degree, -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const BigInt& lc() const { return c_.back(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  BigInt evaluate(const BigInt& x) const;
  IntPoly derivative() const;
  BigInt content() const;
  IntPoly primitive_part() const;
  /// x^n * p(1/x) for n >= degree.
  IntPoly reversal(std::size_t n) const;
  /// p(s * x).
  IntPoly scale_argument(const BigInt& s) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& s);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  std::string to_string(char var = 'X') const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// True when b divides a in Z[x]; the quotient is written to *q if non-null.
bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly* q);

/// Quotient a / b, throwing Error(Inconsistency) when the division is inexact.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// Greatest common divisor in Z[x]: primitive, with positive leading
/// coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Resultant via the Sylvester determinant (fraction-free elimination).
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// Discriminant of a polynomial of degree n >= 1:
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
BigInt discriminant(const IntPoly& f);

/// The m-th cyclotomic polynomial (memoized, thread-safe).
const IntPoly& cyclotomic(std::uint64_t m);

/// Polynomial of degree < points.size() through (x_i, y_i) with integer
/// nodes. Throws Error(Inconsistency) when the interpolant is not integral.
IntPoly interpolate_integer(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t m);

}  // namespace lrdens
