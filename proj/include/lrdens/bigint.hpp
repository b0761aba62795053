#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lrdens {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Rationals are serialized as "num/den" in lowest terms, integers as "n/1".
inline std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Least nonnegative residue of v modulo m (m >= 1).
inline std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  if (m <= 0xffffffffUL) return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
  BigInt r;
  BigInt mm;
  mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace lrdens
