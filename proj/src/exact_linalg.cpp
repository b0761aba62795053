#include "lrdens/exact_linalg.hpp"

#include <utility>

#include "lrdens/error.hpp"
#include "lrdens/modarith.hpp"

namespace lrdens {

BigInt det_bareiss(Matrix<BigInt> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigInt d = a[n - 1][n - 1];
  return sign < 0 ? BigInt(-d) : d;
}

namespace {

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t det_mod_prime(Matrix<std::uint64_t> a, std::uint64_t p) {
  const std::size_t n = a.size();
  u64 det = 1 % p;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = (p - det) % p;
    }
    const u64 pk = a[k][k] % p;
    det = mul_mod(det, pk, p);
    const u64 inv = pow_mod(pk, p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const u64 f = mul_mod(a[i][k] % p, inv, p);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] = add_mod(a[i][j] % p, p - mul_mod(f, a[k][j] % p, p), p);
    }
  }
  return det;
}

std::vector<Rational> solve_rational(Matrix<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::SingularSystem, "rational system has no unique solution");
    std::swap(a[piv], a[k]);
    std::swap(b[piv], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<Rational> berlekamp_massey(const std::vector<Rational>& seq) {
  // Connection polynomials C (current) and B (before last length change).
  std::vector<Rational> c{1}, prev{1};
  std::size_t len = 0;
  std::size_t shift = 1;
  Rational last_disc = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational d = seq[n];
    for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * seq[n - i];
    if (d == 0) {
      ++shift;
      continue;
    }
    const Rational coef = d / last_disc;
    std::vector<Rational> t = c;
    if (c.size() < prev.size() + shift) c.resize(prev.size() + shift, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) c[i + shift] -= coef * prev[i];
    if (2 * len <= n) {
      len = n + 1 - len;
      prev = std::move(t);
      last_disc = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(len + 1, 0);
  std::vector<Rational> out(len);
  for (std::size_t i = 1; i <= len; ++i) out[i - 1] = -c[i];
  return out;
}

}  // namespace lrdens
