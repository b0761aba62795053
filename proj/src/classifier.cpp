#include "lrdens/classifier.hpp"

#include <algorithm>

#include "lrdens/error.hpp"
#include "lrdens/exact_linalg.hpp"

namespace lrdens {

std::vector<BigInt> extend_sequence(const IntPoly& f, const std::vector<BigInt>& init, std::size_t count) {
  const std::size_t k = static_cast<std::size_t>(std::max(f.degree(), 0L));
  std::vector<BigInt> s(count, 0);
  if (k == 0) return s;
  for (std::size_t i = 0; i < k && i < count; ++i) s[i] = init[i];
  for (std::size_t n = k; n < count; ++n) {
    BigInt v = 0;
    for (std::size_t i = 1; i <= k; ++i) v -= f.coeff(k - i) * s[n - i];
    s[n] = std::move(v);
  }
  return s;
}

std::vector<BigInt> Decomposition::w_terms(std::size_t count) const { return extend_sequence(w_char, w_init, count); }
std::vector<BigInt> Decomposition::v_terms(std::size_t count) const { return extend_sequence(v_char, v_init, count); }

namespace {

// Column j holds the first `count` terms of the sequence seeded by e_j.
Matrix<BigInt> seed_basis(const IntPoly& f, std::size_t count) {
  const std::size_t d = static_cast<std::size_t>(std::max(f.degree(), 0L));
  Matrix<BigInt> cols(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<BigInt> e(d, 0);
    e[j] = 1;
    cols[j] = extend_sequence(f, e, count);
  }
  return cols;
}

}  // namespace

Decomposition decompose(const Recurrence& rec, const CharData& cd) {
  const std::size_t k = rec.order();
  const std::size_t r = cd.distinct_roots();
  Decomposition d;
  d.w_char = cd.squarefree;
  d.v_char = exact_quotient(cd.f, cd.squarefree);

  // n v'_n + w'_n = u_n for n < k pins down the k seeds; both sides obey f_u,
  // and the generalized power sum is unique, so the system is nonsingular.
  const Matrix<BigInt> wb = seed_basis(d.w_char, k);
  const Matrix<BigInt> vb = seed_basis(d.v_char, k);
  Matrix<Rational> a(k, std::vector<Rational>(k, 0));
  std::vector<Rational> rhs(k);
  for (std::size_t n = 0; n < k; ++n) {
    for (std::size_t j = 0; j < r; ++j) a[n][j] = wb[j][n];
    for (std::size_t j = 0; j < k - r; ++j) a[n][r + j] = vb[j][n] * static_cast<unsigned long>(n);
    rhs[n] = rec.initial()[n];
  }
  std::vector<Rational> seeds = solve_rational(std::move(a), std::move(rhs));

  BigInt scale = 1;
  for (auto& s : seeds) {
    s.canonicalize();
    scale = lcm(scale, s.get_den());
  }
  d.scale = scale;
  d.w_init.resize(r);
  d.v_init.resize(k - r);
  d.w_is_zero = true;
  for (std::size_t j = 0; j < k; ++j) {
    Rational scaled = seeds[j] * Rational(scale);
    scaled.canonicalize();
    if (scaled.get_den() != 1) throw Error(ErrorKind::Inconsistency, "scaled seed is not integral");
    if (j < r) {
      d.w_init[j] = scaled.get_num();
      d.w_is_zero = d.w_is_zero && d.w_init[j] == 0;
    } else {
      d.v_init[j - r] = scaled.get_num();
    }
  }
  return d;
}

bool un_over_n_recurrence_by_fit(const Recurrence& rec) {
  const std::size_t k = rec.order();
  const std::size_t fit_terms = 4 * k;
  const std::size_t check_terms = 3 * k + 1;
  const std::vector<BigInt> u = terms_exact(rec, fit_terms + check_terms + 1);

  std::vector<Rational> t(fit_terms);
  for (std::size_t n = 1; n <= fit_terms; ++n) {
    t[n - 1] = Rational(u[n], BigInt(static_cast<unsigned long>(n)));
    t[n - 1].canonicalize();
  }
  const std::vector<Rational> c = berlekamp_massey(t);
  if (c.size() > k) return false;

  for (std::size_t n = fit_terms + 1; n <= fit_terms + check_terms; ++n) {
    Rational next = 0;
    for (std::size_t i = 1; i <= c.size(); ++i) next += c[i - 1] * t[t.size() - i];
    t.push_back(next);
    if (Rational(u[n]) != next * Rational(BigInt(static_cast<unsigned long>(n)))) return false;
  }
  return true;
}

namespace {

std::vector<BigInt> divisors(const BigInt& value) {
  BigInt n = abs(value);
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (BigInt p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    BigInt pw = 1;
    for (unsigned i = 0; i < e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<BigInt> enumerate_finite_A(const Recurrence& rec, const Decomposition& d) {
  if (!d.w_is_zero) throw Error(ErrorKind::NotFiniteCase, "w is nonzero, A_u is infinite");
  std::vector<BigInt> out;
  for (const BigInt& n : divisors(d.scale)) {
    if (n == 1) {
      out.push_back(n);
      continue;
    }
    if (!n.fits_ulong_p()) throw Error(ErrorKind::InvalidArgument, "divisor of scale exceeds 64 bits");
    const std::uint64_t nn = n.get_ui();
    if (gcd(n, from_u64(eval_mod(rec, nn, nn))) == 1) out.push_back(n);
  }
  return out;
}

}  // namespace lrdens
