#include "lrdens/int_poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "lrdens/error.hpp"
#include "lrdens/exact_linalg.hpp"

namespace lrdens {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) g = lrdens::gcd(g, v);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (lc() < 0) g = -g;
  std::vector<BigInt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversal(std::size_t n) const {
  std::vector<BigInt> v(n + 1, 0);
  for (std::size_t i = 0; i < c_.size() && i <= n; ++i) v[n - i] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scale_argument(const BigInt& s) const {
  std::vector<BigInt> v(c_.size());
  BigInt pw = 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    v[i] = c_[i] * pw;
    pw *= s;
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const BigInt& v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    BigInt mag = abs(v);
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "pseudo_remainder by zero polynomial");
  std::vector<BigInt> r = a.coeffs();
  const long db = b.degree();
  const BigInt& lb = b.lc();
  long dr = a.degree();
  long steps = dr - db + 1;
  while (dr >= db && dr >= 0) {
    BigInt top = r[static_cast<std::size_t>(dr)];
    for (auto& v : r) v *= lb;
    for (long j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(dr - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
    --steps;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  IntPoly out(std::move(r));
  if (steps > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    out *= f;
  }
  return out;
}

bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly* q) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  if (a.is_zero()) {
    if (q) *q = {};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<BigInt> r = a.coeffs();
  const long db = b.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (long i = a.degree(); i >= db; --i) {
    BigInt& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return false;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    quot[static_cast<std::size_t>(i - db)] = t;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (long i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return false;
  if (q) *q = IntPoly(std::move(quot));
  return true;
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!divide_exact(a, b, &q))
    throw Error(ErrorKind::Inconsistency, "inexact division " + a.to_string() + " / " + b.to_string());
  return q;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part();
}

BigInt resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  if (m == 0 && n == 0) return 1;
  const std::size_t size = m + n;
  Matrix<BigInt> syl(size, std::vector<BigInt>(size, 0));
  // Rows hold descending coefficients, shifted.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) syl[i][i + j] = a.coeffs()[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) syl[n + i][i + j] = b.coeffs()[n - j];
  return det_bareiss(std::move(syl));
}

BigInt discriminant(const IntPoly& f) {
  const long n = f.degree();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "discriminant of a constant");
  if (n == 1) return 1;
  BigInt res = resultant(f, f.derivative());
  BigInt d;
  mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
  if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPoly& cyclotomic(std::uint64_t m) {
  static std::mutex mu;
  static std::map<std::uint64_t, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic(0)");
  // X^m - 1 divided by every Phi_d with d | m, d < m.
  IntPoly acc = IntPoly::monomial(1, m) - IntPoly::constant(1);
  for (std::uint64_t d = 1; d < m; ++d)
    if (m % d == 0) acc = exact_quotient(acc, cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  // std::map never invalidates references on insertion.
  return cache.emplace(m, std::move(acc)).first->second;
}

IntPoly interpolate_integer(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  const std::size_t n = xs.size();
  // Newton divided differences over Q.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n; i-- > level;) dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
  // Horner-style expansion of the Newton form with rational coefficients.
  std::vector<Rational> poly(1, dd[n - 1]);
  for (std::size_t idx = n - 1; idx-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rational(xs[idx]);
    }
    next[0] += dd[idx];
    poly = std::move(next);
  }
  std::vector<BigInt> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    poly[i].canonicalize();
    if (poly[i].get_den() != 1) throw Error(ErrorKind::Inconsistency, "non-integral interpolant");
    out[i] = poly[i].get_num();
  }
  return IntPoly(std::move(out));
}

}  // namespace lrdens
