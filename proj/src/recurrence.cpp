#include "lrdens/recurrence.hpp"

#include "lrdens/error.hpp"

namespace lrdens {

IntPoly Recurrence::characteristic() const {
  const std::size_t k = order();
  std::vector<BigInt> c(k + 1);
  c[k] = 1;
  for (std::size_t i = 1; i <= k; ++i) c[k - i] = -coeffs_[i - 1];
  return IntPoly(std::move(c));
}

Recurrence validate(std::vector<BigInt> coeffs, std::vector<BigInt> initial) {
  if (coeffs.empty() || initial.empty()) throw Error(ErrorKind::EmptyInput, "no coefficients or initial values");
  if (coeffs.size() != initial.size())
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(coeffs.size()) + " initial values, got " +
                                                std::to_string(initial.size()));
  if (coeffs.back() == 0) throw Error(ErrorKind::ZeroLeadingCoefficient, "a_k must be nonzero");
  bool all_zero = true;
  for (const auto& v : initial) all_zero = all_zero && v == 0;
  if (all_zero) throw Error(ErrorKind::IdenticallyZero, "all initial values are zero");
  return Recurrence(std::move(coeffs), std::move(initial));
}

Recurrence validate(const std::vector<long>& coeffs, const std::vector<long>& initial) {
  return validate(std::vector<BigInt>(coeffs.begin(), coeffs.end()), std::vector<BigInt>(initial.begin(), initial.end()));
}

Recurrence validate(std::initializer_list<long> coeffs, std::initializer_list<long> initial) {
  return validate(std::vector<long>(coeffs), std::vector<long>(initial));
}

Recurrence recurrence_from_characteristic(const IntPoly& f, std::vector<BigInt> initial) {
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorKind::InvalidArgument, "characteristic polynomial must be monic");
  const std::size_t k = static_cast<std::size_t>(f.degree());
  std::vector<BigInt> coeffs(k);
  for (std::size_t i = 1; i <= k; ++i) coeffs[i - 1] = -f.coeff(k - i);
  return validate(std::move(coeffs), std::move(initial));
}

std::vector<BigInt> terms_exact(const Recurrence& rec, std::size_t count) {
  const std::size_t k = rec.order();
  std::vector<BigInt> u(rec.initial().begin(), rec.initial().end());
  u.reserve(std::max(count, k));
  for (std::size_t n = k; n < count; ++n) {
    BigInt s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += rec.coeffs()[i - 1] * u[n - i];
    u.push_back(std::move(s));
  }
  u.resize(count);
  return u;
}

BigInt eval_exact(const Recurrence& rec, std::uint64_t n) {
  const std::size_t k = rec.order();
  if (n < k) return rec.initial()[n];
  // Sliding window of the last k terms.
  std::vector<BigInt> w(rec.initial().begin(), rec.initial().end());
  std::size_t head = 0;
  for (std::uint64_t m = k; m <= n; ++m) {
    BigInt s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += rec.coeffs()[i - 1] * w[(head + k - i) % k];
    w[head] = std::move(s);
    head = (head + 1) % k;
  }
  return w[(head + k - 1) % k];
}

namespace {

// Product of two residues of X modulo f = X^k - a_1 X^{k-1} - ... - a_k.
std::vector<u64> mul_mod_char(const std::vector<u64>& x, const std::vector<u64>& y, const std::vector<u64>& a,
                              u64 m) {
  const std::size_t k = a.size();
  std::vector<u64> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = add_mod(prod[i + j], mul_mod(x[i], y[j], m), m);
  }
  // X^d = sum_i a_i X^{d-i} for d >= k.
  for (std::size_t d = 2 * k - 2; d >= k; --d) {
    const u64 top = prod[d];
    if (top != 0)
      for (std::size_t i = 1; i <= k; ++i) prod[d - i] = add_mod(prod[d - i], mul_mod(top, a[i - 1], m), m);
  }
  prod.resize(k);
  return prod;
}

std::vector<u64> reduce_all(const std::vector<BigInt>& v, u64 m) {
  std::vector<u64> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = mod_u64(v[i], m);
  return r;
}

}  // namespace

std::uint64_t eval_mod(const Recurrence& rec, std::uint64_t n, std::uint64_t m) {
  if (m < 2) throw Error(ErrorKind::BadModulus, "modulus must be at least 2");
  const std::size_t k = rec.order();
  if (n < k) return mod_u64(rec.initial()[n], m);
  const std::vector<u64> a = reduce_all(rec.coeffs(), m);
  const std::vector<u64> init = reduce_all(rec.initial(), m);
  if (k == 1) {
    u64 r = init[0], b = a[0], e = n;
    while (e) {
      if (e & 1) r = mul_mod(r, b, m);
      b = mul_mod(b, b, m);
      e >>= 1;
    }
    return r;
  }
  std::vector<u64> result(k, 0), base(k, 0);
  result[0] = 1;
  base[1] = 1;
  for (u64 e = n; e; e >>= 1) {
    if (e & 1) result = mul_mod_char(result, base, a, m);
    if (e > 1) base = mul_mod_char(base, base, a, m);
  }
  u64 s = 0;
  for (std::size_t i = 0; i < k; ++i) s = add_mod(s, mul_mod(result[i], init[i], m), m);
  return s;
}

ModMatrix companion_matrix(const Recurrence& rec, std::uint64_t m) {
  const std::size_t k = rec.order();
  ModMatrix c(k, m);
  for (std::size_t i = 0; i + 1 < k; ++i) c(i, i + 1) = 1 % m;
  for (std::size_t j = 1; j <= k; ++j) c(k - 1, k - j) = mod_u64(rec.coeffs()[j - 1], m);
  return c;
}

std::vector<std::uint64_t> initial_state_mod(const Recurrence& rec, std::uint64_t m) {
  return reduce_all(rec.initial(), m);
}

std::vector<std::uint64_t> state_at_mod(const Recurrence& rec, std::uint64_t n, std::uint64_t m) {
  if (m < 2) throw Error(ErrorKind::BadModulus, "modulus must be at least 2");
  return companion_matrix(rec, m).pow(n).apply(initial_state_mod(rec, m));
}

}  // namespace lrdens
