#include "lrdens/char_data.hpp"

#include "lrdens/error.hpp"

namespace lrdens {

std::vector<BigInt> CharData::power_sums(std::size_t count) const {
  const std::size_t k = order();
  std::vector<BigInt> s(power_sum_seeds.begin(), power_sum_seeds.end());
  s.reserve(std::max(count, k));
  for (std::size_t m = k; m < count; ++m) {
    BigInt v = 0;
    for (std::size_t i = 1; i <= k; ++i) v += coeffs[i - 1] * s[m - i];
    s.push_back(std::move(v));
  }
  s.resize(count);
  return s;
}

std::vector<std::uint64_t> CharData::power_sums_mod(std::size_t count, std::uint64_t m) const {
  const std::size_t k = order();
  std::vector<u64> a(k);
  for (std::size_t i = 0; i < k; ++i) a[i] = mod_u64(coeffs[i], m);
  std::vector<u64> s(std::max(count, k));
  for (std::size_t i = 0; i < k; ++i) s[i] = mod_u64(power_sum_seeds[i], m);
  for (std::size_t n = k; n < count; ++n) {
    u64 v = 0;
    for (std::size_t i = 1; i <= k; ++i) v = add_mod(v, mul_mod(a[i - 1], s[n - i], m), m);
    s[n] = v;
  }
  s.resize(count);
  return s;
}

CharData char_data(const IntPoly& monic) {
  if (!monic.is_monic() || monic.degree() < 1)
    throw Error(ErrorKind::InvalidArgument, "characteristic polynomial must be monic of degree >= 1");
  if (monic.coeff(0) == 0) throw Error(ErrorKind::ZeroLeadingCoefficient, "zero constant term");
  const std::size_t k = static_cast<std::size_t>(monic.degree());

  CharData cd;
  cd.f = monic;
  cd.coeffs.resize(k);
  for (std::size_t i = 1; i <= k; ++i) cd.coeffs[i - 1] = -monic.coeff(k - i);

  const IntPoly g = gcd(monic, monic.derivative());
  cd.squarefree = exact_quotient(monic, g);
  if (!cd.squarefree.is_monic()) throw Error(ErrorKind::Inconsistency, "squarefree part is not monic");
  cd.simple_roots = static_cast<std::size_t>(cd.squarefree.degree()) == k;
  if (cd.simple_roots) cd.discriminant = discriminant(monic);

  // Newton: s_m = a_1 s_{m-1} + ... + a_{m-1} s_1 + m a_m for 1 <= m < k.
  cd.power_sum_seeds.resize(k);
  cd.power_sum_seeds[0] = static_cast<unsigned long>(k);
  for (std::size_t m = 1; m < k; ++m) {
    BigInt v = cd.coeffs[m - 1] * static_cast<unsigned long>(m);
    for (std::size_t i = 1; i < m; ++i) v += cd.coeffs[i - 1] * cd.power_sum_seeds[m - i];
    cd.power_sum_seeds[m] = std::move(v);
  }
  return cd;
}

CharData char_data(const Recurrence& rec) { return char_data(rec.characteristic()); }

IntPoly ratio_polynomial(const CharData& cd) {
  const IntPoly& f0 = cd.squarefree;
  const std::size_t r = static_cast<std::size_t>(f0.degree());
  const std::size_t points = r * r + 1;
  std::vector<BigInt> xs(points), ys(points);
  for (std::size_t z = 0; z < points; ++z) {
    xs[z] = static_cast<unsigned long>(z);
    ys[z] = resultant(f0, f0.scale_argument(xs[z]));
  }
  return interpolate_integer(xs, ys);
}

bool is_nondegenerate(const CharData& cd) {
  const std::size_t r = cd.distinct_roots();
  IntPoly rest = ratio_polynomial(cd);
  // Drop the (z - 1)^r contributed by the diagonal pairs i = j.
  const IntPoly z_minus_one{-1, 1};
  for (std::size_t i = 0; i < r; ++i) rest = exact_quotient(rest, z_minus_one);
  const std::uint64_t deg = static_cast<std::uint64_t>(std::max(rest.degree(), 0L));
  if (deg == 0) return true;
  // phi(m) >= sqrt(m / 2), so phi(m) <= r^2 forces m <= 2 r^4.
  const std::uint64_t limit = 2 * static_cast<std::uint64_t>(r) * r * r * r;
  for (std::uint64_t m = 2; m <= limit; ++m) {
    if (euler_phi(m) > deg) continue;
    if (divide_exact(rest, cyclotomic(m), nullptr)) return false;
  }
  return true;
}

}  // namespace lrdens
