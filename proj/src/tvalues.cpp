#include "lrdens/tvalues.hpp"

#include "lrdens/error.hpp"
#include "lrdens/exact_linalg.hpp"
#include "lrdens/parallel.hpp"
#include "lrdens/primes.hpp"

namespace lrdens {

namespace {

void require_simple(const CharData& cd) {
  if (!cd.simple_roots)
    throw Error(ErrorKind::NotSimpleRoots, "T_u(p) needs a characteristic polynomial with simple roots");
}

// Exponent tuple with the implicit x_1 = 0 prepended.
template <class T>
Matrix<T> gram_matrix(const std::vector<T>& sums, std::span<const std::uint64_t> exps) {
  const std::size_t k = exps.size() + 1;
  auto x = [&](std::size_t i) -> std::uint64_t { return i == 0 ? 0 : exps[i - 1]; };
  Matrix<T> s(k, std::vector<T>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s[i][j] = sums[x(i) + x(j)];
  return s;
}

// Advances a strictly increasing tuple whose last entry is pinned; returns
// false after the last tuple.
bool next_tuple(std::vector<std::uint64_t>& t, std::uint64_t top) {
  const std::size_t free = t.size() - 1;
  for (std::size_t i = free; i-- > 0;) {
    const std::uint64_t limit = top - (free - i);
    if (t[i] < limit) {
      ++t[i];
      for (std::size_t j = i + 1; j < free; ++j) t[j] = t[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BigInt gram_det_squared(const CharData& cd, std::span<const std::uint64_t> exponents) {
  require_simple(cd);
  if (exponents.size() + 1 != cd.order())
    throw Error(ErrorKind::InvalidArgument, "expected k - 1 exponents");
  std::uint64_t top = 0;
  for (auto e : exponents) top = std::max(top, e);
  const std::vector<BigInt> sums = cd.power_sums(2 * top + 1);
  return det_bareiss(gram_matrix(sums, exponents));
}

TValue t_value(const CharData& cd, std::uint64_t p, std::uint64_t cap) {
  if (p < 2) throw Error(ErrorKind::BadModulus, "p must be a prime");
  if (mod_u64(cd.last_coeff(), p) == 0) throw Error(ErrorKind::BadPrime, "p divides a_k");
  const std::size_t k = cd.order();
  if (k == 1) return TValue::infinite();
  require_simple(cd);

  const bool ramified = mod_u64(*cd.discriminant, p) == 0;
  const std::vector<std::uint64_t> sums_mod = cd.power_sums_mod(2 * cap + 1, p);
  std::vector<BigInt> sums_exact;

  for (std::uint64_t top = 1; top <= cap; ++top) {
    if (top + 1 < k) continue;  // fewer than k - 1 distinct positive exponents
    std::vector<std::uint64_t> tuple(k - 1);
    for (std::size_t i = 0; i < k - 1; ++i) tuple[i] = i + 1;
    tuple.back() = top;
    do {
      if (det_mod_prime(gram_matrix(sums_mod, tuple), p) != 0) continue;
      if (sums_exact.size() < 2 * top + 1) sums_exact = cd.power_sums(2 * cap + 1);
      // An exact zero contributes max{1, 0} = 1 to the norm product.
      if (det_bareiss(gram_matrix(sums_exact, tuple)) == 0) continue;
      TValue v = TValue::finite(top - 1);
      v.ramified = ramified;
      return v;
    } while (next_tuple(tuple, top));
  }
  TValue v = TValue::capped(cap);
  v.ramified = ramified;
  return v;
}

std::uint64_t gamma_threshold(std::uint64_t p, const Rational& gamma) {
  Rational g = gamma;
  g.canonicalize();
  if (g <= 0 || g >= 1) throw Error(ErrorKind::InvalidArgument, "gamma must lie in (0, 1)");
  const unsigned long num = g.get_num().get_ui();
  const unsigned long den = g.get_den().get_ui();
  BigInt target;
  mpz_pow_ui(target.get_mpz_t(), from_u64(p).get_mpz_t(), num);
  BigInt root;
  const bool exact = mpz_root(root.get_mpz_t(), target.get_mpz_t(), den) != 0;
  if (!exact) root += 1;
  return root.get_ui();
}

std::vector<std::uint64_t> TProfile::members() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries)
    if (e.member) out.push_back(e.prime);
  return out;
}

Rational default_gamma(std::size_t order) { return Rational(1, static_cast<unsigned long>(order + 1)); }

TProfile t_profile(const CharData& cd, std::uint64_t pmax, const Rational& gamma, unsigned threads) {
  TProfile prof;
  prof.gamma = gamma;
  prof.gamma.canonicalize();
  if (cd.order() >= 2) require_simple(cd);
  for (std::uint64_t p : primes_up_to(pmax))
    if (mod_u64(cd.last_coeff(), p) != 0) prof.entries.push_back({p, gamma_threshold(p, prof.gamma), {}, false});

  parallel_for(prof.entries.size(), threads, [&](std::size_t i) {
    TProfileEntry& e = prof.entries[i];
    e.value = t_value(cd, e.prime, e.threshold);
    // threshold = ceil(p^gamma), so T < p^gamma iff T < threshold.
    e.member = e.value.kind == TValue::Kind::Finite && e.value.value < e.threshold;
  });
  return prof;
}

}  // namespace lrdens
