#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <complex>

#include "lrdens/error.hpp"
#include "lrdens/tvalues.hpp"
#include "numeric_roots.hpp"
#include "suite.hpp"

using namespace lrdens;
using namespace lrdens::testing;

namespace {

// Least n >= 1 with p | F_n, by direct scan.
std::uint64_t rank_of_apparition(std::uint64_t p) {
  std::uint64_t a = 0, b = 1;
  for (std::uint64_t n = 1;; ++n) {
    const std::uint64_t c = (a + b) % p;
    a = b;
    b = c;
    if (a == 0) return n;
  }
}

std::vector<std::uint64_t> ex(std::initializer_list<std::uint64_t> v) { return v; }

}  // namespace

TEST_CASE("gram_det_squared examples") {
  const CharData fib = char_data(fibonacci());
  CHECK(gram_det_squared(fib, ex({1})) == 5);
  CHECK(gram_det_squared(fib, ex({3})) == 20);
  const CharData trib = char_data(tribonacci());
  CHECK(gram_det_squared(trib, ex({2, 2})) == 0);
  CHECK_THROWS_AS(gram_det_squared(char_data(n_pow2()), ex({1})), Error);
  CHECK_THROWS_AS(gram_det_squared(fib, ex({1, 2})), Error);
}

TEST_CASE("gram_det_squared equals 5 F_x^2 for Fibonacci") {
  const CharData fib = char_data(fibonacci());
  const auto f = terms_exact(fibonacci(), 40);
  for (std::uint64_t x = 1; x < 40; ++x) CHECK(gram_det_squared(fib, ex({x})) == 5 * f[x] * f[x]);
}

TEST_CASE("gram_det_squared is permutation invariant and vanishes on repeats") {
  for (const auto& rec : random_recurrences(40, 8080, 4, 5)) {
    const CharData cd = char_data(rec);
    if (!cd.simple_roots || cd.order() < 3) continue;
    std::vector<std::uint64_t> e;
    for (std::size_t i = 1; i < cd.order(); ++i) e.push_back(2 * i + 1);
    const BigInt base = gram_det_squared(cd, e);
    std::sort(e.begin(), e.end());
    do CHECK(gram_det_squared(cd, e) == base);
    while (std::next_permutation(e.begin(), e.end()));
    e[1] = e[0];
    CHECK(gram_det_squared(cd, e) == 0);
  }
}

TEST_CASE("gram_det_squared matches det(alpha_i^x_j)^2 numerically") {
  std::size_t checked = 0;
  for (const auto& rec : random_recurrences(80, 4321, 4, 5)) {
    const CharData cd = char_data(rec);
    if (!cd.simple_roots || cd.order() < 2) continue;
    const auto roots = numeric_roots(cd.f);
    const std::size_t k = cd.order();
    std::vector<std::uint64_t> e(k - 1);
    for (std::size_t i = 0; i < k - 1; ++i) e[i] = 1 + (3 * i + rec.order()) % 8;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() != k - 1) continue;
    Eigen::MatrixXcd a(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            j == 0 ? std::complex<double>(1) : std::pow(roots[i], static_cast<double>(e[j - 1]));
    const std::complex<double> d = a.determinant();
    const std::complex<double> d2 = d * d;
    const double exact = gram_det_squared(cd, e).get_d();
    INFO(describe(rec));
    CHECK(std::abs(d2.imag()) <= 1e-6 * std::max(1.0, std::abs(d2)));
    CHECK(std::abs(d2.real() - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("t_value examples") {
  const CharData fib = char_data(fibonacci());
  CHECK(t_value(fib, 2) == TValue::finite(2));
  CHECK(t_value(fib, 7) == TValue::finite(7));
  CHECK(t_value(char_data(pow3()), 5) == TValue::infinite());

  const TValue five = t_value(fib, 5);
  CHECK(five.kind == TValue::Kind::Finite);
  CHECK(five.value == 0);
  CHECK(five.ramified);
}

TEST_CASE("Fibonacci T-values are rank of apparition minus one") {
  const CharData fib = char_data(fibonacci());
  for (std::uint64_t p : {2, 3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    const TValue t = t_value(fib, p);
    INFO("p=", p);
    CHECK(t.kind == TValue::Kind::Finite);
    CHECK(t.value == rank_of_apparition(p) - 1);
    CHECK_FALSE(t.ramified);
  }
}

TEST_CASE("t_value errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Inconsistency;
  };
  CHECK(kind_of([] { t_value(char_data(n_pow2()), 3); }) == ErrorKind::NotSimpleRoots);
  CHECK(kind_of([] { t_value(char_data(pow3()), 3); }) == ErrorKind::BadPrime);
  CHECK(kind_of([] { t_value(char_data(validate({1, 2}, {0, 1})), 2); }) == ErrorKind::BadPrime);
}

TEST_CASE("Finite(0) only for k = 2 and p | discriminant") {
  for (const auto& rec : random_recurrences(60, 61, 3, 6)) {
    const CharData cd = char_data(rec);
    if (!cd.simple_roots || cd.order() < 2) continue;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      if (mod_u64(cd.last_coeff(), p) == 0) continue;
      const TValue t = t_value(cd, p, 30);
      const bool zero = t.kind == TValue::Kind::Finite && t.value == 0;
      const bool predicted = cd.order() == 2 && mod_u64(*cd.discriminant, p) == 0;
      INFO(describe(rec), " p=", p);
      CHECK(zero == predicted);
    }
  }
}

TEST_CASE("raising the cap only resolves capped values") {
  const CharData trib = char_data(tribonacci());
  for (std::uint64_t p : {3, 5, 7, 13, 23}) {
    const TValue low = t_value(trib, p, 3);
    const TValue high = t_value(trib, p, 40);
    INFO("p=", p);
    if (low.kind == TValue::Kind::Finite) CHECK(high == low);
    else CHECK(low == TValue::capped(3));
  }
}

TEST_CASE("gamma thresholds") {
  CHECK(gamma_threshold(2, Rational(1, 3)) == 2);
  CHECK(gamma_threshold(8, Rational(1, 3)) == 2);
  CHECK(gamma_threshold(9, Rational(1, 2)) == 3);
  CHECK(gamma_threshold(10, Rational(1, 2)) == 4);
  CHECK(gamma_threshold(13, Rational(1, 3)) == 3);
  CHECK_THROWS_AS(gamma_threshold(13, Rational(1)), Error);
}

TEST_CASE("t_profile examples") {
  const CharData fib = char_data(fibonacci());
  const TProfile prof = t_profile(fib, 13, Rational(1, 3));
  auto entry = [&](std::uint64_t p) {
    for (const auto& e : prof.entries)
      if (e.prime == p) return e;
    FAIL("missing prime ", p);
    return TProfileEntry{};
  };
  // T(2) = 2 is not below 2^(1/3); T(13) = 6 is not below 13^(1/3).
  CHECK_FALSE(entry(2).member);
  CHECK_FALSE(entry(13).member);
  CHECK(entry(5).member);  // T(5) = 0
  CHECK(prof.members() == std::vector<std::uint64_t>{5});

  // Primes dividing a_k never appear.
  const CharData c = char_data(validate({1, 3}, {0, 1}));
  const TProfile pc = t_profile(c, 3, default_gamma(2));
  CHECK(pc.entries.size() == 1);
  CHECK(pc.entries[0].prime == 2);

  for (const auto& e : t_profile(char_data(pow3()), 50, Rational(1, 2)).entries)
    CHECK(e.value == TValue::infinite());
}

TEST_CASE("t_profile membership matches standalone t_value") {
  const CharData fib = char_data(fibonacci());
  const Rational gamma(9, 10);
  const TProfile serial = t_profile(fib, 200, gamma, 1);
  const TProfile parallel = t_profile(fib, 200, gamma, 4);
  REQUIRE(serial.entries.size() == parallel.entries.size());
  for (std::size_t i = 0; i < serial.entries.size(); ++i) {
    const auto& e = serial.entries[i];
    CHECK(e.value == parallel.entries[i].value);
    const TValue full = t_value(fib, e.prime, 2 * e.prime + 2);
    REQUIRE(full.kind == TValue::Kind::Finite);
    // T < p^gamma  <=>  T^10 < p^9.
    BigInt lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), full.value, 10);
    mpz_ui_pow_ui(rhs.get_mpz_t(), e.prime, 9);
    INFO("p=", e.prime);
    CHECK(e.member == (lhs < rhs));
  }
}
