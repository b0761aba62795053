#include <doctest.h>

#include <random>

#include "lrdens/error.hpp"
#include "lrdens/exact_linalg.hpp"
#include "lrdens/int_poly.hpp"

using namespace lrdens;

TEST_CASE("arithmetic and normalization") {
  const IntPoly a{-1, -1, 1};  // X^2 - X - 1
  CHECK(a.degree() == 2);
  CHECK(a.is_monic());
  CHECK((a - a).is_zero());
  CHECK((a * IntPoly{1, 1}) == IntPoly{-1, -2, 0, 1});
  CHECK(a.derivative() == IntPoly{-1, 2});
  CHECK(a.to_string() == "X^2 - X - 1");
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(a.reversal(2) == IntPoly{1, -1, -1});
  CHECK(IntPoly{6, 4, 2}.primitive_part() == IntPoly{3, 2, 1});
  CHECK(IntPoly{-6, -4}.primitive_part() == IntPoly{3, 2});
}

TEST_CASE("exact division") {
  IntPoly q;
  CHECK(divide_exact(IntPoly{4, -4, 1}, IntPoly{-2, 1}, &q));
  CHECK(q == IntPoly{-2, 1});
  CHECK_FALSE(divide_exact(IntPoly{1, 0, 1}, IntPoly{-1, 1}, nullptr));
  CHECK_FALSE(divide_exact(IntPoly{1, 1}, IntPoly{0, 2}, nullptr));  // over Q only
  CHECK_THROWS_AS(exact_quotient(IntPoly{1, 0, 1}, IntPoly{1, 1}), Error);
}

TEST_CASE("pseudo-remainder") {
  // prem(X^2 + 1, 2X + 1) = 4 * (X^2 + 1) mod (2X + 1) = 5.
  CHECK(pseudo_remainder(IntPoly{1, 0, 1}, IntPoly{1, 2}) == IntPoly{5});
}

TEST_CASE("gcd of known factorizations") {
  const IntPoly x_minus_2{-2, 1};
  CHECK(gcd(IntPoly{4, -4, 1}, IntPoly{-4, 2}) == x_minus_2);
  CHECK(gcd(IntPoly{-1, -1, 1}, IntPoly{-1, 2}) == IntPoly{1});
  CHECK(gcd(IntPoly{}, IntPoly{-4, 2}) == x_minus_2);
}

TEST_CASE("gcd recovers a planted common factor") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5);
  auto random_poly = [&](int deg) {
    std::vector<BigInt> c(static_cast<std::size_t>(deg + 1));
    for (auto& v : c) v = coef(rng);
    c.back() = 1;
    return IntPoly(c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly common = random_poly(1 + trial % 3);
    const IntPoly a = random_poly(2) * common;
    const IntPoly b = random_poly(3) * common;
    const IntPoly g = gcd(a, b);
    CHECK(divide_exact(a, g, nullptr));
    CHECK(divide_exact(b, g, nullptr));
    CHECK(divide_exact(g, common.primitive_part(), nullptr));
  }
}

TEST_CASE("resultant and discriminant") {
  // Res(X^2 - 1, X - 2) = prod over roots of (root - 2) = (1 - 2)(-1 - 2) = 3.
  CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{-2, 1}) == 3);
  CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == 0);
  CHECK(discriminant(IntPoly{-1, -1, 1}) == 5);
  CHECK(discriminant(IntPoly{4, 0, 1}) == -16);
  CHECK(discriminant(IntPoly{-1, -1, 0, 1}) == -23);
  CHECK(discriminant(IntPoly{-1, -1, -1, 1}) == -44);  // Tribonacci
  CHECK(discriminant(IntPoly{4, -4, 1}) == 0);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(2) == IntPoly{1, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
  for (std::uint64_t m = 1; m <= 60; ++m) CHECK(static_cast<std::uint64_t>(cyclotomic(m).degree()) == euler_phi(m));
}

TEST_CASE("integer interpolation") {
  const IntPoly f{3, -2, 0, 5};
  std::vector<BigInt> xs, ys;
  for (long x = 0; x < 4; ++x) {
    xs.emplace_back(x);
    ys.push_back(f.evaluate(x));
  }
  CHECK(interpolate_integer(xs, ys) == f);
  CHECK_THROWS_AS(interpolate_integer({0, 2}, {0, 1}), Error);
}

TEST_CASE("determinants") {
  CHECK(det_bareiss({{2, 1}, {1, 3}}) == 5);
  CHECK(det_bareiss({{0, 1}, {1, 0}}) == -1);
  CHECK(det_bareiss({{1, 2}, {2, 4}}) == 0);
  CHECK(det_mod_prime({{2, 1}, {1, 3}}, 5) == 0);
  CHECK(det_mod_prime({{2, 1}, {1, 3}}, 7) == 5);
  CHECK(det_mod_prime({{0, 1}, {1, 0}}, 7) == 6);
}

TEST_CASE("Berlekamp-Massey over Q") {
  std::vector<Rational> fib;
  long a = 0, b = 1;
  for (int i = 0; i < 10; ++i) {
    fib.emplace_back(a);
    long t = a + b;
    a = b;
    b = t;
  }
  const auto c = berlekamp_massey(fib);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 1);
  CHECK(c[1] == 1);

  std::vector<Rational> halves;
  for (int i = 0; i < 6; ++i) halves.emplace_back(1, 1u << i);
  const auto h = berlekamp_massey(halves);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == Rational(1, 2));
}
