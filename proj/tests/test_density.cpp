#include <doctest.h>

#include <cmath>

#include "lrdens/density.hpp"
#include "lrdens/error.hpp"
#include "lrdens/primes.hpp"
#include "suite.hpp"

using namespace lrdens;
using namespace lrdens::testing;

TEST_CASE("count_A_naive examples") {
  CHECK(count_A_naive(pow2(), 10) == 5);
  CHECK(count_A_naive(fibonacci(), 20) == 13);
  CHECK(count_A_naive(fibonacci(), 100) == 65);
  for (const auto& s : suite()) CHECK(count_A_naive(s.rec, 1) == 1);
}

TEST_CASE("count_A_sieve examples") {
  CHECK(count_A_sieve(pow2(), 10'000) == 5000);
  CHECK(count_A_sieve(fibonacci(), 20) == 13);
  CHECK(count_A_sieve(pow3(), 9) == 6);
  CHECK(count_A_sieve(fibonacci(), 1) == 1);
}

TEST_CASE("sieve equals the naive oracle") {
  for (const auto& s : suite()) {
    INFO(s.name);
    CHECK(count_A_sieve(s.rec, 20'000) == count_A_naive(s.rec, 20'000));
  }
  for (const auto& rec : random_recurrences(30, 555)) {
    INFO(describe(rec));
    CHECK(count_A_sieve(rec, 3000) == count_A_naive(rec, 3000));
  }
}

TEST_CASE("sieve strategies agree") {
  // A zero profile budget forces hop evaluation for every prime.
  SieveOptions hops;
  hops.profile_bit_budget = 0;
  for (const auto& s : suite()) {
    INFO(s.name);
    CHECK(count_A_sieve(s.rec, 30'000, hops) == count_A_sieve(s.rec, 30'000));
  }
}

TEST_CASE("block partition reproduces the monolithic count") {
  for (const auto& s : suite()) {
    const std::uint64_t whole = count_A_sieve(s.rec, 50'000);
    for (std::size_t blocks : {2u, 7u, 64u}) {
      SieveOptions opts;
      opts.blocks = blocks;
      opts.threads = 3;
      INFO(s.name, " blocks=", blocks);
      CHECK(count_A_sieve(s.rec, 50'000, opts) == whole);
    }
  }
  const auto primes = primes_up_to(1000);
  CHECK(count_A_sieve_range(fibonacci(), 1, 500, primes) + count_A_sieve_range(fibonacci(), 501, 1000, primes) ==
        count_A_naive(fibonacci(), 1000));
}

TEST_CASE("delta_y examples for Fibonacci") {
  const auto d2 = delta_y(fibonacci(), 2);
  CHECK(d2.delta == Rational(1, 6));
  CHECK(d2.modulus == 6);
  const auto d3 = delta_y(fibonacci(), 3);
  CHECK(d3.delta == Rational(1, 6));
  CHECK(d3.modulus == 24);
  CHECK(delta_y(fibonacci(), 5).delta == Rational(1, 3));
  CHECK_THROWS_AS(delta_y(fibonacci(), 1), Error);
}

TEST_CASE("factored window agrees with the full window") {
  for (const auto& s : suite()) {
    for (std::uint64_t y : {2, 3, 5, 7, 11, 13}) {
      DeltaResult full;
      try {
        full = delta_y_full_window(s.rec, y, 20'000'000);
      } catch (const Error&) {
        continue;
      }
      const DeltaResult fact = delta_y(s.rec, y);
      INFO(s.name, " y=", y);
      CHECK(fact.delta == full.delta);
      CHECK(fact.modulus == full.modulus);
      CHECK(fact.window <= full.window);
    }
  }
}

TEST_CASE("delta_y is monotone and below the Mertens deficit") {
  for (const auto& s : suite()) {
    Rational prev = 0;
    for (std::uint64_t y : primes_up_to(31)) {
      Rational d;
      try {
        d = delta_y(s.rec, y).delta;
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::ModulusCapExceeded);
        break;
      }
      INFO(s.name, " y=", y);
      CHECK(d >= prev);
      CHECK(d >= 0);
      CHECK(d < 1);
      CHECK(d <= 1 - mertens_product(y));
      prev = d;
    }
  }
}

TEST_CASE("primes that never divide a term leave the window") {
  const auto d = delta_y(pow2(), 97);
  CHECK(d.delta == Rational(1, 2));
  CHECK(d.window == 1);
  CHECK(delta_y(pow3(), 97).window == 1);
}

TEST_CASE("window cap") {
  try {
    delta_y(tribonacci(), 13, 1000);
    FAIL("expected ModulusCapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModulusCapExceeded);
  }
}

TEST_CASE("Monte Carlo estimate brackets the exact value") {
  const Rational exact = delta_y(fibonacci(), 13).delta;
  const DeltaEstimate est = delta_y_monte_carlo(fibonacci(), 13, 20'000, 3);
  CHECK(std::abs(est.estimate - exact.get_d()) <= 5 * est.std_error);
  const DeltaEstimate again = delta_y_monte_carlo(fibonacci(), 13, 20'000, 3);
  CHECK(again.estimate == est.estimate);
}

TEST_CASE("C^- is a subset of C") {
  for (const auto& s : suite()) {
    for (std::uint64_t x : {10ULL, 1000ULL, 20'000ULL}) {
      const std::uint64_t c = x - count_A_sieve(s.rec, x);
      for (std::uint64_t y : {2, 5, 13}) {
        INFO(s.name, " x=", x, " y=", y);
        CHECK(count_C_minus(s.rec, y, x) <= c);
      }
      CHECK(count_C_minus(s.rec, x < 2 ? 2 : x, x) == c);
    }
  }
}

TEST_CASE("Mertens product") {
  CHECK(mertens_product(2) == Rational(1, 2));
  CHECK(mertens_product(5) == Rational(4, 15));
  CHECK(mertens_product(13) == Rational(192, 1001));
}

namespace {

std::uint64_t rank_of_apparition(std::uint64_t p) {
  std::uint64_t a = 0, b = 1;
  for (std::uint64_t n = 1;; ++n) {
    const std::uint64_t c = (a + b) % p;
    a = b;
    b = c;
    if (a == 0) return n;
  }
}

Decomposition decomp_of(const Recurrence& r) { return decompose(r, char_data(r)); }

}  // namespace

TEST_CASE("tail_report for Fibonacci against rank of apparition") {
  const Decomposition d = decomp_of(fibonacci());
  for (const Rational& gamma : {Rational(1, 3), Rational(9, 10)}) {
    const TailReport rep = tail_report(d, 5, 50, gamma);
    Rational lo = 0, hi = 0;
    std::uint64_t resolved = 0;
    for (std::uint64_t p : primes_up_to(50)) {
      if (p <= 5) continue;
      const std::uint64_t cap = gamma_threshold(p, gamma);
      const std::uint64_t t = rank_of_apparition(p) - 1;
      if (t < cap) {
        lo += Rational(1, static_cast<unsigned long>(p * t));
        hi += Rational(1, static_cast<unsigned long>(p * t));
        ++resolved;
      } else {
        hi += Rational(1, static_cast<unsigned long>(p * cap));
      }
    }
    INFO("gamma=", gamma.get_str());
    CHECK(rep.tail_lo == lo);
    CHECK(rep.tail_hi == hi);
    CHECK(rep.resolved == resolved);
    CHECK(rep.members == resolved);
  }
  CHECK(tail_report(d, 5, 50, Rational(1, 3)).tail_lo == 0);
}

TEST_CASE("tail_report edge cases") {
  CHECK_THROWS_AS(tail_report(decomp_of(n_pow2()), 5, 50), Error);
  const TailReport p2 = tail_report(decomp_of(pow2()), 2, 100);
  CHECK(p2.tail_lo == 0);
  CHECK(p2.tail_hi == 0);
  CHECK(p2.infinite == 24);
  CHECK(p2.gamma == Rational(1, 2));
}

TEST_CASE("density_report") {
  const DensityReport fin = density_report(n_pow2(), 1000, 5, 30);
  REQUIRE(fin.finite_set.has_value());
  CHECK(*fin.finite_set == std::vector<BigInt>{1});
  CHECK(fin.count_A == 1);
  CHECK_FALSE(fin.delta.has_value());

  const DensityReport p2 = density_report(pow2(), 100'000, 7, 50);
  CHECK(p2.count_A == 50'000);
  CHECK(p2.delta->delta == Rational(1, 2));
  CHECK(p2.empirical_C_ratio == Rational(1, 2));
  CHECK(p2.delta_bound_ok);

  const DensityReport fib = density_report(fibonacci(), 100'000, 13, 100);
  CHECK(fib.count_A == 64'190);  // frozen from the naive scan
  CHECK(fib.delta->delta == Rational(159, 455));
  CHECK(fib.delta->delta >= Rational(1, 3));
  CHECK(fib.delta->delta < Rational(49, 100));
  CHECK(fib.delta_bound_ok);
  CHECK(fib.tail.has_value());

  CHECK_THROWS_AS(density_report(validate({0, 1}, {0, 1}), 100, 2, 10), Error);

  // A tiny window cap falls back to the Monte Carlo estimate.
  DensityOptions tight;
  tight.window_cap = 10;
  tight.monte_carlo_samples = 2000;
  const DensityReport est = density_report(fibonacci(), 1000, 13, 20, tight);
  CHECK_FALSE(est.delta.has_value());
  CHECK(est.delta_estimate.has_value());
}
