#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lrdens/error.hpp"
#include "lrdens/recurrence.hpp"

namespace lrdens::testing {

struct Named {
  std::string name;
  Recurrence rec;
};

inline Recurrence fibonacci() { return validate({1, 1}, {0, 1}); }
inline Recurrence lucas() { return validate({1, 1}, {2, 1}); }
inline Recurrence tribonacci() { return validate({1, 1, 1}, {0, 0, 1}); }
inline Recurrence pow2() { return validate({2}, {1}); }
inline Recurrence pow3() { return validate({3}, {1}); }
inline Recurrence n_pow2() { return validate({4, -4}, {0, 2}); }
inline Recurrence pow2_plus_n() { return validate({4, -5, 2}, {1, 3, 6}); }
inline Recurrence pell() { return validate({2, 1}, {0, 1}); }

inline std::vector<Named> suite() {
  return {{"fibonacci", fibonacci()}, {"lucas", lucas()},     {"tribonacci", tribonacci()},
          {"2^n", pow2()},            {"3^n", pow3()},        {"n*2^n", n_pow2()},
          {"2^n+n", pow2_plus_n()},   {"pell", pell()}};
}

/// Valid recurrences with order in [1, max_order] and entries in [-bound, bound].
inline std::vector<Recurrence> random_recurrences(std::size_t count, std::uint64_t seed, std::size_t max_order = 4,
                                                  long bound = 9) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(1, max_order);
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::vector<Recurrence> out;
  while (out.size() < count) {
    const std::size_t k = order(rng);
    std::vector<long> a(k), u(k);
    for (auto& v : a) v = entry(rng);
    for (auto& v : u) v = entry(rng);
    try {
      out.push_back(validate(a, u));
    } catch (const Error&) {
    }
  }
  return out;
}

/// u_n = n * c_n for a random c of order 1 or 2; f_u = f_c^2, so k <= 4.
inline std::vector<Recurrence> n_times_family(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-4, 4);
  std::uniform_int_distribution<int> order(1, 2);
  std::vector<Recurrence> out;
  while (out.size() < count) {
    const int kc = order(rng);
    std::vector<long> c(static_cast<std::size_t>(kc)), init(static_cast<std::size_t>(kc));
    for (auto& v : c) v = entry(rng);
    for (auto& v : init) v = entry(rng);
    try {
      const Recurrence base = validate(c, init);
      const IntPoly f = base.characteristic();
      const IntPoly sq = f * f;
      const std::size_t k = static_cast<std::size_t>(sq.degree());
      const auto terms = terms_exact(base, k);
      std::vector<BigInt> u(k);
      for (std::size_t n = 0; n < k; ++n) u[n] = terms[n] * static_cast<unsigned long>(n);
      out.push_back(recurrence_from_characteristic(sq, u));
    } catch (const Error&) {
    }
  }
  return out;
}

inline std::string describe(const Recurrence& r) {
  std::string s = "coeffs=[";
  for (std::size_t i = 0; i < r.order(); ++i) s += (i ? "," : "") + r.coeffs()[i].get_str();
  s += "] init=[";
  for (std::size_t i = 0; i < r.order(); ++i) s += (i ? "," : "") + r.initial()[i].get_str();
  return s + "]";
}

}  // namespace lrdens::testing
