#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace lrdens {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  if (m <= 0xffffffffULL) return (a * b) % m;
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s >= m || s < a) s -= m;
  return s;
}

inline u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

inline u64 lcm_u64_saturating(u64 a, u64 b, u64 limit) {
  u64 g = std::gcd(a, b);
  u128 l = static_cast<u128>(a / g) * b;
  return l > limit ? limit + 1 : static_cast<u64>(l);
}

/// Dense square matrix over Z/m, row-major. Sized for recurrence orders
/// (k up to a few dozen), so plain cubic multiplication.
class ModMatrix {
 public:
  ModMatrix(std::size_t n, u64 m) : n_(n), m_(m), a_(n * n, 0) {}

  static ModMatrix identity(std::size_t n, u64 m) {
    ModMatrix r(n, m);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = 1 % m;
    return r;
  }

  std::size_t size() const { return n_; }
  u64 modulus() const { return m_; }
  u64& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  ModMatrix operator*(const ModMatrix& o) const {
    ModMatrix r(n_, m_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t l = 0; l < n_; ++l) {
        u64 x = (*this)(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
          r(i, j) = add_mod(r(i, j), mul_mod(x, o(l, j), m_), m_);
      }
    return r;
  }

  std::vector<u64> apply(const std::vector<u64>& v) const {
    std::vector<u64> r(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      u64 s = 0;
      for (std::size_t j = 0; j < n_; ++j) s = add_mod(s, mul_mod((*this)(i, j), v[j], m_), m_);
      r[i] = s;
    }
    return r;
  }

  /// out = M v; out must not alias v.
  void apply_into(const u64* v, u64* out) const {
    for (std::size_t i = 0; i < n_; ++i) {
      u64 s = 0;
      for (std::size_t j = 0; j < n_; ++j) s = add_mod(s, mul_mod((*this)(i, j), v[j], m_), m_);
      out[i] = s;
    }
  }

  ModMatrix pow(u64 e) const {
    ModMatrix result = identity(n_, m_);
    ModMatrix base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

 private:
  std::size_t n_;
  u64 m_;
  std::vector<u64> a_;
};

}  // namespace lrdens
