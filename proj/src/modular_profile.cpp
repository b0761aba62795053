#include "lrdens/modular_profile.hpp"

#include <unordered_map>

#include "lrdens/error.hpp"

namespace lrdens {

namespace {

struct StateHash {
  std::size_t operator()(const std::vector<u64>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (u64 x : v) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

void step(std::vector<u64>& state, const std::vector<u64>& a, u64 p) {
  const std::size_t k = state.size();
  u64 next = 0;
  for (std::size_t i = 1; i <= k; ++i) next = add_mod(next, mul_mod(a[i - 1], state[k - i], p), p);
  for (std::size_t i = 0; i + 1 < k; ++i) state[i] = state[i + 1];
  state[k - 1] = next;
}

}  // namespace

std::vector<std::uint64_t> ModularProfile::zeros() const {
  std::vector<u64> z;
  for (u64 r = 0; r < period; ++r)
    if (zero_mask[r]) z.push_back(r);
  return z;
}

ModularProfile modular_profile(const Recurrence& rec, std::uint64_t p, std::uint64_t state_cap) {
  auto prof = try_modular_profile(rec, p, state_cap);
  if (!prof)
    throw Error(ErrorKind::StateSpaceCapExceeded,
                "no cycle within " + std::to_string(state_cap) + " states mod " + std::to_string(p));
  return std::move(*prof);
}

std::optional<ModularProfile> try_modular_profile(const Recurrence& rec, std::uint64_t p, std::uint64_t state_cap) {
  if (p < 2) throw Error(ErrorKind::BadModulus, "modulus must be at least 2");
  const std::size_t k = rec.order();
  std::vector<u64> a(k);
  for (std::size_t i = 0; i < k; ++i) a[i] = mod_u64(rec.coeffs()[i], p);
  const std::vector<u64> init = initial_state_mod(rec, p);

  ModularProfile prof;
  prof.prime = p;

  if (gcd_u64(a[k - 1], p) == 1) {
    // Invertible state map: purely periodic, period = first return.
    std::vector<bool> zeros;
    std::vector<u64> state = init;
    u64 n = 0;
    do {
      if (n >= state_cap) return std::nullopt;
      zeros.push_back(state[0] == 0);
      step(state, a, p);
      ++n;
    } while (state != init);
    prof.preperiod = 0;
    prof.period = n;
    prof.zero_mask = std::move(zeros);
    return prof;
  }

  std::unordered_map<std::vector<u64>, u64, StateHash> seen;
  std::vector<u64> values;
  std::vector<u64> state = init;
  for (u64 n = 0;; ++n) {
    auto [it, inserted] = seen.emplace(state, n);
    if (!inserted) {
      prof.preperiod = it->second;
      prof.period = n - it->second;
      break;
    }
    if (n >= state_cap) return std::nullopt;
    values.push_back(state[0]);
    step(state, a, p);
  }
  prof.head.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(prof.preperiod));
  prof.zero_mask.assign(prof.period, false);
  for (u64 n = prof.preperiod; n < prof.preperiod + prof.period; ++n) prof.zero_mask[n % prof.period] = values[n] == 0;
  return prof;
}

}  // namespace lrdens
