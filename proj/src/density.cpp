#include "lrdens/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "lrdens/char_data.hpp"
#include "lrdens/error.hpp"
#include "lrdens/primes.hpp"

namespace lrdens {

namespace {

std::vector<ModularProfile> profiles_up_to(const Recurrence& rec, std::uint64_t y, std::uint64_t state_cap) {
  if (y < 2) throw Error(ErrorKind::InvalidArgument, "y must be at least 2");
  std::vector<ModularProfile> out;
  for (std::uint64_t p : primes_up_to(y)) out.push_back(modular_profile(rec, p, state_cap));
  return out;
}

BigInt full_modulus(const std::vector<ModularProfile>& profs) {
  BigInt l = 1;
  for (const auto& pr : profs) l = lcm(l, lcm(from_u64(pr.prime), from_u64(pr.period)));
  return l;
}

// Eventual event "p | n and p | u_n" for n in residue class r of a window
// that is a multiple of lcm(p, period).
bool eventual_hit(const ModularProfile& pr, std::uint64_t r) {
  return r % pr.prime == 0 && pr.zero_mask[r % pr.period];
}

// Some n in the eventual cycle has p | n and p | u_n.
bool ever_hits(const ModularProfile& pr) {
  if (pr.period % pr.prime != 0) return std::find(pr.zero_mask.begin(), pr.zero_mask.end(), true) != pr.zero_mask.end();
  for (std::uint64_t j = 0; j < pr.period; j += pr.prime)
    if (pr.zero_mask[j]) return true;
  return false;
}

[[noreturn]] void window_too_large(const BigInt& window, const BigInt& modulus, std::uint64_t cap) {
  throw Error(ErrorKind::ModulusCapExceeded, "window " + window.get_str() + " (modulus L = " + modulus.get_str() +
                                                 ") exceeds cap " + std::to_string(cap) +
                                                 "; use the Monte Carlo estimate");
}

}  // namespace

DeltaResult delta_y_full_window(const Recurrence& rec, std::uint64_t y, std::uint64_t window_cap,
                                std::uint64_t state_cap) {
  const auto profs = profiles_up_to(rec, y, state_cap);
  const BigInt l = full_modulus(profs);
  if (l > from_u64(window_cap)) window_too_large(l, l, window_cap);
  const std::uint64_t window = l.get_ui();
  std::vector<bool> marked(window, false);
  for (const auto& pr : profs)
    for (std::uint64_t n = 0; n < window; n += pr.prime)
      if (pr.zero_mask[n % pr.period]) marked[n] = true;
  std::uint64_t count = 0;
  for (bool b : marked) count += b;
  DeltaResult res{Rational(from_u64(count), l), l, window};
  res.delta.canonicalize();
  return res;
}

DeltaResult delta_y(const Recurrence& rec, std::uint64_t y, std::uint64_t window_cap, std::uint64_t state_cap) {
  const auto profs = profiles_up_to(rec, y, state_cap);
  const BigInt l = full_modulus(profs);

  std::vector<const ModularProfile*> live;
  for (const auto& pr : profs)
    if (ever_hits(pr)) live.push_back(&pr);
  BigInt periods = 1;
  for (const auto* pr : live) periods = lcm(periods, from_u64(pr->period));
  std::vector<const ModularProfile*> coupled, independent;
  BigInt window = periods;
  for (const auto* prp : live) {
    const auto& pr = *prp;
    if (mpz_divisible_ui_p(periods.get_mpz_t(), pr.prime)) {
      coupled.push_back(&pr);
      window = lcm(window, from_u64(pr.prime));
    } else {
      independent.push_back(&pr);
    }
  }
  if (window > from_u64(window_cap)) window_too_large(window, l, window_cap);
  const std::uint64_t w = window.get_ui();

  // For each residue r mod w outside the coupled events, the independent
  // primes that can still fire at r; each survives with probability 1 - 1/p.
  std::map<std::vector<std::uint64_t>, std::uint64_t> survivors;
  const std::size_t words = (independent.size() + 63) / 64;
  std::vector<std::uint64_t> sig(words);
  for (std::uint64_t r = 0; r < w; ++r) {
    bool hit = false;
    for (const auto* pr : coupled)
      if (eventual_hit(*pr, r)) {
        hit = true;
        break;
      }
    if (hit) continue;
    std::fill(sig.begin(), sig.end(), 0);
    for (std::size_t i = 0; i < independent.size(); ++i)
      if (independent[i]->zero_mask[r % independent[i]->period]) sig[i >> 6] |= std::uint64_t{1} << (i & 63);
    ++survivors[sig];
  }

  Rational clear = 0;
  for (const auto& [bits, count] : survivors) {
    Rational term = Rational(from_u64(count));
    for (std::size_t i = 0; i < independent.size(); ++i)
      if (bits[i >> 6] >> (i & 63) & 1) {
        const unsigned long p = independent[i]->prime;
        term *= Rational(p - 1, p);
      }
    clear += term;
  }
  DeltaResult res{1 - clear / Rational(window), l, w};
  res.delta.canonicalize();
  return res;
}

DeltaEstimate delta_y_monte_carlo(const Recurrence& rec, std::uint64_t y, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error(ErrorKind::InvalidArgument, "need at least one sample");
  const auto primes = primes_up_to(y);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, std::uint64_t{1} << 62);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::uint64_t n = dist(rng);
    for (std::uint64_t p : primes)
      if (n % p == 0 && eval_mod(rec, n, p) == 0) {
        ++hits;
        break;
      }
  }
  DeltaEstimate e;
  e.samples = samples;
  e.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  e.std_error = std::sqrt(e.estimate * (1 - e.estimate) / static_cast<double>(samples));
  return e;
}

std::uint64_t count_C_minus(const Recurrence& rec, std::uint64_t y, std::uint64_t x, std::uint64_t state_cap) {
  if (y < 2) throw Error(ErrorKind::InvalidArgument, "y must be at least 2");
  std::vector<bool> marked(x + 1, false);
  for (std::uint64_t p : primes_up_to(y)) {
    if (p > x) break;
    const std::uint64_t multiples = x / p;
    const auto pr = try_modular_profile(rec, p, std::min<std::uint64_t>(state_cap, 4 * multiples + 64));
    for (std::uint64_t n = p; n <= x; n += p)
      if (pr ? pr->is_zero_at(n) : eval_mod(rec, n, p) == 0) marked[n] = true;
  }
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n) count += marked[n];
  return count;
}

Rational mertens_product(std::uint64_t y) {
  Rational prod = 1;
  for (std::uint64_t p : primes_up_to(y)) prod *= Rational(from_u64(p - 1), from_u64(p));
  prod.canonicalize();
  return prod;
}

TailReport tail_report(const Decomposition& decomp, std::uint64_t y, std::uint64_t pmax,
                       std::optional<Rational> gamma, unsigned threads) {
  if (decomp.w_is_zero) throw Error(ErrorKind::NotApplicable, "w vanishes; A_u is finite and has no tail");
  const CharData cdw = char_data(decomp.w_char);
  if (!is_nondegenerate(cdw)) throw Error(ErrorKind::DegenerateW, "w is a degenerate recurrence");

  TailReport rep;
  rep.gamma = gamma.value_or(default_gamma(cdw.order()));
  rep.gamma.canonicalize();
  TProfile prof = t_profile(cdw, pmax, rep.gamma, threads);
  for (auto& e : prof.entries) {
    if (e.prime <= y) continue;
    const Rational inv_p(1, static_cast<unsigned long>(e.prime));
    switch (e.value.kind) {
      case TValue::Kind::Finite: {
        ++rep.resolved;
        const Rational c = e.value.value == 0 ? inv_p : inv_p / Rational(from_u64(e.value.value));
        rep.tail_lo += c;
        rep.tail_hi += c;
        break;
      }
      case TValue::Kind::Infinite:
        ++rep.infinite;
        break;
      case TValue::Kind::CappedAtLeast:
        ++rep.capped;
        rep.tail_hi += inv_p / Rational(from_u64(e.value.value));
        break;
    }
    rep.ramified += e.value.ramified;
    rep.members += e.member;
    rep.entries.push_back(e);
  }
  rep.tail_lo.canonicalize();
  rep.tail_hi.canonicalize();
  return rep;
}

DensityReport density_report(const Recurrence& rec, std::uint64_t x, std::uint64_t y, std::uint64_t pmax,
                             const DensityOptions& opts) {
  if (x < 1) throw Error(ErrorKind::InvalidArgument, "x must be at least 1");
  const CharData cd = char_data(rec);
  if (!is_nondegenerate(cd)) throw Error(ErrorKind::Degenerate, "recurrence is degenerate");
  const Decomposition decomp = decompose(rec, cd);
  if (decomp.w_is_zero != un_over_n_recurrence_by_fit(rec))
    throw Error(ErrorKind::Inconsistency, "classifier routes disagree on whether u_n / n is a recurrence");

  DensityReport rep;
  rep.x = x;
  rep.y = y;
  rep.pmax = pmax;
  rep.mertens_product = mertens_product(y);

  if (decomp.w_is_zero) {
    rep.finite_set = enumerate_finite_A(rec, decomp);
    for (const auto& n : *rep.finite_set) rep.count_A += n <= from_u64(x);
    rep.count_C = x - rep.count_A;
    rep.empirical_C_ratio = Rational(from_u64(rep.count_C), from_u64(x));
    rep.empirical_C_ratio.canonicalize();
    return rep;
  }

  rep.count_A = count_A_sieve(rec, x, opts.sieve);
  rep.count_C = x - rep.count_A;
  rep.empirical_C_ratio = Rational(from_u64(rep.count_C), from_u64(x));
  rep.empirical_C_ratio.canonicalize();

  try {
    rep.delta = delta_y(rec, y, opts.window_cap, opts.sieve.state_cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ModulusCapExceeded) throw;
    rep.delta_estimate = delta_y_monte_carlo(rec, y, opts.monte_carlo_samples, opts.seed);
  }
  if (rep.delta) {
    const Rational excess = rep.delta->delta - rep.empirical_C_ratio;
    rep.delta_bound_ok = excess <= 0 || excess * excess * Rational(from_u64(x)) <= 4;
  }
  rep.tail = tail_report(decomp, y, pmax, opts.gamma, opts.sieve.threads);
  return rep;
}

}  // namespace lrdens
