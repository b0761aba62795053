#include "lrdens/density.hpp"

#include <bit>

#include "lrdens/error.hpp"
#include "lrdens/modarith.hpp"
#include "lrdens/parallel.hpp"
#include "lrdens/primes.hpp"

namespace lrdens {

std::uint64_t count_A_naive(const Recurrence& rec, std::uint64_t x) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    if (n == 1 || gcd_u64(n, eval_mod(rec, n, n)) == 1) ++count;
  }
  return count;
}

namespace {

class BitRange {
 public:
  BitRange(std::uint64_t lo, std::uint64_t hi) : lo_(lo), words_((hi - lo + 64) / 64, 0) {}
  void set(std::uint64_t n) {
    const std::uint64_t i = n - lo_;
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  std::uint64_t popcount() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

 private:
  std::uint64_t lo_;
  std::vector<std::uint64_t> words_;
};

void mark_by_profile(const ModularProfile& prof, std::uint64_t first, std::uint64_t hi, BitRange& marks) {
  const std::uint64_t p = prof.prime;
  std::uint64_t n = first;
  for (; n <= hi && n < prof.preperiod; n += p)
    if (prof.head[n] == 0) marks.set(n);
  if (n > hi) return;
  const std::uint64_t step = p % prof.period;
  std::uint64_t r = n % prof.period;
  for (; n <= hi; n += p) {
    if (prof.zero_mask[r]) marks.set(n);
    r += step;
    if (r >= prof.period) r -= prof.period;
  }
}

void mark_by_hops(const Recurrence& rec, std::uint64_t p, std::uint64_t first, std::uint64_t hi, BitRange& marks) {
  const std::size_t k = rec.order();
  const ModMatrix comp = companion_matrix(rec, p);
  const ModMatrix hop = comp.pow(p);
  std::vector<std::uint64_t> state = comp.pow(first).apply(initial_state_mod(rec, p));
  std::vector<std::uint64_t> next(k);
  for (std::uint64_t n = first;; n += p) {
    if (state[0] == 0) marks.set(n);
    if (hi - n < p) break;
    hop.apply_into(state.data(), next.data());
    state.swap(next);
  }
}

}  // namespace

std::uint64_t count_A_sieve_range(const Recurrence& rec, std::uint64_t lo, std::uint64_t hi,
                                  std::span<const std::uint64_t> primes, const SieveOptions& opts) {
  if (lo < 1 || hi < lo) throw Error(ErrorKind::InvalidArgument, "empty sieve range");
  BitRange marks(lo, hi);
  for (std::uint64_t p : primes) {
    if (p > hi) break;
    const std::uint64_t first = std::max(p, (lo + p - 1) / p * p);
    if (first > hi) continue;
    const std::uint64_t multiples = (hi - first) / p + 1;
    bool done = false;
    // A period walk only pays off when it is short next to the multiples.
    if (p <= multiples) {
      const std::uint64_t budget = std::min({opts.state_cap, opts.profile_bit_budget, 4 * multiples + 64});
      if (auto prof = try_modular_profile(rec, p, budget)) {
        mark_by_profile(*prof, first, hi, marks);
        done = true;
      }
    }
    if (!done) mark_by_hops(rec, p, first, hi, marks);
  }
  return (hi - lo + 1) - marks.popcount();
}

std::uint64_t count_A_sieve(const Recurrence& rec, std::uint64_t x, const SieveOptions& opts) {
  if (x == 0) return 0;
  const std::vector<std::uint64_t> primes = primes_up_to(x);
  const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(opts.blocks ? opts.blocks : opts.threads, x));
  std::vector<std::uint64_t> counts(blocks, 0);
  const std::uint64_t span = (x + blocks - 1) / blocks;
  parallel_for(blocks, opts.threads, [&](std::size_t b) {
    const std::uint64_t lo = 1 + b * span;
    if (lo > x) return;
    const std::uint64_t hi = std::min(x, lo + span - 1);
    counts[b] = count_A_sieve_range(rec, lo, hi, primes, opts);
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace lrdens
