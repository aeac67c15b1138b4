#include "zrule/periodicity.hpp"

#include <stdexcept>

#include "zrule/primes.hpp"

namespace zrule {

namespace {

void require_odd_prime(std::uint64_t p, const char* who) {
  if (p < 3 || !is_prime_u64(p)) {
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
  }
}

std::vector<std::uint64_t> bound_divisors(std::uint64_t p, const PeriodOptions& opts,
                                          std::uint64_t& bound) {
  const std::uint64_t n = order_of_two(p);
  if (n > opts.max_order || n > 63) {
    throw std::range_error("period search: ord_p(2) = " + std::to_string(n) +
                           " exceeds the configured ceiling");
  }
  bound = (std::uint64_t{1} << n) - 1;
  return divisors(factor_u64(bound));
}

}  // namespace

std::uint64_t order_of_two(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("order_of_two: p must be odd and >= 3");
  std::uint64_t x = 2 % p;
  std::uint64_t n = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * 2 % p);
    ++n;
    if (n > p) throw std::invalid_argument("order_of_two: 2 is not a unit modulo p");
  }
  return n;
}

PeriodReport minimal_period(std::uint64_t p, const PeriodOptions& opts) {
  require_odd_prime(p, "minimal_period");
  PeriodReport rep;
  rep.prime = p;
  const auto divs = bound_divisors(p, opts, rep.bound);
  const CyclicBitRow row1 = CyclicBitRow::multiples_of(p);
  const CyclicBitRow row2 = row1.step();
  for (const auto d : divs) {
    if (row2.jump(d) == row2) {
      rep.minimal_period = d;
      break;
    }
  }
  if (rep.minimal_period == 0) {
    throw std::logic_error("minimal_period: no divisor of the bound is a period");
  }
  // Row 1 never recurs: pre-period is 1 unless row 1 is already periodic.
  rep.pre_period_rows = row1.jump(rep.minimal_period) == row1 ? 0 : 1;
  rep.witness = row2.to_string();
  return rep;
}

std::uint64_t minimal_period_full_width(std::uint64_t p, std::size_t width,
                                        const PeriodOptions& opts) {
  require_odd_prime(p, "minimal_period_full_width");
  std::uint64_t bound = 0;
  const auto divs = bound_divisors(p, opts, bound);
  const BitRow row1 = BitRow::multiples_of(p, width + 1 + bound);
  const BitRow row2 = row1.step();
  for (const auto d : divs) {
    const BitRow later = row2.jump(d);
    bool same = true;
    for (std::size_t k = 1; k <= width && same; ++k) same = later.get(k) == row2.get(k);
    if (same) return d;
  }
  throw std::logic_error("minimal_period_full_width: no divisor of the bound is a period");
}

bool west_bit(std::uint64_t p, std::uint64_t m) {
  require_odd_prime(p, "west_bit");
  if (m == 0) throw std::invalid_argument("west_bit: m must be >= 1");
  return CyclicBitRow::multiples_of(p).jump(m - 1).get(1);
}

std::uint64_t west_period(std::uint64_t p, const PeriodOptions& opts) {
  const std::uint64_t pi = minimal_period(p, opts).minimal_period;
  // seq[i] = v_p(W_P(i + 2)), two full periods.
  std::vector<std::uint8_t> seq;
  seq.reserve(2 * pi);
  CyclicBitRow row = CyclicBitRow::multiples_of(p).step();
  for (std::uint64_t i = 0; i < 2 * pi; ++i) {
    seq.push_back(row.get(1) ? 1 : 0);
    row = row.step();
  }
  for (const auto d : divisors(factor_u64(pi))) {
    bool ok = true;
    for (std::uint64_t i = 0; i < pi && ok; ++i) ok = seq[i] == seq[i + d];
    if (ok) return d;
  }
  return pi;
}

std::string ParityWord::to_string() const {
  std::string s;
  for (const auto& [sym, count] : blocks) {
    if (!s.empty()) s += ' ';
    s += static_cast<char>('0' + sym);
    if (count != 1) {
      s += '^';
      s += std::to_string(count);
    }
  }
  return s;
}

ParityWord binom_parity_word(std::uint64_t H) {
  ParityWord w;
  for (std::uint64_t k = 0; k <= H; ++k) {
    const std::uint8_t sym = binomial_is_odd(H, k) ? 1 : 0;
    if (!w.blocks.empty() && w.blocks.back().first == sym) {
      ++w.blocks.back().second;
    } else {
      w.blocks.emplace_back(sym, 1);
    }
  }
  return w;
}

}  // namespace zrule
