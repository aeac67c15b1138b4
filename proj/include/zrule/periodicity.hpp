#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zrule/bit_row.hpp"

namespace zrule {

// Least n >= 1 with 2^n = 1 (mod p). Throws for p = 2 or p < 2.
std::uint64_t order_of_two(std::uint64_t p);

struct PeriodReport {
  std::uint64_t prime = 0;
  std::uint64_t pre_period_rows = 0;
  std::uint64_t minimal_period = 0;
  std::uint64_t bound = 0;     // 2^{ord_p(2)} - 1
  std::string witness;         // row 2 over one column period
};

struct PeriodOptions {
  // Largest ord_p(2) for which 2^n - 1 is factored.
  std::uint32_t max_order = 62;
};

// Minimal row period of v_p(T_P) from row 2 on, found among the divisors
// of 2^{ord_p(2)} - 1 in increasing order. Throws std::range_error when
// ord_p(2) exceeds opts.max_order.
PeriodReport minimal_period(std::uint64_t p, const PeriodOptions& opts = {});

// Same decision made on uncompressed rows of width `width` (plus the
// jump distance); used to cross-check the compressed search.
std::uint64_t minimal_period_full_width(std::uint64_t p, std::size_t width,
                                        const PeriodOptions& opts = {});

// v_p(W_P(m)) for odd p, m >= 1.
bool west_bit(std::uint64_t p, std::uint64_t m);

// Minimal period of m -> v_p(W_P(m)) for m >= 2; always divides pi_p.
std::uint64_t west_period(std::uint64_t p, const PeriodOptions& opts = {});

// Run-length word of C(H, k) mod 2, k = 0..H.
struct ParityWord {
  std::vector<std::pair<std::uint8_t, std::uint64_t>> blocks;  // (symbol, count)

  // "1^2 0^2 1^2 0^10 ..."; a block of count 1 is the bare symbol.
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const ParityWord&, const ParityWord&) = default;
};

ParityWord binom_parity_word(std::uint64_t H);

}  // namespace zrule
