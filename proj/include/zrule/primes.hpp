#pragma once

#include <cstdint>
#include <vector>

#include "zrule/factored_nat.hpp"

namespace zrule {

// Least-prime-factor sieve over 1..limit.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint32_t limit);

  [[nodiscard]] std::uint32_t limit() const { return limit_; }
  // 0 for n = 1.
  [[nodiscard]] std::uint32_t smallest_prime_factor(std::uint32_t n) const;
  [[nodiscard]] bool is_prime(std::uint32_t n) const;
  // Ascending primes <= limit.
  [[nodiscard]] const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// Throws std::out_of_range when n is 0 or above table.limit().
FactoredNat factorize(std::uint64_t n, const PrimeTable& table);

// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Full factorization of an arbitrary 64-bit value: trial division up to
// `trial_bound`, Pollard rho on what remains.
FactoredNat factor_u64(std::uint64_t n, std::uint64_t trial_bound = 1u << 16);

// All divisors of n, ascending, from its factorization.
std::vector<std::uint64_t> divisors(const FactoredNat& n);

}  // namespace zrule
