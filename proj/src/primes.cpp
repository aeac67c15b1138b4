#include "zrule/primes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zrule {

PrimeTable::PrimeTable(std::uint32_t limit) : limit_(limit), spf_(std::size_t{limit} + 1, 0) {
  for (std::uint32_t i = 2; i <= limit_; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t next = std::uint64_t{p} * i;
      if (p > spf_[i] || next > limit_) break;
      spf_[next] = p;
    }
  }
}

std::uint32_t PrimeTable::smallest_prime_factor(std::uint32_t n) const {
  if (n == 0 || n > limit_) throw std::out_of_range("PrimeTable: n out of range");
  return spf_[n];
}

bool PrimeTable::is_prime(std::uint32_t n) const {
  return n >= 2 && n <= limit_ && spf_[n] == n;
}

FactoredNat factorize(std::uint64_t n, const PrimeTable& table) {
  if (n == 0 || n > table.limit()) {
    throw std::out_of_range("factorize: " + std::to_string(n) + " outside sieve range 1.." +
                            std::to_string(table.limit()));
  }
  std::vector<PrimePower> out;
  auto m = static_cast<std::uint32_t>(n);
  while (m > 1) {
    const std::uint32_t p = table.smallest_prime_factor(m);
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return FactoredNat(std::move(out));
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void split(std::uint64_t n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back({n, 1});
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FactoredNat factor_u64(std::uint64_t n, std::uint64_t trial_bound) {
  if (n == 0) throw std::invalid_argument("factor_u64: zero has no factorization");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= trial_bound && p * p <= n; p += (p == 2 ? 1 : 2)) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  split(n, out);
  return FactoredNat(std::move(out));
}

std::vector<std::uint64_t> divisors(const FactoredNat& n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& f : n.factors()) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zrule
