#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace zrule {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer held as its sorted prime factorization. The empty
// factorization is 1. Cell values of every triangle live in this form only.
class FactoredNat {
 public:
  FactoredNat() = default;

  // Takes factors in any order; merges repeated primes and drops zero
  // exponents. Throws std::invalid_argument on a prime < 2.
  explicit FactoredNat(std::vector<PrimePower> factors);
  FactoredNat(std::initializer_list<PrimePower> factors)
      : FactoredNat(std::vector<PrimePower>(factors)) {}

  static FactoredNat prime_power(std::uint64_t p, std::uint32_t e);

  [[nodiscard]] std::span<const PrimePower> factors() const { return factors_; }
  [[nodiscard]] bool is_one() const { return factors_.empty(); }
  [[nodiscard]] std::uint32_t max_exponent() const;

  // Exact value when it fits in 64 bits, otherwise false is returned and
  // `out` is untouched.
  bool try_value(std::uint64_t& out) const;

  // Natural log of the value; used only as a fast ordering key.
  [[nodiscard]] double log_value() const;

  friend bool operator==(const FactoredNat&, const FactoredNat&) = default;

 private:
  struct Sorted {};
  FactoredNat(Sorted, std::vector<PrimePower> f) : factors_(std::move(f)) {}

  std::vector<PrimePower> factors_;

  friend FactoredNat z_rule(const FactoredNat&, const FactoredNat&);
  friend FactoredNat squarefree_kernel(const FactoredNat&);
  friend FactoredNat gcd(const FactoredNat&, const FactoredNat&);
  friend FactoredNat exact_quotient(const FactoredNat&, const FactoredNat&);
};

// Z(a, b) = ab / gcd(a, b)^2; per prime the exponent is |v_p(a) - v_p(b)|.
FactoredNat z_rule(const FactoredNat& a, const FactoredNat& b);

std::uint32_t valuation(const FactoredNat& a, std::uint64_t p);

// Product of the distinct primes dividing n.
FactoredNat squarefree_kernel(const FactoredNat& n);

std::size_t omega(const FactoredNat& n);

bool is_squarefree(const FactoredNat& n);

FactoredNat gcd(const FactoredNat& a, const FactoredNat& b);

// a / b; throws std::domain_error when b does not divide a.
FactoredNat exact_quotient(const FactoredNat& a, const FactoredNat& b);

// Exact base-10 rendering.
std::string decimal_string(const FactoredNat& n);

// Three significant digits, truncated, e.g. "2.79e18". Values below 1000
// are printed exactly.
std::string scientific_string(const FactoredNat& n);

// "3^2*11*331"; "1" for the empty factorization.
std::string factor_string(const FactoredNat& n);

// Total order by numeric value. Logarithms decide unless they are within
// 1e-9 relative distance, then exact big-integer comparison is used.
std::strong_ordering compare_value(const FactoredNat& a, const FactoredNat& b);

}  // namespace zrule
