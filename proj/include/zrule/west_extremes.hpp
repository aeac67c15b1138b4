#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zrule/factored_nat.hpp"
#include "zrule/triangle.hpp"

namespace zrule {

// Largest lambda with s_i = m + 1 - i*p in [0, m] for i = 1..lambda,
// i.e. floor((m + 1) / p). Requires 3 <= p <= m.
std::uint64_t lambda(std::uint64_t p, std::uint64_t m);

// Number of i with t_i = m + 1 - i*p even and in [0, m]; for even m this
// is the count of odd i <= floor((m + 1) / p). Requires 3 <= p < m, m even.
std::uint64_t mu(std::uint64_t p, std::uint64_t m);

enum class ExtremeKind { Minus1, Exact, Plus1 };

// Closed forms for W_P(2^g - 1), W_P(2^g), W_P(2^g + 1), g >= 2.
FactoredNat west_p_extreme(std::uint32_t g, ExtremeKind which);

enum class RowSource { Formula, Engine };

struct ExtremeRow {
  std::uint32_t g = 0;
  std::uint64_t m = 0;
  FactoredNat value;
  std::size_t omega = 0;
  RowSource source = RowSource::Engine;
  // Set for m in {2^g - 1, 2^g, 2^g + 1}: engine value equals the closed form.
  std::optional<bool> formula_agrees;
};

// Rows m = 2^g - 2 .. 2^g + 2 for every g in [g_min, g_max], from the
// engine, cross-checked against the closed forms.
std::vector<ExtremeRow> table_west_lag(std::uint32_t g_min, std::uint32_t g_max);
std::vector<ExtremeRow> table_west_lag(std::uint32_t g_min, std::uint32_t g_max,
                                       const WestEdge& west_p);

// Distinct values in increasing numeric order.
std::vector<FactoredNat> unique_ordered(const WestEdge& edge);

struct Conjecture3Entry {
  std::uint32_t g = 0;
  std::uint64_t index = 0;     // 2^g + 1
  FactoredNat expected;        // (2^g + 1) / largest square divisor
  FactoredNat engine;          // W_N*(2^g + 1)
  bool match = false;
};

struct Conjecture3Report {
  std::vector<Conjecture3Entry> entries;
  [[nodiscard]] bool all_match() const;
};

// g = 0..g_max; requires 2^g_max + 1 <= M_budget.
Conjecture3Report check_conjecture3(std::uint32_t g_max, std::size_t M_budget);
Conjecture3Report check_conjecture3(std::uint32_t g_max, const WestEdge& west_n);

struct ComparisonStats {
  std::size_t K = 0;
  std::vector<std::size_t> equality_indices;
  std::size_t equality_count = 0;
  // surplus_x[f] = #{m <= K : omega(W_x(m) / G(m)) = f}, G = gcd of both.
  std::vector<std::size_t> surplus_nstar;
  std::vector<std::size_t> surplus_p;
};

ComparisonStats comparison_stats(std::size_t K);
ComparisonStats comparison_stats(const WestEdge& west_n, const WestEdge& west_p, std::size_t K);

struct DivisorEntry {
  std::uint64_t prime = 0;
  bool divides = false;
};

struct DivisorListing {
  std::uint64_t m = 0;
  std::vector<DivisorEntry> primes;  // every prime <= m
  std::size_t omega = 0;
};

DivisorListing divisor_listing(std::uint64_t m);
DivisorListing divisor_listing(std::uint64_t m, const WestEdge& west_n);

}  // namespace zrule
