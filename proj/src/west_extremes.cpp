#include "zrule/west_extremes.hpp"

#include <algorithm>
#include <stdexcept>

#include "zrule/primes.hpp"

namespace zrule {

namespace {

std::uint64_t pow2(std::uint32_t g) {
  if (g > 62) throw std::invalid_argument("2^g out of range");
  return std::uint64_t{1} << g;
}

}  // namespace

std::uint64_t lambda(std::uint64_t p, std::uint64_t m) {
  if (p < 3 || p > m) throw std::invalid_argument("lambda: need 3 <= p <= m");
  return (m + 1) / p;
}

std::uint64_t mu(std::uint64_t p, std::uint64_t m) {
  if (m % 2 != 0) throw std::invalid_argument("mu: m must be even");
  if (p < 3 || p >= m) throw std::invalid_argument("mu: need 3 <= p < m");
  // m even, p odd: m + 1 - i*p is even exactly for odd i.
  return ((m + 1) / p + 1) / 2;
}

FactoredNat west_p_extreme(std::uint32_t g, ExtremeKind which) {
  if (g < 2) throw std::invalid_argument("west_p_extreme: g must be >= 2");
  const std::uint64_t n = pow2(g);
  std::vector<PrimePower> f;
  switch (which) {
    case ExtremeKind::Minus1: {
      const std::uint64_t m = n - 2;
      const PrimeTable table(static_cast<std::uint32_t>(n));
      for (const auto p : table.primes()) {
        if (p >= 3 && p + 3 <= n && mu(p, m) % 2 == 1) f.push_back({p, 1});
      }
      // A Mersenne prime 2^g - 1 = m + 1 contributes X^{p - m} = X.
      if (is_prime_u64(n - 1)) f.push_back({n - 1, 1});
      break;
    }
    case ExtremeKind::Exact: {
      const std::uint64_t m = n - 1;
      const PrimeTable table(static_cast<std::uint32_t>(n));
      for (const auto p : table.primes()) {
        if (p >= 3 && p <= m && lambda(p, m) % 2 == 1) f.push_back({p, 1});
      }
      break;
    }
    case ExtremeKind::Plus1:
      return squarefree_kernel(factor_u64(n + 1));
  }
  return FactoredNat(std::move(f));
}

std::vector<ExtremeRow> table_west_lag(std::uint32_t g_min, std::uint32_t g_max,
                                       const WestEdge& west_p) {
  if (g_min < 2 || g_min > g_max) throw std::invalid_argument("table_west_lag: need 2 <= g_min <= g_max");
  if (west_p.size() < pow2(g_max) + 2) throw std::invalid_argument("table_west_lag: west edge too short");
  std::vector<ExtremeRow> rows;
  for (std::uint32_t g = g_min; g <= g_max; ++g) {
    const std::uint64_t n = pow2(g);
    for (std::uint64_t m = n - 2; m <= n + 2; ++m) {
      ExtremeRow row;
      row.g = g;
      row.m = m;
      row.value = west_p.at(m);
      row.omega = omega(row.value);
      row.source = RowSource::Engine;
      if (m + 1 == n) row.formula_agrees = west_p_extreme(g, ExtremeKind::Minus1) == row.value;
      if (m == n) row.formula_agrees = west_p_extreme(g, ExtremeKind::Exact) == row.value;
      if (m == n + 1) row.formula_agrees = west_p_extreme(g, ExtremeKind::Plus1) == row.value;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<ExtremeRow> table_west_lag(std::uint32_t g_min, std::uint32_t g_max) {
  if (g_max > 24) throw std::invalid_argument("table_west_lag: g_max beyond engine budget");
  return table_west_lag(g_min, g_max,
                        west_edge(InitialGeneration::squarefree_kernels(), pow2(g_max) + 2));
}

std::vector<FactoredNat> unique_ordered(const WestEdge& edge) {
  std::vector<FactoredNat> v = edge.terms;
  std::sort(v.begin(), v.end(), [](const FactoredNat& a, const FactoredNat& b) {
    return compare_value(a, b) == std::strong_ordering::less;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool Conjecture3Report::all_match() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.match; });
}

Conjecture3Report check_conjecture3(std::uint32_t g_max, const WestEdge& west_n) {
  Conjecture3Report rep;
  for (std::uint32_t g = 0; g <= g_max; ++g) {
    const std::uint64_t idx = pow2(g) + 1;
    if (idx > west_n.size()) throw std::invalid_argument("check_conjecture3: 2^g + 1 exceeds the budget");
    const FactoredNat n = factor_u64(idx);
    std::vector<PrimePower> square;
    for (const auto& f : n.factors()) {
      if (f.exponent >= 2) square.push_back({f.prime, f.exponent - f.exponent % 2});
    }
    Conjecture3Entry e;
    e.g = g;
    e.index = idx;
    e.expected = exact_quotient(n, FactoredNat(std::move(square)));
    e.engine = west_n.at(idx);
    e.match = e.expected == e.engine;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

Conjecture3Report check_conjecture3(std::uint32_t g_max, std::size_t M_budget) {
  const std::uint64_t need = pow2(g_max) + 1;
  if (need > M_budget) throw std::invalid_argument("check_conjecture3: 2^g_max + 1 exceeds M_budget");
  return check_conjecture3(g_max, west_edge(InitialGeneration::naturals(), need));
}

ComparisonStats comparison_stats(const WestEdge& west_n, const WestEdge& west_p, std::size_t K) {
  if (west_n.size() < K || west_p.size() < K) throw std::invalid_argument("comparison_stats: edges too short");
  ComparisonStats s;
  s.K = K;
  for (std::size_t m = 1; m <= K; ++m) {
    const auto& a = west_n.at(m);
    const auto& b = west_p.at(m);
    if (a == b) s.equality_indices.push_back(m);
    const FactoredNat G = gcd(a, b);
    const std::size_t fa = omega(exact_quotient(a, G));
    const std::size_t fb = omega(exact_quotient(b, G));
    if (s.surplus_nstar.size() <= fa) s.surplus_nstar.resize(fa + 1, 0);
    if (s.surplus_p.size() <= fb) s.surplus_p.resize(fb + 1, 0);
    ++s.surplus_nstar[fa];
    ++s.surplus_p[fb];
  }
  s.equality_count = s.equality_indices.size();
  const std::size_t width = std::max(s.surplus_nstar.size(), s.surplus_p.size());
  s.surplus_nstar.resize(width, 0);
  s.surplus_p.resize(width, 0);
  return s;
}

ComparisonStats comparison_stats(std::size_t K) {
  return comparison_stats(west_edge(InitialGeneration::naturals(), K),
                          west_edge(InitialGeneration::squarefree_kernels(), K), K);
}

DivisorListing divisor_listing(std::uint64_t m, const WestEdge& west_n) {
  DivisorListing out;
  out.m = m;
  if (m < 2) return out;
  const FactoredNat& w = west_n.at(m);
  const PrimeTable table(static_cast<std::uint32_t>(m));
  for (const auto p : table.primes()) {
    const bool d = valuation(w, p) > 0;
    out.primes.push_back({p, d});
    if (d) ++out.omega;
  }
  return out;
}

DivisorListing divisor_listing(std::uint64_t m) {
  if (m < 2) return DivisorListing{m, {}, 0};
  return divisor_listing(m, west_edge(InitialGeneration::naturals(), m));
}

}  // namespace zrule
