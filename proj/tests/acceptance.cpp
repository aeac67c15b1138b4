// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zrule/bit_row.hpp"
#include "zrule/kernels.hpp"
#include "zrule/periodicity.hpp"
#include "zrule/primes.hpp"
#include "zrule/render.hpp"
#include "zrule/report_io.hpp"
#include "zrule/solitons.hpp"
#include "zrule/triangle.hpp"
#include "zrule/west_extremes.hpp"
#include "zrule/words.hpp"

using namespace zrule;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::uint64_t u64(const FactoredNat& n) {
  std::uint64_t v = 0;
  return n.try_value(v) ? v : 0;
}

std::vector<std::uint64_t> prime_list(const FactoredNat& n) {
  std::vector<std::uint64_t> v;
  for (const auto& f : n.factors()) v.push_back(f.prime);
  return v;
}

// Shared engine runs.
const WestEdge& west_n() {
  static const WestEdge w = west_edge(InitialGeneration::naturals(), 8200);
  return w;
}
const WestEdge& west_p() {
  static const WestEdge w = west_edge(InitialGeneration::squarefree_kernels(), 8200);
  return w;
}

Outcome figure1() {
  Outcome o;
  const Triangle t = build_triangle(InitialGeneration::naturals(), 12);
  const std::vector<std::vector<std::uint64_t>> fig = {
      {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
      {2, 6, 12, 20, 30, 42, 56, 72, 90, 110, 132},
      {3, 2, 15, 6, 35, 12, 63, 20, 99, 30},
      {6, 30, 10, 210, 420, 84, 1260, 1980, 330},
      {5, 3, 21, 2, 5, 15, 77, 6},
      {15, 7, 42, 10, 3, 1155, 462},
      {105, 6, 105, 30, 385, 10},
      {70, 70, 14, 462, 154},
      {1, 5, 33, 3},
      {5, 165, 11},
      {33, 15},
      {55},
  };
  std::size_t cells = 0;
  for (std::size_t j = 1; j <= fig.size(); ++j) {
    for (std::size_t k = 1; k <= fig[j - 1].size(); ++k, ++cells) {
      o.expect(u64(t.at(j, k)) == fig[j - 1][k - 1], "cell (" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
  }
  o.detail = o.ok ? std::to_string(cells) + " printed cells" : o.detail;
  return o;
}

Outcome west_lists() {
  Outcome o;
  const std::vector<std::uint64_t> wn = {1,     2,      3,      6,     5,         15,       105,  70,  1,
                                         5,     33,     55,     65,    273,       1001,     1430, 17,  17,
                                         969,   4845,   1785,   6545,  37145,     81719,    17,   1105,
                                         3553,  969969, 672945, 81345, 955049953, 66786710, 33,   561, 385};
  const std::vector<std::uint64_t> wp = {1,       2,     3,     3,           5,       15,    105,   35,   3,
                                         15,      11,    165,   195,         91,      3003,  2145,  17,   51,
                                         969,     1615,  1785,  19635,       37145,   245157, 255,  221,
                                         53295,   4849845, 44863, 16269,     14325749295ull, 6678671, 33, 561, 385};
  const WestEdge a = west_edge(InitialGeneration::naturals(), 35);
  const WestEdge b = west_edge(InitialGeneration::squarefree_kernels(), 35);
  std::vector<std::size_t> eq;
  for (std::size_t m = 1; m <= 35; ++m) {
    o.expect(u64(a.at(m)) == wn[m - 1], "W_N*(" + std::to_string(m) + ")");
    o.expect(u64(b.at(m)) == wp[m - 1], "W_P(" + std::to_string(m) + ")");
    if (a.at(m) == b.at(m)) eq.push_back(m);
  }
  o.expect(eq == std::vector<std::size_t>{1, 2, 3, 5, 6, 7, 17, 19, 21, 23, 33, 34, 35}, "equality indices");
  if (o.ok) o.detail = "35 + 35 terms, 13 equalities";
  return o;
}

Outcome periods() {
  Outcome o;
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> want = {
      {3, 3}, {5, 15}, {7, 7}, {11, 341}, {13, 819}, {17, 255}, {19, 9709}, {31, 31}, {127, 127}};
  for (const auto& [p, pi] : want) {
    const PeriodReport r = minimal_period(p);
    o.expect(r.minimal_period == pi, "pi_" + std::to_string(p) + " = " + std::to_string(r.minimal_period));
    o.expect(r.bound == (std::uint64_t{1} << order_of_two(p)) - 1 && r.bound % pi == 0,
             "bound for p=" + std::to_string(p));
  }
  // Brute-force oracle for the smaller periods: rows of v_p(T_P) itself.
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
    const std::uint64_t pi = minimal_period(p).minimal_period;
    const std::size_t width = 100;
    const Tomography t = tomography(InitialGeneration::squarefree_kernels(), p, 2 + pi + width);
    std::uint64_t first = 0;
    for (std::uint64_t d = 1; d <= pi && !first; ++d) {
      if (std::ranges::equal(t.row(2 + d).first(width), t.row(2).first(width))) first = d;
    }
    o.expect(first == pi, "brute-force period for p=" + std::to_string(p));
  }
  if (o.ok) o.detail = "9 primes, 6 cross-checked by row search";
  return o;
}

Outcome west_bits5() {
  Outcome o;
  const std::vector<int> want{0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 0, 1};
  const WestEdge w = west_edge(InitialGeneration::squarefree_kernels(), 16);
  for (std::uint64_t m = 1; m <= 16; ++m) {
    o.expect(west_bit(5, m) == (want[m - 1] == 1), "bit m=" + std::to_string(m));
    o.expect(valuation(w.at(m), 5) == static_cast<std::uint32_t>(want[m - 1]), "engine m=" + std::to_string(m));
  }
  if (o.ok) o.detail = "GF(2) jump and engine agree on m = 1..16";
  return o;
}

Outcome theorem3() {
  Outcome o;
  const Tomography t = tomography(InitialGeneration::naturals(), 2, 512);
  std::size_t all = 0, below_first = 0, bad = 0;
  for (std::size_t j = 1; j <= 512; ++j) {
    const auto r = t.row(j);
    for (std::size_t i = 0; i < r.size(); ++i) {
      ++all;
      if (j >= 2) ++below_first;
      bad += predict_v2(j, i + 1) != r[i];
    }
  }
  o.expect(bad == 0, std::to_string(bad) + " mismatches");
  o.expect(below_first == 130816, "rows 2..512 hold " + std::to_string(below_first) + " cells");
  if (o.ok) o.detail = std::to_string(all) + " cells (" + std::to_string(below_first) + " below row 1)";
  return o;
}

Outcome corollary1() {
  Outcome o;
  const V2Profile v = v2_west_profile(1024);
  for (std::size_t m = 1; m <= 1024; ++m) {
    const bool pow2 = m >= 2 && std::has_single_bit(m);
    o.expect(valuation(west_n().at(m), 2) == (pow2 ? 1u : 0u), "v2 at m=" + std::to_string(m));
  }
  o.expect(v.ok(), "profile");
  if (o.ok) o.detail = "m <= 1024, no west term divisible by 4";
  return o;
}

Outcome theorem5() {
  Outcome o;
  for (std::uint32_t g = 4; g <= 10; ++g) {
    const std::uint64_t n = std::uint64_t{1} << g;
    o.expect(west_p_extreme(g, ExtremeKind::Minus1) == west_p().at(n - 1), "2^g-1, g=" + std::to_string(g));
    o.expect(west_p_extreme(g, ExtremeKind::Exact) == west_p().at(n), "2^g, g=" + std::to_string(g));
    o.expect(west_p_extreme(g, ExtremeKind::Plus1) == west_p().at(n + 1), "2^g+1, g=" + std::to_string(g));
  }
  o.expect(u64(west_p_extreme(4, ExtremeKind::Exact)) == 2145, "2145");
  o.expect(u64(west_p_extreme(5, ExtremeKind::Exact)) == 6678671, "6678671");
  o.expect(u64(west_p_extreme(4, ExtremeKind::Minus1)) == 3003, "3003");
  o.expect(u64(west_p_extreme(5, ExtremeKind::Minus1)) == 14325749295ull, "14325749295");
  o.expect(u64(west_p_extreme(10, ExtremeKind::Plus1)) == 205, "205");
  o.expect(u64(west_p_extreme(15, ExtremeKind::Plus1)) == 10923, "10923");
  if (o.ok) o.detail = "21 engine agreements, 6 spot values";
  return o;
}

struct Table1Row {
  std::uint64_t m;
  std::string size;  // printed magnitude or exact value
  std::vector<std::uint64_t> head, tail;  // printed leading and trailing primes
  std::size_t omega;
};

Outcome table1() {
  const std::vector<Table1Row> rows = {
      {62, "3.49e9", {23, 31, 37, 41, 53, 61}, {}, 6},
      {63, "2.79e18", {3, 7, 11}, {59, 61}, 13},
      {64, "4.36e16", {3, 7, 11}, {59, 61}, 12},
      {65, "65", {5, 13}, {}, 2},
      {66, "2145", {3, 5, 11, 13}, {}, 4},
      {126, "2.42e21", {3, 5, 7}, {109, 113}, 14},
      {127, "7.87e39", {3, 5, 7}, {113, 127}, 24},
      {128, "1.45e34", {5, 11, 13}, {113, 127}, 20},
      {129, "129", {3, 43}, {}, 2},
      {130, "8385", {3, 5, 13, 43}, {}, 4},
      {254, "6.86e28", {103, 107, 127}, {233, 241}, 13},
      {255, "4.20e76", {3, 19, 37}, {241, 251}, 37},
      {256, "1.17e72", {3, 5, 11}, {241, 251}, 37},
      {257, "257", {257}, {}, 1},
      {258, "33153", {3, 43, 257}, {}, 3},
      {510, "5.17e92", {3, 11, 19}, {461, 509}, 42},
      {511, "4.35e168", {3, 5, 7}, {503, 509}, 74},
      {512, "8.03e147", {7, 13, 29}, {503, 509}, 63},
      {513, "57", {3, 19}, {}, 2},
      {514, "14649", {3, 19, 257}, {}, 3},
      {1022, "9.32e173", {7, 71, 109}, {1013, 1021}, 65},
      {1023, "2.53e344", {3, 7, 11}, {1019, 1021}, 132},
      {1024, "4.72e298", {3, 11, 19}, {1019, 1021}, 115},
      {1025, "205", {5, 41}, {}, 2},
      {1026, "11685", {3, 5, 19, 41}, {}, 4},
  };
  Outcome o;
  const auto table = table_west_lag(6, 10, west_p());
  o.expect(table.size() == 25, "row count");
  for (std::size_t i = 0; i < rows.size() && i < table.size(); ++i) {
    const auto& want = rows[i];
    const auto& got = table[i];
    const std::string tag = "m=" + std::to_string(want.m);
    o.expect(got.m == want.m, tag + " index");
    const bool exact = want.size.find('e') == std::string::npos;
    o.expect((exact ? decimal_string(got.value) : scientific_string(got.value)) == want.size, tag + " size");
    const auto ps = prime_list(got.value);
    o.expect(std::equal(want.head.begin(), want.head.end(), ps.begin()), tag + " leading primes");
    o.expect(want.tail.size() <= ps.size() &&
                 std::equal(want.tail.rbegin(), want.tail.rend(), ps.rbegin()),
             tag + " trailing primes");
    if (want.tail.empty()) o.expect(ps == want.head, tag + " full factorization");
    o.expect(got.omega == want.omega, tag + " omega " + std::to_string(got.omega));
    o.expect(is_squarefree(got.value), tag + " square-free");
    if (got.formula_agrees) o.expect(*got.formula_agrees, tag + " formula");
  }
  o.expect(omega(west_n().at(1023)) == 130, "omega(W_N*(1023))");
  if (o.ok) o.detail = "25 rows, omega(W_P(1023)) = 132";
  return o;
}

Outcome table2() {
  Outcome o;
  WestEdge wn;
  wn.terms.assign(west_n().terms.begin(), west_n().terms.begin() + 1024);
  const ComparisonStats s = comparison_stats(wn, west_p(), 1024);
  const std::vector<std::size_t> sn{391, 311, 183, 77, 41, 14, 5, 2};
  const std::vector<std::size_t> sp{353, 391, 186, 74, 11, 6, 3, 0};
  o.expect(s.surplus_nstar == sn, "s_nstar histogram");
  o.expect(s.surplus_p == sp, "s_p histogram");
  o.expect(s.equality_count == 149, "equalities " + std::to_string(s.equality_count));
  // Independent recount straight from the definitions.
  std::vector<std::size_t> a(8, 0), b(8, 0);
  std::size_t eq = 0;
  for (std::size_t m = 1; m <= 1024; ++m) {
    const auto& x = wn.at(m);
    const auto& y = west_p().at(m);
    std::size_t fa = 0, fb = 0;
    for (const auto& f : x.factors()) fa += f.exponent > valuation(y, f.prime) ? 1 : 0;
    for (const auto& f : y.factors()) fb += f.exponent > valuation(x, f.prime) ? 1 : 0;
    ++a.at(fa);
    ++b.at(fb);
    eq += x == y;
  }
  o.expect(a == sn && b == sp && eq == 149, "recount");
  if (o.ok) o.detail = "K=1024, 149 equalities";
  return o;
}

Outcome listings() {
  Outcome o;
  const auto l255 = divisor_listing(255, west_n());
  const auto l256 = divisor_listing(256, west_n());
  o.expect(l255.omega == 40, "omega(255)");
  o.expect(l256.omega == 37, "omega(256)");
  auto missing = [](const DivisorListing& l) {
    std::vector<std::uint64_t> v;
    for (const auto& e : l.primes)
      if (!e.divides) v.push_back(e.prime);
    return v;
  };
  o.expect(missing(l255) == std::vector<std::uint64_t>{2, 5, 17, 23, 29, 31, 53, 59, 61, 67, 71, 73, 79, 83},
           "255 red list");
  o.expect(missing(l256) ==
               std::vector<std::uint64_t>{3, 13, 29, 31, 37, 41, 53, 59, 61, 89, 97, 101, 103, 107, 109, 113, 127},
           "256 red list");
  o.expect(l255.primes.size() == 54 && l256.primes.size() == 54, "primes below 256");
  if (o.ok) o.detail = "omega 40 and 37, both partitions match";
  return o;
}

Outcome conjecture3() {
  Outcome o;
  const auto r = check_conjecture3(13, west_n());
  o.expect(r.all_match(), "some g <= 13 differs");
  o.expect(r.entries.size() == 14, "entries");
  o.expect(r.entries[3].engine.is_one(), "W(9) = 1");
  o.expect(u64(r.entries[8].engine) == 257, "W(257)");
  o.expect(u64(r.entries[9].engine) == 57, "W(513)");
  o.expect(u64(r.entries[10].engine) == 41, "W(1025)");
  const std::vector<std::uint64_t> uo{1, 2, 3, 5, 6, 15, 17, 33, 41, 55, 57, 65, 70, 105, 129,
                                      257, 273, 385, 561, 897, 969, 1001};
  const auto u = unique_ordered(west_n());
  for (std::size_t i = 0; i < uo.size(); ++i) o.expect(u64(u[i]) == uo[i], "UO(W_N*) term " + std::to_string(i + 1));
  const std::vector<std::uint64_t> uop{1, 2, 3, 5, 11, 15, 17, 33, 35, 51, 57, 65, 91, 105, 129, 165, 195,
                                       205, 221, 255, 257, 385, 451, 561, 861, 897, 969, 1615};
  const auto up = unique_ordered(west_p());
  for (std::size_t i = 0; i < uop.size(); ++i) o.expect(u64(up[i]) == uop[i], "UO(W_P) term " + std::to_string(i + 1));
  if (o.ok) o.detail = "g = 0..13, UO prefixes from 8200 terms";
  return o;
}

Outcome conjecture2() {
  Outcome o;
  const auto r = check_squarefree_west(west_n());
  o.expect(r.ok(), r.ok() ? "" : "W_N*(" + std::to_string(*r.first_violation) + ")");
  o.expect(r.checked == 8200, "checked");
  WestEdge head;
  head.terms.assign(west_n().terms.begin(), west_n().terms.begin() + 1024);
  o.expect(check_squarefree_west(head).ok(), "M=1024");
  if (o.ok) o.detail = "M=1024 and stretch M=8200";
  return o;
}

Outcome properties() {
  Outcome o;
  // z_rule against ab/gcd^2 for every a, b <= 10^4
  const std::uint64_t N = 10000;
  const PrimeTable table(N);
  std::vector<FactoredNat> f(N + 1);
  for (std::uint64_t n = 1; n <= N; ++n) f[n] = factorize(n, table);
  std::size_t bad = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : bad)
  for (std::uint64_t a = 1; a <= N; ++a) {
    for (std::uint64_t b = 1; b <= N; ++b) {
      const std::uint64_t g = std::gcd(a, b);
      std::uint64_t v = 0;
      if (!z_rule(f[a], f[b]).try_value(v) || v != (a / g) * (b / g)) ++bad;
    }
  }
  o.expect(bad == 0, "z_rule mismatches: " + std::to_string(bad));

  // jump against iterated step
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 16; ++trial) {
    BitRow r(256 + 13 * trial);
    for (std::size_t k = 1; k <= r.size(); ++k) r.set(k, rng() & 1);
    BitRow it = r;
    for (std::size_t m = 0; m <= 64; ++m, it = it.step()) o.expect(r.jump(m) == it, "jump m=" + std::to_string(m));
  }

  // lambda / mu against the defining constraint systems
  const PrimeTable small(2048);
  for (std::uint64_t m = 3; m <= 2048; ++m) {
    for (const auto p : small.primes()) {
      if (p < 3 || p > m) continue;
      std::uint64_t lam = 0, mu_b = 0;
      for (std::uint64_t i = 1; i * p <= m + 1; ++i) {
        const std::uint64_t s = m + 1 - i * p;
        if (s <= m && lam == i - 1) lam = i;
        if (s <= m && s % 2 == 0) ++mu_b;
      }
      o.expect(lambda(p, m) == lam, "lambda");
      if (m % 2 == 0 && p < m) o.expect(mu(p, m) == mu_b, "mu");
    }
    if (!o.ok) break;
  }

  // digit domination against Pascal's rule
  std::vector<std::uint8_t> row{1};
  for (std::uint64_t H = 0; H <= 4096 && o.ok; ++H) {
    for (std::uint64_t k = 0; k <= H; ++k) o.expect(binomial_is_odd(H, k) == (row[k] == 1), "parity H=" + std::to_string(H));
    std::vector<std::uint8_t> next(H + 2, 1);
    for (std::uint64_t k = 1; k <= H; ++k) next[k] = row[k - 1] ^ row[k];
    row = std::move(next);
  }

  // P2(h,t) against alpha-evolution of a lone weight
  for (std::uint32_t h = 1; h <= 64 && o.ok; ++h) {
    const P2Triangle tri = p2_triangle(h, 5);
    std::vector<std::uint32_t> u(2 * h - 1, 0);
    u[h - 1] = 5;
    for (std::uint32_t r = 1; r <= h; ++r) {
      for (std::uint32_t c = 1; c <= r; ++c) o.expect(u[h - r + c - 1] == tri.cell(r, c), "P2 h=" + std::to_string(h));
      const auto nonzero = std::count_if(u.begin(), u.end(), [](auto x) { return x != 0; });
      std::size_t want = 0;
      for (std::uint32_t c = 1; c <= r; ++c) want += tri.cell(r, c) != 0;
      o.expect(static_cast<std::size_t>(nonzero) == want, "P2 support h=" + std::to_string(h));
      if (r < h) u = alpha(u);
    }
  }
  if (o.ok) o.detail = "10^8 z_rule pairs, jumps, lambda/mu, parity, P2";
  return o;
}

Outcome solitons() {
  Outcome o;
  const auto in_t = check_soliton_disjointness(tomography(InitialGeneration::naturals(), 2, 512), 6);
  o.expect(in_t.disjoint(), "p=2 overlap or touch");
  o.expect(in_t.incomplete.empty() && in_t.solitons.size() == 5, "p=2 extraction");
  std::size_t closest = SIZE_MAX;
  for (const auto& pr : in_t.pairs) closest = std::min(closest, pr.distance);
  for (std::uint64_t p : {3u, 5u}) {
    const auto r = check_soliton_disjointness(p, 3);
    o.expect(r.disjoint(), "p=" + std::to_string(p) + " overlap or touch");
    for (const auto& s : r.solitons) {
      o.expect(!s.touched_boundary && !s.cells.empty(), "p=" + std::to_string(p) + " boundary");
    }
  }
  if (o.ok) o.detail = "closest p=2 pair at lattice distance " + std::to_string(closest);
  return o;
}

// Every report from criteria 1-11 serialized to bytes.
std::string artifact_bytes() {
  std::string s;
  s += io::dump(io::to_json(build_triangle(InitialGeneration::naturals(), 12)));
  const WestEdge n35 = west_edge(InitialGeneration::naturals(), 35);
  const WestEdge p35 = west_edge(InitialGeneration::squarefree_kernels(), 35);
  s += io::to_csv(io::west_csv(n35)) + io::dump(io::to_json(p35));
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 31u, 127u}) s += io::dump(io::to_json(minimal_period(p)));
  const Tomography t2 = tomography(InitialGeneration::naturals(), 2, 512);
  const auto ppm = ppm_bytes(render_tomography(t2, default_palette(), 2));
  s.append(ppm.begin(), ppm.end());
  const auto ppm3 = ppm_bytes(render_tomography(tomography(InitialGeneration::squarefree_kernels(), 3, 60),
                                                default_palette(), 3));
  s.append(ppm3.begin(), ppm3.end());
  const WestEdge wn = west_edge(InitialGeneration::naturals(), 8200);
  const WestEdge wp = west_edge(InitialGeneration::squarefree_kernels(), 1026);
  const auto rows = table_west_lag(4, 10, wp);
  s += io::to_csv(io::table1_csv(rows)) + io::dump(io::to_json(rows));
  WestEdge head;
  head.terms.assign(wn.terms.begin(), wn.terms.begin() + 1024);
  const auto stats = comparison_stats(head, wp, 1024);
  s += io::to_csv(io::table2_csv(stats)) + io::dump(io::to_json(stats));
  s += io::to_csv(io::listing_csv(divisor_listing(255, wn))) + io::dump(io::to_json(divisor_listing(256, wn)));
  const auto c3 = check_conjecture3(13, wn);
  s += io::to_csv(io::conjecture3_csv(c3)) + io::dump(io::to_json(c3));
  s += io::dump(io::to_json(check_squarefree_west(wn)));
  return s;
}

Outcome determinism() {
  Outcome o;
  kernels::set_thread_count(0);
  const std::string a = artifact_bytes();
  const std::string b = artifact_bytes();
  kernels::set_thread_count(1);
  const std::string c = artifact_bytes();
  kernels::set_thread_count(0);
  o.expect(a == b, "repeat run differs");
  o.expect(a == c, "single-thread run differs");
  if (o.ok) o.detail = std::to_string(a.size()) + " bytes, identical across 3 runs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Figure 1 reproduction", figure1},
      {"West lists W_N*(35), W_P(35)", west_lists},
      {"Minimal periods pi_p", periods},
      {"West-period bits p=5", west_bits5},
      {"Theorem 3 slice predictor on T_N*(512)", theorem3},
      {"Corollaries 1-2: v2 of west terms", corollary1},
      {"Theorem 5 formula/engine agreement", theorem5},
      {"Table 1 reproduction g=6..10", table1},
      {"Table 2 reproduction K=1024", table2},
      {"Section 6.1 divisor listings", listings},
      {"Conjecture 3 instances g<=13", conjecture3},
      {"Conjecture 2 square-free west", conjecture2},
      {"Property suites", properties},
      {"Soliton checks", solitons},
      {"Determinism of emitted artifacts", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu  %-42s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
