#include "zrule/solitons.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <unordered_set>

#include "zrule/kernels.hpp"

namespace zrule {

namespace {

std::uint64_t ipow(std::uint64_t p, std::uint32_t g) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < g; ++i) {
    if (r > UINT64_MAX / p) throw std::invalid_argument("soliton: p^g overflows");
    r *= p;
  }
  return r;
}

std::uint64_t key(std::size_t j, std::size_t k) { return (std::uint64_t{j} << 32) | k; }

constexpr std::array<std::pair<int, int>, 6> kNeighbours{
    {{0, -1}, {0, 1}, {-1, 0}, {-1, 1}, {1, -1}, {1, 0}}};

std::size_t set_distance(const SolitonReport& a, const SolitonReport& b) {
  std::size_t best = SIZE_MAX;
  for (const auto& x : a.cells) {
    for (const auto& y : b.cells) {
      best = std::min(best, lattice_distance(x, y));
      if (best == 0) return 0;
    }
  }
  return best;
}

DisjointnessReport pairwise(std::uint64_t p, std::vector<SolitonReport> solitons,
                            std::vector<std::uint32_t> incomplete) {
  DisjointnessReport rep;
  rep.prime = p;
  rep.incomplete = std::move(incomplete);
  for (std::size_t i = 0; i < solitons.size(); ++i) {
    for (std::size_t j = i + 1; j < solitons.size(); ++j) {
      SolitonPair pr{solitons[i].power, solitons[j].power, set_distance(solitons[i], solitons[j])};
      rep.pairs.push_back(pr);
      if (pr.distance == 0) rep.overlaps.push_back(pr);
      if (pr.distance == 1) rep.touchings.push_back(pr);
    }
  }
  rep.solitons = std::move(solitons);
  return rep;
}

}  // namespace

std::size_t lattice_distance(const Cell& a, const Cell& b) {
  // Axial hex coordinates (q, r) = (column, row).
  const auto dq = static_cast<long long>(a.second) - static_cast<long long>(b.second);
  const auto dr = static_cast<long long>(a.first) - static_cast<long long>(b.first);
  return static_cast<std::size_t>((std::llabs(dq) + std::llabs(dr) + std::llabs(dq + dr)) / 2);
}

SolitonBudgetExceeded::SolitonBudgetExceeded(SolitonReport partial)
    : std::runtime_error("soliton extraction exceeded the window budget for p=" +
                         std::to_string(partial.prime) + " g=" + std::to_string(partial.power)),
      partial_(std::move(partial)) {}

SolitonReport component_at(const Tomography& t, std::uint32_t g) {
  const std::uint64_t seed_col = ipow(t.prime(), g);
  SolitonReport rep;
  rep.prime = t.prime();
  rep.power = g;
  const auto seed = t.at(1, seed_col);
  if (!seed) throw std::invalid_argument("component_at: p^g lies outside the tomography");
  if (*seed < 2) return rep;

  std::unordered_set<std::uint64_t> seen{key(1, seed_col)};
  std::vector<Cell> stack{{1, seed_col}};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    rep.cells.push_back(c);
    rep.max_exponent = std::max(rep.max_exponent, *t.at(c.first, c.second));
    for (const auto& [dj, dk] : kNeighbours) {
      const auto nj = static_cast<long long>(c.first) + dj;
      const auto nk = static_cast<long long>(c.second) + dk;
      if (nj < 1 || nk < 1) continue;
      const auto v = t.at(static_cast<std::size_t>(nj), static_cast<std::size_t>(nk));
      if (!v) {
        rep.touched_boundary = true;
        continue;
      }
      if (*v < 2) continue;
      if (seen.insert(key(static_cast<std::size_t>(nj), static_cast<std::size_t>(nk))).second) {
        stack.emplace_back(static_cast<std::size_t>(nj), static_cast<std::size_t>(nk));
      }
    }
  }
  std::sort(rep.cells.begin(), rep.cells.end());
  rep.row_min = rep.cells.front().first;
  rep.row_max = rep.cells.back().first;
  rep.col_min = rep.col_max = rep.cells.front().second;
  for (const auto& c : rep.cells) {
    rep.col_min = std::min(rep.col_min, c.second);
    rep.col_max = std::max(rep.col_max, c.second);
  }
  return rep;
}

SolitonReport extract_soliton(std::uint64_t p, std::uint32_t g, const SolitonOptions& opts) {
  if (g < 2) throw std::invalid_argument("extract_soliton: g must be >= 2");
  const std::uint64_t center = ipow(p, g);
  std::size_t hw = opts.initial_half_width;
  if (hw == 0) hw = 4 * ipow(p, (g + 1) / 2);

  auto window_cells = [](std::size_t width, std::size_t depth) {
    return width * depth - depth * (depth - 1) / 2;
  };

  for (;;) {
    const std::size_t lo = center > hw ? center - hw : 1;
    const std::size_t width = center + hw - lo + 1;
    const std::size_t depth = hw;
    const Tomography t = naturals_window(p, lo, width, depth);
    SolitonReport rep = component_at(t, g);
    rep.half_width = hw;
    if (!rep.touched_boundary) return rep;
    const std::size_t next_hw = 2 * hw;
    const std::size_t next_lo = center > next_hw ? center - next_hw : 1;
    if (window_cells(center + next_hw - next_lo + 1, next_hw) > opts.max_window_cells) {
      throw SolitonBudgetExceeded(std::move(rep));
    }
    hw = next_hw;
  }
}

DisjointnessReport check_soliton_disjointness(std::uint64_t p, std::uint32_t g_max,
                                              const SolitonOptions& opts) {
  if (g_max < 2) throw std::invalid_argument("check_soliton_disjointness: g_max must be >= 2");
  const std::size_t n = g_max - 1;
  std::vector<SolitonReport> solitons(n);
  std::vector<std::uint8_t> cut(n, 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::thread_count())
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const auto g = static_cast<std::uint32_t>(i + 2);
    try {
      solitons[static_cast<std::size_t>(i)] = extract_soliton(p, g, opts);
    } catch (const SolitonBudgetExceeded& e) {
      solitons[static_cast<std::size_t>(i)] = e.partial();
      cut[static_cast<std::size_t>(i)] = 1;
    }
  }
  std::vector<std::uint32_t> incomplete;
  for (std::size_t i = 0; i < n; ++i) {
    if (cut[i] || solitons[i].touched_boundary) incomplete.push_back(static_cast<std::uint32_t>(i + 2));
  }
  return pairwise(p, std::move(solitons), std::move(incomplete));
}

DisjointnessReport check_soliton_disjointness(const Tomography& t, std::uint32_t g_max) {
  std::vector<SolitonReport> solitons;
  std::vector<std::uint32_t> incomplete;
  for (std::uint32_t g = 2; g <= g_max; ++g) {
    solitons.push_back(component_at(t, g));
    if (solitons.back().touched_boundary) incomplete.push_back(g);
  }
  return pairwise(t.prime(), std::move(solitons), std::move(incomplete));
}

SquarefreeReport check_squarefree_west(const WestEdge& edge) {
  SquarefreeReport rep;
  for (std::size_t m = 1; m <= edge.size(); ++m) {
    ++rep.checked;
    if (!is_squarefree(edge.at(m))) {
      rep.first_violation = m;
      rep.violating_value = edge.at(m);
      break;
    }
  }
  return rep;
}

SquarefreeReport check_squarefree_west(const InitialGeneration& gen, std::size_t M) {
  return check_squarefree_west(west_edge(gen, M));
}

V2Profile v2_west_profile(std::size_t M) {
  if (M == 0) throw std::invalid_argument("v2_west_profile: M must be >= 1");
  const auto column = kernels::west_column(InitialGeneration::naturals().exponents(2, M));
  V2Profile prof;
  prof.bits.reserve(M);
  for (std::size_t m = 1; m <= M; ++m) {
    const auto e = column[m - 1];
    if (e >= 2) prof.any_four = true;
    prof.bits.push_back(static_cast<std::uint8_t>(std::min<std::uint16_t>(e, 255)));
    const bool power_of_two = m >= 2 && (m & (m - 1)) == 0;
    if (!prof.first_mismatch && e != (power_of_two ? 1 : 0)) prof.first_mismatch = m;
  }
  return prof;
}

}  // namespace zrule
