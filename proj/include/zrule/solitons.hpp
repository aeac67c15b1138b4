#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zrule/initial_generation.hpp"
#include "zrule/triangle.hpp"

namespace zrule {

// Absolute (row, column), both 1-based.
using Cell = std::pair<std::size_t, std::size_t>;

// Distance in the brick lattice, where (j,k) neighbours (j,k+-1),
// (j-1,k), (j-1,k+1), (j+1,k-1), (j+1,k). 0 = same cell, 1 = touching.
std::size_t lattice_distance(const Cell& a, const Cell& b);

struct SolitonReport {
  std::uint64_t prime = 0;
  std::uint32_t power = 0;
  std::vector<Cell> cells;  // sorted
  std::size_t row_min = 0, row_max = 0, col_min = 0, col_max = 0;
  bool touched_boundary = false;
  std::uint16_t max_exponent = 0;
  std::size_t half_width = 0;  // window used for the final extraction
};

struct SolitonOptions {
  std::size_t initial_half_width = 0;      // 0 picks 4 * p^ceil(g/2)
  std::size_t max_window_cells = 1u << 20;  // total stored cells per window
};

// Thrown when the window cap is reached while the component still touches
// the window boundary. Carries the truncated extraction.
class SolitonBudgetExceeded : public std::runtime_error {
 public:
  explicit SolitonBudgetExceeded(SolitonReport partial);
  [[nodiscard]] const SolitonReport& partial() const { return partial_; }

 private:
  SolitonReport partial_;
};

// Connected component of exponent >= 2 containing first-row column p^g of
// `t` (a naturals p-tomography or window). Cells left of column 1 or above
// row 1 do not exist; any other absent neighbour marks the boundary.
SolitonReport component_at(const Tomography& t, std::uint32_t g);

// Window-doubling extraction of the soliton sprouting from p^g, g >= 2.
SolitonReport extract_soliton(std::uint64_t p, std::uint32_t g, const SolitonOptions& opts = {});

struct SolitonPair {
  std::uint32_t g1 = 0, g2 = 0;
  std::size_t distance = 0;  // minimum lattice distance between the two
};

struct DisjointnessReport {
  std::uint64_t prime = 0;
  std::vector<SolitonReport> solitons;  // g = 2..g_max
  std::vector<SolitonPair> pairs;       // every pair, with its distance
  std::vector<SolitonPair> overlaps;    // distance 0
  std::vector<SolitonPair> touchings;   // distance 1
  std::vector<std::uint32_t> incomplete;  // powers whose extraction hit the cap or window

  [[nodiscard]] bool disjoint() const { return overlaps.empty() && touchings.empty(); }
};

DisjointnessReport check_soliton_disjointness(std::uint64_t p, std::uint32_t g_max,
                                              const SolitonOptions& opts = {});

// Same check on a precomputed full tomography (e.g. T_N*(512) for p = 2).
DisjointnessReport check_soliton_disjointness(const Tomography& t, std::uint32_t g_max);

struct SquarefreeReport {
  std::size_t checked = 0;
  std::optional<std::size_t> first_violation;  // index m
  std::optional<FactoredNat> violating_value;

  [[nodiscard]] bool ok() const { return !first_violation; }
};

SquarefreeReport check_squarefree_west(const InitialGeneration& gen, std::size_t M);
SquarefreeReport check_squarefree_west(const WestEdge& edge);

struct V2Profile {
  std::vector<std::uint8_t> bits;  // bits[m - 1] = v_2(W_N*(m))
  std::optional<std::size_t> first_mismatch;  // against [m = 2^k, k >= 1]
  bool any_four = false;                       // some v_2 >= 2

  [[nodiscard]] bool ok() const { return !first_mismatch && !any_four; }
};

V2Profile v2_west_profile(std::size_t M);

}  // namespace zrule
