#pragma once

#include <cstdint>
#include <vector>

namespace zrule {

enum class RulerVariant { W0, W1 };

struct RulerWord {
  RulerVariant variant = RulerVariant::W0;
  std::vector<std::uint32_t> terms;  // terms[n - 1] is the n-th letter
};

// First N letters of the limit of x_1 = 0, x_n = x_{n-1} (n-1) x_{n-1}
// (W0) or y_1 = 1, y_n = y_{n-1} n y_{n-1} (W1).
RulerWord ruler_word(RulerVariant variant, std::size_t N);

// Absolute differences of consecutive terms; throws on length < 2.
std::vector<std::uint32_t> alpha(const std::vector<std::uint32_t>& seq);

// Each term doubled in place: b_{2n-1} = b_{2n} = a_n.
std::vector<std::uint32_t> beta(const std::vector<std::uint32_t>& seq);

// Top h rows of Pascal's triangle mod 2 with odd entries replaced by t.
struct P2Triangle {
  std::uint32_t height = 0;
  std::uint64_t weight = 0;
  std::vector<std::vector<std::uint64_t>> rows;  // row r has r cells

  [[nodiscard]] std::uint64_t cell(std::size_t r, std::size_t c) const { return rows.at(r - 1).at(c - 1); }
};

P2Triangle p2_triangle(std::uint32_t h, std::uint64_t t);

// v_2(t_{j,k}) of the naturals triangle from the slice description alone:
// row 1 is w0; rows 2^{s-1}+1 .. 2^s form slice s, tiled by P2 triangles
// of height 2^{s-1} whose apexes sit on the slice's first row at columns
// i*2^{s-1} and whose weights are beta(w1).
std::uint32_t predict_v2(std::uint64_t j, std::uint64_t k);

}  // namespace zrule
