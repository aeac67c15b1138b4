#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zrule/factored_nat.hpp"
#include "zrule/initial_generation.hpp"

namespace zrule {

// Rows 1..K; row j holds K - j + 1 cells, row j cell k is the child of
// row j-1 cells k and k+1. Indices are 1-based throughout.
struct Triangle {
  std::vector<std::vector<FactoredNat>> rows;
  std::string origin;

  [[nodiscard]] std::size_t size() const { return rows.size(); }
  [[nodiscard]] const FactoredNat& at(std::size_t j, std::size_t k) const {
    return rows.at(j - 1).at(k - 1);
  }
  friend bool operator==(const Triangle& a, const Triangle& b) { return a.rows == b.rows; }
};

// Exponent triangle of one prime. Row 1 spans `width` first-row columns
// starting at absolute column `window_offset`; row j spans width - j + 1
// cells starting at the same column. Only `depth` rows are stored. Any
// cell outside the stored region is absent (its ancestry leaves the
// window), which is distinct from exponent 0.
class Tomography {
 public:
  Tomography(std::uint64_t prime, std::size_t width, std::size_t depth,
             std::size_t window_offset = 1);

  [[nodiscard]] std::uint64_t prime() const { return prime_; }
  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] std::size_t depth() const { return depth_; }
  [[nodiscard]] std::size_t window_offset() const { return window_offset_; }
  [[nodiscard]] std::size_t row_length(std::size_t j) const { return width_ - j + 1; }

  [[nodiscard]] std::span<std::uint16_t> row(std::size_t j);
  [[nodiscard]] std::span<const std::uint16_t> row(std::size_t j) const;

  // Absolute column k; nullopt when the cell is absent.
  [[nodiscard]] std::optional<std::uint16_t> at(std::size_t j, std::size_t k) const;

  [[nodiscard]] std::uint16_t max_exponent() const;
  [[nodiscard]] std::size_t cell_count() const { return cells_.size(); }

  friend bool operator==(const Tomography&, const Tomography&) = default;

 private:
  [[nodiscard]] std::size_t row_start(std::size_t j) const;

  std::uint64_t prime_;
  std::size_t width_;
  std::size_t depth_;
  std::size_t window_offset_;
  std::vector<std::uint16_t> cells_;
};

struct WestEdge {
  std::vector<FactoredNat> terms;  // terms[m - 1] = t_{m,1}

  [[nodiscard]] std::size_t size() const { return terms.size(); }
  [[nodiscard]] const FactoredNat& at(std::size_t m) const { return terms.at(m - 1); }
};

// Throws std::invalid_argument on K = 0 or a generation shorter than K.
Triangle build_triangle(const InitialGeneration& gen, std::size_t K);

// First M west-edge terms, via the parallel per-prime kernel.
WestEdge west_edge(const InitialGeneration& gen, std::size_t M);

Tomography tomography(const InitialGeneration& gen, std::uint64_t p, std::size_t K);

// One tomography per prime, computed concurrently.
std::vector<Tomography> tomographies(const InitialGeneration& gen,
                                     std::span<const std::uint64_t> primes, std::size_t K);

// Naturals p-tomography around first-row column p^g, columns
// p^g - half_width .. p^g + half_width, `depth` rows. Requires
// half_width < p^g and 1 <= depth <= max(half_width, 1); uses
// v_p(p^g +- j) = v_p(j) for 0 < j < p^g.
Tomography windowed_tomography(std::uint64_t p, std::uint32_t g, std::size_t half_width,
                               std::size_t depth);

// Naturals p-tomography over first-row columns first_column ..
// first_column + width - 1, `depth` rows.
Tomography naturals_window(std::uint64_t p, std::size_t first_column, std::size_t width,
                           std::size_t depth);

// Component-wise product of prime powers. Every tomography must be a full
// K-row triangle starting at column 1.
Triangle reconstruct(std::span<const Tomography> parts, std::size_t K);

// Same, but first checks that every prime dividing a first-row term of
// `gen` is covered; throws std::invalid_argument naming the missing ones.
Triangle reconstruct(std::span<const Tomography> parts, const InitialGeneration& gen,
                     std::size_t K);

// Primes dividing the first K terms of gen that have no tomography.
std::vector<std::uint64_t> missing_primes(std::span<const Tomography> parts,
                                          const InitialGeneration& gen, std::size_t K);

}  // namespace zrule
