#include "zrule/triangle.hpp"

#include <algorithm>
#include <stdexcept>

#include "zrule/kernels.hpp"

namespace zrule {

Tomography::Tomography(std::uint64_t prime, std::size_t width, std::size_t depth,
                       std::size_t window_offset)
    : prime_(prime), width_(width), depth_(depth), window_offset_(window_offset) {
  if (width == 0 || depth == 0 || depth > width) {
    throw std::invalid_argument("Tomography: need 1 <= depth <= width");
  }
  cells_.assign(row_start(depth + 1), 0);
}

std::size_t Tomography::row_start(std::size_t j) const {
  // Sum of lengths of rows 1..j-1.
  const std::size_t r = j - 1;
  return r * width_ - r * (r - 1) / 2;
}

std::span<std::uint16_t> Tomography::row(std::size_t j) {
  if (j < 1 || j > depth_) throw std::out_of_range("Tomography::row");
  return {cells_.data() + row_start(j), row_length(j)};
}

std::span<const std::uint16_t> Tomography::row(std::size_t j) const {
  if (j < 1 || j > depth_) throw std::out_of_range("Tomography::row");
  return {cells_.data() + row_start(j), row_length(j)};
}

std::optional<std::uint16_t> Tomography::at(std::size_t j, std::size_t k) const {
  if (j < 1 || j > depth_ || k < window_offset_) return std::nullopt;
  const std::size_t local = k - window_offset_;
  if (local >= row_length(j)) return std::nullopt;
  return cells_[row_start(j) + local];
}

std::uint16_t Tomography::max_exponent() const {
  return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
}

namespace {

void evolve(Tomography& t) {
  for (std::size_t j = 2; j <= t.depth(); ++j) {
    const auto prev = t.row(j - 1);
    const auto cur = t.row(j);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const auto x = prev[k], y = prev[k + 1];
      cur[k] = static_cast<std::uint16_t>(x > y ? x - y : y - x);
    }
  }
}

}  // namespace

Triangle build_triangle(const InitialGeneration& gen, std::size_t K) {
  if (K == 0) throw std::invalid_argument("build_triangle: K must be >= 1");
  Triangle t;
  t.origin = gen.describe();
  t.rows.reserve(K);
  t.rows.push_back(gen.terms(K));
  for (std::size_t j = 2; j <= K; ++j) {
    const auto& prev = t.rows.back();
    std::vector<FactoredNat> cur;
    cur.reserve(prev.size() - 1);
    for (std::size_t k = 0; k + 1 < prev.size(); ++k) cur.push_back(z_rule(prev[k], prev[k + 1]));
    t.rows.push_back(std::move(cur));
  }
  return t;
}

WestEdge west_edge(const InitialGeneration& gen, std::size_t M) {
  return kernels::west_edge_parallel(gen, M);
}

Tomography tomography(const InitialGeneration& gen, std::uint64_t p, std::size_t K) {
  if (K == 0) throw std::invalid_argument("tomography: K must be >= 1");
  Tomography t(p, K, K);
  const auto first = gen.exponents(p, K);
  std::copy(first.begin(), first.end(), t.row(1).begin());
  evolve(t);
  return t;
}

std::vector<Tomography> tomographies(const InitialGeneration& gen,
                                     std::span<const std::uint64_t> primes, std::size_t K) {
  if (K == 0) throw std::invalid_argument("tomographies: K must be >= 1");
  std::vector<Tomography> out(primes.size(), Tomography(2, 1, 1));
  const auto n = static_cast<std::ptrdiff_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::thread_count())
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = tomography(gen, primes[static_cast<std::size_t>(i)], K);
  }
  return out;
}

Tomography windowed_tomography(std::uint64_t p, std::uint32_t g, std::size_t half_width,
                               std::size_t depth) {
  if (p < 2) throw std::invalid_argument("windowed_tomography: p must be prime");
  std::uint64_t center = 1;
  for (std::uint32_t i = 0; i < g; ++i) {
    if (center > UINT64_MAX / p) throw std::invalid_argument("windowed_tomography: p^g overflows");
    center *= p;
  }
  if (g == 0 || half_width >= center) {
    throw std::invalid_argument("windowed_tomography: need half_width < p^g");
  }
  if (depth == 0 || depth > std::max<std::size_t>(half_width, 1)) {
    throw std::invalid_argument("windowed_tomography: need 1 <= depth <= half_width");
  }
  return naturals_window(p, static_cast<std::size_t>(center - half_width), 2 * half_width + 1,
                         depth);
}

Tomography naturals_window(std::uint64_t p, std::size_t first_column, std::size_t width,
                           std::size_t depth) {
  if (first_column == 0) throw std::invalid_argument("naturals_window: columns start at 1");
  Tomography t(p, width, depth, first_column);
  auto first = t.row(1);
  for (std::size_t i = 0; i < width; ++i) {
    std::uint64_t n = first_column + i;
    std::uint16_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    first[i] = e;
  }
  evolve(t);
  return t;
}

Triangle reconstruct(std::span<const Tomography> parts, std::size_t K) {
  if (K == 0) throw std::invalid_argument("reconstruct: K must be >= 1");
  for (const auto& t : parts) {
    if (t.width() != K || t.depth() != K || t.window_offset() != 1) {
      throw std::invalid_argument("reconstruct: tomography of prime " + std::to_string(t.prime()) +
                                  " is not a full K-row triangle");
    }
  }
  Triangle out;
  out.origin = "reconstructed";
  out.rows.resize(K);
  std::vector<PrimePower> f;
  for (std::size_t j = 1; j <= K; ++j) {
    auto& row = out.rows[j - 1];
    row.reserve(K - j + 1);
    for (std::size_t k = 0; k < K - j + 1; ++k) {
      f.clear();
      for (const auto& t : parts) {
        if (const auto e = t.row(j)[k]) f.push_back({t.prime(), e});
      }
      row.emplace_back(f);
    }
  }
  return out;
}

std::vector<std::uint64_t> missing_primes(std::span<const Tomography> parts,
                                          const InitialGeneration& gen, std::size_t K) {
  std::vector<std::uint64_t> missing;
  for (const auto p : gen.primes(K)) {
    const bool covered =
        std::any_of(parts.begin(), parts.end(), [p](const Tomography& t) { return t.prime() == p; });
    if (!covered) missing.push_back(p);
  }
  return missing;
}

Triangle reconstruct(std::span<const Tomography> parts, const InitialGeneration& gen,
                     std::size_t K) {
  const auto missing = missing_primes(parts, gen, K);
  if (!missing.empty()) {
    std::string msg = "reconstruct: no tomography for prime(s)";
    for (auto p : missing) msg += " " + std::to_string(p);
    throw std::invalid_argument(msg);
  }
  return reconstruct(parts, K);
}

}  // namespace zrule
