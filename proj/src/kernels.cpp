#include "zrule/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zrule::kernels {

namespace {

int g_threads = 0;

template <class T>
void west_column_into(std::vector<T>& row, std::vector<std::uint16_t>& out) {
  const std::size_t M = row.size();
  out.assign(M, 0);
  for (std::size_t j = 1; j <= M; ++j) {
    if (j > 1) alpha_inplace(std::span<T>(row.data(), M - j + 2));
    out[j - 1] = row[0];
  }
}

}  // namespace

void set_thread_count(int n) { g_threads = n; }

int thread_count() {
#ifdef _OPENMP
  return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::uint16_t> west_column(std::span<const std::uint16_t> row1) {
  std::vector<std::uint16_t> out;
  const std::uint16_t top = row1.empty() ? 0 : *std::max_element(row1.begin(), row1.end());
  // |a - b| never exceeds max(a, b), so row-1 bounds the whole triangle.
  if (top <= 0xFF) {
    std::vector<std::uint8_t> row(row1.begin(), row1.end());
    west_column_into(row, out);
  } else {
    std::vector<std::uint16_t> row(row1.begin(), row1.end());
    west_column_into(row, out);
  }
  return out;
}

std::vector<std::uint8_t> west_column_bits(std::span<const std::uint16_t> row1) {
  const std::size_t M = row1.size();
  std::vector<std::uint64_t> w((M + 63) / 64 + 1, 0);
  for (std::size_t k = 0; k < M; ++k) {
    if (row1[k] > 1) throw std::invalid_argument("west_column_bits: exponent above 1");
    if (row1[k]) w[k / 64] |= std::uint64_t{1} << (k % 64);
  }
  std::vector<std::uint8_t> out(M, 0);
  for (std::size_t j = 1; j <= M; ++j) {
    const std::size_t len = M - j + 1;
    if (j > 1) {
      // Bits past the live length are stale; they only feed stale positions.
      const std::size_t words = (len + 1 + 63) / 64;
      for (std::size_t i = 0; i < words; ++i) {
        w[i] ^= (w[i] >> 1) | (w[i + 1] << 63);
      }
    }
    out[j - 1] = static_cast<std::uint8_t>(w[0] & 1u);
  }
  return out;
}

WestEdge west_edge_reference(const InitialGeneration& gen, std::size_t M) {
  WestEdge edge;
  if (M == 0) return edge;
  std::vector<FactoredNat> row = gen.terms(M);
  edge.terms.reserve(M);
  edge.terms.push_back(row[0]);
  for (std::size_t j = 2; j <= M; ++j) {
    const std::size_t len = M - j + 1;
    for (std::size_t k = 0; k < len; ++k) row[k] = z_rule(row[k], row[k + 1]);
    row.pop_back();
    edge.terms.push_back(row[0]);
  }
  return edge;
}

WestEdge west_edge_parallel(const InitialGeneration& gen, std::size_t M) {
  WestEdge edge;
  if (M == 0) return edge;
  const std::vector<std::uint64_t> primes = gen.primes(M);
  const auto np = static_cast<std::ptrdiff_t>(primes.size());
  std::vector<std::vector<std::uint16_t>> columns(primes.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (std::ptrdiff_t i = 0; i < np; ++i) {
    const auto row1 = gen.exponents(primes[static_cast<std::size_t>(i)], M);
    const bool binary = std::all_of(row1.begin(), row1.end(), [](auto e) { return e <= 1; });
    if (binary) {
      const auto bits = west_column_bits(row1);
      columns[static_cast<std::size_t>(i)].assign(bits.begin(), bits.end());
    } else {
      columns[static_cast<std::size_t>(i)] = west_column(row1);
    }
  }

  edge.terms.reserve(M);
  std::vector<PrimePower> f;
  for (std::size_t m = 0; m < M; ++m) {
    f.clear();
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (const auto e = columns[i][m]) f.push_back({primes[i], e});
    }
    edge.terms.emplace_back(f);
  }
  return edge;
}

}  // namespace zrule::kernels
