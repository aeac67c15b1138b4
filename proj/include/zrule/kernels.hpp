#pragma once

// Hot loops of the engine. Each per-prime sweep is sequential in the row
// index; distinct primes run concurrently under OpenMP. The FactoredNat
// sweep is the serial reference the kernels are tested against.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "zrule/initial_generation.hpp"
#include "zrule/triangle.hpp"

namespace zrule::kernels {

// row[k] <- |row[k] - row[k+1]| for k < n - 1. The last cell becomes stale.
template <class T>
inline void alpha_inplace(std::span<T> row) {
  const std::size_t n = row.size();
  if (n < 2) return;
  T* a = row.data();
  const std::size_t last = n - 1;
#pragma omp simd
  for (std::size_t k = 0; k < last; ++k) {
    const T x = a[k];
    const T y = a[k + 1];
    a[k] = static_cast<T>(std::max(x, y) - std::min(x, y));
  }
}

// Exponent of the west cell on rows 1..M for a first row of length M.
std::vector<std::uint16_t> west_column(std::span<const std::uint16_t> row1);

// Same for a first row of 0/1 exponents, using packed XOR.
std::vector<std::uint8_t> west_column_bits(std::span<const std::uint16_t> row1);

// Serial reference: Z-rule trapezoid over FactoredNat cells, one row kept.
WestEdge west_edge_reference(const InitialGeneration& gen, std::size_t M);

// Per-prime exponent sweeps, OpenMP-parallel over primes.
WestEdge west_edge_parallel(const InitialGeneration& gen, std::size_t M);

// Thread count used by the parallel kernels; <= 0 restores the default.
void set_thread_count(int n);
int thread_count();

}  // namespace zrule::kernels
