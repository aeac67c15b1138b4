#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "zrule/kernels.hpp"
#include "zrule/primes.hpp"
#include "zrule/triangle.hpp"

using namespace zrule;

namespace {

// Plain-integer triangle for rows whose values fit in 64 bits.
std::vector<std::vector<std::uint64_t>> integer_triangle(std::vector<std::uint64_t> row, std::size_t depth) {
  std::vector<std::vector<std::uint64_t>> out{row};
  while (out.size() < depth) {
    const auto& prev = out.back();
    std::vector<std::uint64_t> next;
    for (std::size_t k = 0; k + 1 < prev.size(); ++k) {
      const std::uint64_t g = std::gcd(prev[k], prev[k + 1]);
      next.push_back((prev[k] / g) * (prev[k + 1] / g));
    }
    out.push_back(next);
  }
  return out;
}

std::uint64_t value(const FactoredNat& n) {
  std::uint64_t v = 0;
  REQUIRE(n.try_value(v));
  return v;
}

}  // namespace

TEST_CASE("figure 1 corner") {
  const Triangle t = build_triangle(InitialGeneration::naturals(), 12);
  REQUIRE(t.size() == 12);
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
  for (std::size_t j = 1; j <= 12; ++j) {
    REQUIRE(t.rows[j - 1].size() == 13 - j);
    for (std::size_t k = 1; k <= fig[j - 1].size(); ++k) CHECK(value(t.at(j, k)) == fig[j - 1][k - 1]);
  }
}

TEST_CASE("triangle agrees with integer gcd evolution") {
  std::vector<std::uint64_t> row(16);
  std::iota(row.begin(), row.end(), 1);
  const auto want = integer_triangle(row, 16);
  const Triangle t = build_triangle(InitialGeneration::naturals(), 16);
  for (std::size_t j = 1; j <= 16; ++j) {
    for (std::size_t k = 1; k <= 17 - j; ++k) CHECK(value(t.at(j, k)) == want[j - 1][k - 1]);
  }
}

TEST_CASE("explicit generation and edge cases") {
  const auto gen = InitialGeneration::explicit_terms({FactoredNat{{2, 1}}, FactoredNat{{2, 1}}, FactoredNat{}});
  const Triangle t = build_triangle(gen, 3);
  CHECK(t.at(2, 1).is_one());
  CHECK(t.at(2, 2) == FactoredNat{{2, 1}});
  CHECK(t.at(3, 1) == FactoredNat{{2, 1}});
  CHECK(build_triangle(InitialGeneration::naturals(), 1).size() == 1);
  CHECK_THROWS_AS(build_triangle(InitialGeneration::naturals(), 0), std::invalid_argument);
  CHECK_THROWS_AS(build_triangle(gen, 4), std::invalid_argument);
  CHECK_THROWS_AS(InitialGeneration::p_spaced(9), std::invalid_argument);
}

TEST_CASE("p-spaced and p-section first rows") {
  const auto sp = InitialGeneration::p_spaced(3).terms(9);
  const auto sc = InitialGeneration::p_section(3).terms(9);
  for (std::size_t n = 1; n <= 9; ++n) {
    const std::uint32_t e = n % 9 == 0 ? 2 : n % 3 == 0 ? 1 : 0;
    CHECK(sc[n - 1] == FactoredNat::prime_power(3, e));
    CHECK(sp[n - 1] == FactoredNat::prime_power(3, e ? 1 : 0));
  }
}

TEST_CASE("tomographies multiply back to the triangle") {
  for (const auto& gen : {InitialGeneration::naturals(), InitialGeneration::squarefree_kernels()}) {
    const std::size_t K = 64;
    const auto ps = gen.primes(K);
    const auto parts = tomographies(gen, ps, K);
    CHECK(reconstruct(parts, gen, K) == build_triangle(gen, K));
    std::vector<Tomography> partial(parts.begin() + 1, parts.end());
    CHECK(missing_primes(partial, gen, K) == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS(reconstruct(partial, gen, K), std::invalid_argument);
  }
  const auto sec = InitialGeneration::p_section(5);
  const Tomography t5 = tomography(sec, 5, 40);
  const Triangle r = reconstruct(std::span<const Tomography>(&t5, 1), sec, 40);
  CHECK(r == build_triangle(sec, 40));
}

TEST_CASE("tomography values and bounds") {
  const Tomography t = tomography(InitialGeneration::naturals(), 2, 129);
  const Triangle full = build_triangle(InitialGeneration::naturals(), 129);
  for (std::size_t j = 1; j <= 129; ++j) {
    for (std::size_t k = 1; k <= 130 - j; ++k) REQUIRE(*t.at(j, k) == valuation(full.at(j, k), 2));
  }
  CHECK(t.max_exponent() == 7);
  CHECK_FALSE(t.at(2, 129).has_value());
  CHECK_FALSE(t.at(130, 1).has_value());
  CHECK(t.cell_count() == 129u * 130u / 2u);
}

TEST_CASE("windowed tomography equals the full one on its cells") {
  const Tomography full = tomography(InitialGeneration::naturals(), 3, 200);
  const Tomography w = windowed_tomography(3, 4, 40, 40);  // columns 41..121
  CHECK(w.window_offset() == 41);
  for (std::size_t j = 1; j <= 40; ++j) {
    for (std::size_t k = 41; k < 41 + w.row_length(j); ++k) REQUIRE(*w.at(j, k) == *full.at(j, k));
  }
  CHECK_THROWS_AS(windowed_tomography(3, 2, 9, 5), std::invalid_argument);
  CHECK_THROWS_AS(windowed_tomography(3, 4, 10, 11), std::invalid_argument);
  CHECK_THROWS_AS(windowed_tomography(3, 4, 10, 0), std::invalid_argument);
}

TEST_CASE("parallel west edge matches the serial reference") {
  std::vector<InitialGeneration> gens = {InitialGeneration::naturals(), InitialGeneration::squarefree_kernels(),
                                         InitialGeneration::p_spaced(3), InitialGeneration::p_section(2)};
  for (const auto& gen : gens) {
    for (std::size_t M : {1u, 2u, 17u, 256u}) {
      CHECK(kernels::west_edge_parallel(gen, M).terms == kernels::west_edge_reference(gen, M).terms);
    }
  }
  kernels::set_thread_count(1);
  const auto serial = west_edge(InitialGeneration::naturals(), 600);
  kernels::set_thread_count(0);
  CHECK(serial.terms == west_edge(InitialGeneration::naturals(), 600).terms);
}

TEST_CASE("west edge is the first column of the triangle") {
  const Triangle t = build_triangle(InitialGeneration::squarefree_kernels(), 80);
  const WestEdge w = west_edge(InitialGeneration::squarefree_kernels(), 80);
  for (std::size_t m = 1; m <= 80; ++m) CHECK(w.at(m) == t.at(m, 1));
}

TEST_CASE("alpha kernels") {
  std::vector<std::uint8_t> a{3, 1, 4, 1, 5};
  kernels::alpha_inplace(std::span<std::uint8_t>(a));
  CHECK(a == std::vector<std::uint8_t>{2, 3, 3, 4, 5});
  std::vector<std::uint16_t> row1{0, 1, 1, 0, 1, 0, 0, 1};
  const auto wide = kernels::west_column(row1);
  const auto bits = kernels::west_column_bits(row1);
  REQUIRE(wide.size() == bits.size());
  for (std::size_t i = 0; i < wide.size(); ++i) CHECK(wide[i] == bits[i]);
  const std::vector<std::uint16_t> two{2};
  CHECK_THROWS_AS(kernels::west_column_bits(two), std::invalid_argument);
}
