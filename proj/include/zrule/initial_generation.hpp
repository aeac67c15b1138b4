#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "zrule/factored_nat.hpp"

namespace zrule {

enum class GenerationKind { Naturals, SquarefreeKernels, PSpaced, PSection, Explicit };

// The first row of a triangle. PSpaced / PSection place 1 where the
// integer sequences have a 0 term, so the Z-rule stays total and each
// prime's exponent row is unchanged.
class InitialGeneration {
 public:
  static InitialGeneration naturals();
  static InitialGeneration squarefree_kernels();
  static InitialGeneration p_spaced(std::uint64_t p);
  static InitialGeneration p_section(std::uint64_t p);
  static InitialGeneration explicit_terms(std::vector<FactoredNat> terms);

  [[nodiscard]] GenerationKind kind() const { return kind_; }
  // Only meaningful for PSpaced / PSection.
  [[nodiscard]] std::uint64_t prime() const { return prime_; }

  // Number of terms available; max() for the infinite sequences.
  [[nodiscard]] std::size_t available() const;

  // First K terms. Throws std::invalid_argument when fewer are available.
  [[nodiscard]] std::vector<FactoredNat> terms(std::size_t K) const;

  // Ascending primes dividing at least one of the first K terms.
  [[nodiscard]] std::vector<std::uint64_t> primes(std::size_t K) const;

  // v_p of each of the first K terms.
  [[nodiscard]] std::vector<std::uint16_t> exponents(std::uint64_t p, std::size_t K) const;

  [[nodiscard]] std::string describe() const;

 private:
  InitialGeneration(GenerationKind kind, std::uint64_t p) : kind_(kind), prime_(p) {}

  void require(std::size_t K) const;

  GenerationKind kind_;
  std::uint64_t prime_ = 0;
  std::vector<FactoredNat> explicit_;
};

}  // namespace zrule
