#include "zrule/initial_generation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zrule/primes.hpp"

namespace zrule {

namespace {

std::uint16_t vp(std::uint64_t n, std::uint64_t p) {
  std::uint16_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

void require_prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("initial generation: " + std::to_string(p) + " is not prime");
}

}  // namespace

InitialGeneration InitialGeneration::naturals() { return {GenerationKind::Naturals, 0}; }

InitialGeneration InitialGeneration::squarefree_kernels() {
  return {GenerationKind::SquarefreeKernels, 0};
}

InitialGeneration InitialGeneration::p_spaced(std::uint64_t p) {
  require_prime(p);
  return {GenerationKind::PSpaced, p};
}

InitialGeneration InitialGeneration::p_section(std::uint64_t p) {
  require_prime(p);
  return {GenerationKind::PSection, p};
}

InitialGeneration InitialGeneration::explicit_terms(std::vector<FactoredNat> terms) {
  InitialGeneration g{GenerationKind::Explicit, 0};
  g.explicit_ = std::move(terms);
  return g;
}

std::size_t InitialGeneration::available() const {
  return kind_ == GenerationKind::Explicit ? explicit_.size()
                                           : std::numeric_limits<std::size_t>::max();
}

void InitialGeneration::require(std::size_t K) const {
  if (K > available()) {
    throw std::invalid_argument("initial generation provides " + std::to_string(available()) +
                                " terms, " + std::to_string(K) + " requested");
  }
}

std::vector<FactoredNat> InitialGeneration::terms(std::size_t K) const {
  require(K);
  if (kind_ == GenerationKind::Explicit) {
    return {explicit_.begin(), explicit_.begin() + static_cast<std::ptrdiff_t>(K)};
  }
  std::vector<FactoredNat> out;
  out.reserve(K);
  if (kind_ == GenerationKind::PSpaced || kind_ == GenerationKind::PSection) {
    for (std::size_t n = 1; n <= K; ++n) {
      const std::uint16_t e = vp(n, prime_);
      const std::uint32_t keep = kind_ == GenerationKind::PSpaced ? (e > 0 ? 1u : 0u) : e;
      out.push_back(FactoredNat::prime_power(prime_, keep));
    }
    return out;
  }
  const PrimeTable table(static_cast<std::uint32_t>(std::max<std::size_t>(K, 1)));
  for (std::size_t n = 1; n <= K; ++n) {
    FactoredNat f = factorize(n, table);
    out.push_back(kind_ == GenerationKind::SquarefreeKernels ? squarefree_kernel(f) : f);
  }
  return out;
}

std::vector<std::uint64_t> InitialGeneration::primes(std::size_t K) const {
  require(K);
  switch (kind_) {
    case GenerationKind::Naturals:
    case GenerationKind::SquarefreeKernels: {
      if (K < 2) return {};
      const PrimeTable table(static_cast<std::uint32_t>(K));
      return {table.primes().begin(), table.primes().end()};
    }
    case GenerationKind::PSpaced:
    case GenerationKind::PSection:
      if (K >= prime_) return {prime_};
      return {};
    case GenerationKind::Explicit: {
      std::set<std::uint64_t> ps;
      for (std::size_t i = 0; i < K; ++i) {
        for (const auto& f : explicit_[i].factors()) ps.insert(f.prime);
      }
      return {ps.begin(), ps.end()};
    }
  }
  return {};
}

std::vector<std::uint16_t> InitialGeneration::exponents(std::uint64_t p, std::size_t K) const {
  require(K);
  std::vector<std::uint16_t> out(K, 0);
  switch (kind_) {
    case GenerationKind::Naturals:
      for (std::size_t n = p; n <= K; n += p) out[n - 1] = vp(n, p);
      break;
    case GenerationKind::SquarefreeKernels:
      for (std::size_t n = p; n <= K; n += p) out[n - 1] = 1;
      break;
    case GenerationKind::PSpaced:
      if (p == prime_) {
        for (std::size_t n = p; n <= K; n += p) out[n - 1] = 1;
      }
      break;
    case GenerationKind::PSection:
      if (p == prime_) {
        for (std::size_t n = p; n <= K; n += p) out[n - 1] = vp(n, p);
      }
      break;
    case GenerationKind::Explicit:
      for (std::size_t i = 0; i < K; ++i) {
        out[i] = static_cast<std::uint16_t>(valuation(explicit_[i], p));
      }
      break;
  }
  return out;
}

std::string InitialGeneration::describe() const {
  switch (kind_) {
    case GenerationKind::Naturals: return "naturals";
    case GenerationKind::SquarefreeKernels: return "squarefree";
    case GenerationKind::PSpaced: return "p-spaced(" + std::to_string(prime_) + ")";
    case GenerationKind::PSection: return "p-section(" + std::to_string(prime_) + ")";
    case GenerationKind::Explicit: return "explicit(" + std::to_string(explicit_.size()) + ")";
  }
  return "?";
}

}  // namespace zrule
