#include "zrule/factored_nat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace zrule {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_value(const FactoredNat& n) {
  BigInt acc = 1;
  for (const auto& f : n.factors()) {
    acc *= boost::multiprecision::pow(BigInt(f.prime), f.exponent);
  }
  return acc;
}

}  // namespace

FactoredNat::FactoredNat(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  for (const auto& f : factors) {
    if (f.prime < 2) throw std::invalid_argument("FactoredNat: prime must be >= 2");
    if (f.exponent == 0) continue;
    if (!factors_.empty() && factors_.back().prime == f.prime) {
      factors_.back().exponent += f.exponent;
    } else {
      factors_.push_back(f);
    }
  }
}

FactoredNat FactoredNat::prime_power(std::uint64_t p, std::uint32_t e) {
  if (e == 0) return {};
  return FactoredNat(Sorted{}, {{p, e}});
}

std::uint32_t FactoredNat::max_exponent() const {
  std::uint32_t m = 0;
  for (const auto& f : factors_) m = std::max(m, f.exponent);
  return m;
}

bool FactoredNat::try_value(std::uint64_t& out) const {
  unsigned __int128 acc = 1;
  for (const auto& f : factors_) {
    for (std::uint32_t i = 0; i < f.exponent; ++i) {
      acc *= f.prime;
      if (acc > UINT64_MAX) return false;
    }
  }
  out = static_cast<std::uint64_t>(acc);
  return true;
}

double FactoredNat::log_value() const {
  double s = 0.0;
  for (const auto& f : factors_) s += f.exponent * std::log(static_cast<double>(f.prime));
  return s;
}

FactoredNat z_rule(const FactoredNat& a, const FactoredNat& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  std::vector<PrimePower> out;
  out.reserve(fa.size() + fb.size());
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].prime < fb[j].prime) {
      out.push_back(fa[i++]);
    } else if (fb[j].prime < fa[i].prime) {
      out.push_back(fb[j++]);
    } else {
      const auto ea = fa[i].exponent, eb = fb[j].exponent;
      if (ea != eb) out.push_back({fa[i].prime, ea > eb ? ea - eb : eb - ea});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), fa.begin() + static_cast<std::ptrdiff_t>(i), fa.end());
  out.insert(out.end(), fb.begin() + static_cast<std::ptrdiff_t>(j), fb.end());
  return FactoredNat(FactoredNat::Sorted{}, std::move(out));
}

std::uint32_t valuation(const FactoredNat& a, std::uint64_t p) {
  const auto f = a.factors();
  auto it = std::lower_bound(f.begin(), f.end(), p,
                             [](const PrimePower& x, std::uint64_t q) { return x.prime < q; });
  return (it != f.end() && it->prime == p) ? it->exponent : 0;
}

FactoredNat squarefree_kernel(const FactoredNat& n) {
  std::vector<PrimePower> out;
  out.reserve(n.factors_.size());
  for (const auto& f : n.factors_) out.push_back({f.prime, 1});
  return FactoredNat(FactoredNat::Sorted{}, std::move(out));
}

std::size_t omega(const FactoredNat& n) { return n.factors().size(); }

bool is_squarefree(const FactoredNat& n) { return n.max_exponent() <= 1; }

FactoredNat gcd(const FactoredNat& a, const FactoredNat& b) {
  std::vector<PrimePower> out;
  std::size_t i = 0, j = 0;
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].prime < fb[j].prime) {
      ++i;
    } else if (fb[j].prime < fa[i].prime) {
      ++j;
    } else {
      out.push_back({fa[i].prime, std::min(fa[i].exponent, fb[j].exponent)});
      ++i;
      ++j;
    }
  }
  return FactoredNat(FactoredNat::Sorted{}, std::move(out));
}

FactoredNat exact_quotient(const FactoredNat& a, const FactoredNat& b) {
  std::vector<PrimePower> out;
  std::size_t j = 0;
  const auto& fb = b.factors_;
  for (const auto& f : a.factors_) {
    std::uint32_t sub = 0;
    if (j < fb.size() && fb[j].prime < f.prime) {
      throw std::domain_error("exact_quotient: divisor has a prime absent from dividend");
    }
    if (j < fb.size() && fb[j].prime == f.prime) sub = fb[j++].exponent;
    if (sub > f.exponent) throw std::domain_error("exact_quotient: not divisible");
    if (f.exponent > sub) out.push_back({f.prime, f.exponent - sub});
  }
  if (j != fb.size()) throw std::domain_error("exact_quotient: not divisible");
  return FactoredNat(FactoredNat::Sorted{}, std::move(out));
}

std::string decimal_string(const FactoredNat& n) { return big_value(n).str(); }

std::string scientific_string(const FactoredNat& n) {
  const std::string digits = decimal_string(n);
  if (digits.size() <= 3) return digits;
  std::string out;
  out += digits[0];
  out += '.';
  out += digits.substr(1, 2);
  out += 'e';
  out += std::to_string(digits.size() - 1);
  return out;
}

std::string factor_string(const FactoredNat& n) {
  if (n.is_one()) return "1";
  std::string out;
  for (const auto& f : n.factors()) {
    if (!out.empty()) out += '*';
    out += std::to_string(f.prime);
    if (f.exponent > 1) {
      out += '^';
      out += std::to_string(f.exponent);
    }
  }
  return out;
}

std::strong_ordering compare_value(const FactoredNat& a, const FactoredNat& b) {
  if (a == b) return std::strong_ordering::equal;
  const double la = a.log_value();
  const double lb = b.log_value();
  const double scale = std::max({std::abs(la), std::abs(lb), 1.0});
  if (std::abs(la - lb) > 1e-9 * scale) {
    return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const BigInt va = big_value(a);
  const BigInt vb = big_value(b);
  if (va < vb) return std::strong_ordering::less;
  if (vb < va) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace zrule
