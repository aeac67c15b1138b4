#include "zrule/words.hpp"

#include <bit>
#include <stdexcept>

#include "zrule/bit_row.hpp"

namespace zrule {

RulerWord ruler_word(RulerVariant variant, std::size_t N) {
  if (N == 0) throw std::invalid_argument("ruler_word: N must be >= 1");
  RulerWord w{variant, {}};
  const bool w1 = variant == RulerVariant::W1;
  std::vector<std::uint32_t> x{w1 ? 1u : 0u};
  for (std::uint32_t n = 2; x.size() < N; ++n) {
    std::vector<std::uint32_t> next;
    next.reserve(2 * x.size() + 1);
    next.insert(next.end(), x.begin(), x.end());
    next.push_back(w1 ? n : n - 1);
    next.insert(next.end(), x.begin(), x.end());
    x = std::move(next);
  }
  x.resize(N);
  w.terms = std::move(x);
  return w;
}

std::vector<std::uint32_t> alpha(const std::vector<std::uint32_t>& seq) {
  if (seq.size() < 2) throw std::invalid_argument("alpha: need at least two terms");
  std::vector<std::uint32_t> out(seq.size() - 1);
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
    out[n] = seq[n + 1] > seq[n] ? seq[n + 1] - seq[n] : seq[n] - seq[n + 1];
  }
  return out;
}

std::vector<std::uint32_t> beta(const std::vector<std::uint32_t>& seq) {
  std::vector<std::uint32_t> out;
  out.reserve(2 * seq.size());
  for (auto v : seq) {
    out.push_back(v);
    out.push_back(v);
  }
  return out;
}

P2Triangle p2_triangle(std::uint32_t h, std::uint64_t t) {
  if (h == 0) throw std::invalid_argument("p2_triangle: h must be >= 1");
  P2Triangle tri{h, t, {}};
  tri.rows.resize(h);
  for (std::uint32_t r = 1; r <= h; ++r) {
    auto& row = tri.rows[r - 1];
    row.resize(r);
    for (std::uint32_t c = 1; c <= r; ++c) row[c - 1] = binomial_is_odd(r - 1, c - 1) ? t : 0;
  }
  return tri;
}

namespace {

std::uint32_t v2(std::uint64_t n) { return static_cast<std::uint32_t>(std::countr_zero(n)); }

}  // namespace

std::uint32_t predict_v2(std::uint64_t j, std::uint64_t k) {
  if (j == 0 || k == 0) throw std::invalid_argument("predict_v2: j, k must be >= 1");
  if (j == 1) return v2(k);
  // Slice s holds rows 2^{s-1}+1 .. 2^s; h is its height and base length.
  const auto s = static_cast<unsigned>(std::bit_width(j - 1));
  const std::uint64_t h = std::uint64_t{1} << (s - 1);
  const std::uint64_t r = j - h - 1;           // row inside the slice, 0-based
  const std::uint64_t i = (k + h - 1) / h;     // triangle index, apex at column i*h
  const std::uint64_t c = i * h - k;           // offset left of the apex column
  if (c > r || !binomial_is_odd(r, c)) return 0;
  // beta(w1)[i] = w1[ceil(i/2)] = v2(ceil(i/2)) + 1.
  return v2((i + 1) / 2) + 1;
}

}  // namespace zrule
