#include "zrule/bit_row.hpp"

#include <bit>
#include <stdexcept>

namespace zrule {

BitRow::BitRow(std::size_t K) : size_(K), words_((K + 63) / 64, 0) {}

BitRow BitRow::multiples_of(std::uint64_t p, std::size_t K) {
  if (p == 0) throw std::invalid_argument("BitRow::multiples_of: p must be positive");
  BitRow r(K);
  for (std::size_t k = p; k <= K; k += p) r.set(k, true);
  r.period_ = p;
  return r;
}

bool BitRow::get(std::size_t k) const {
  if (k < 1 || k > size_) throw std::out_of_range("BitRow::get");
  return (words_[(k - 1) / 64] >> ((k - 1) % 64)) & 1u;
}

void BitRow::set(std::size_t k, bool v) {
  if (k < 1 || k > size_) throw std::out_of_range("BitRow::set");
  const std::uint64_t mask = std::uint64_t{1} << ((k - 1) % 64);
  if (v) {
    words_[(k - 1) / 64] |= mask;
  } else {
    words_[(k - 1) / 64] &= ~mask;
  }
}

std::size_t BitRow::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitRow::has_column_period(std::uint64_t p) const {
  for (std::size_t k = 1; k + p <= size_; ++k) {
    if (get(k) != get(k + p)) return false;
  }
  return true;
}

void BitRow::clear_tail() {
  words_.resize((size_ + 63) / 64);
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

void BitRow::xor_shifted(std::size_t s) {
  const std::size_t ws = s / 64;
  const unsigned bs = s % 64;
  const std::size_t n = words_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = 0;
    if (i + ws < n) {
      v = words_[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < n) v |= words_[i + ws + 1] << (64 - bs);
    }
    words_[i] ^= v;
  }
  size_ -= s;
  clear_tail();
}

BitRow BitRow::step() const {
  if (size_ == 0) return *this;
  BitRow r = *this;
  r.xor_shifted(1);
  return r;
}

BitRow BitRow::jump(std::size_t m) const {
  if (m >= size_ && m != 0) {
    throw std::invalid_argument("BitRow::jump: m must be below the truncation length");
  }
  // (1 + S)^m = prod over set bits b of m of (1 + S^(2^b)) in F_2.
  BitRow r = *this;
  for (unsigned b = 0; (std::size_t{1} << b) <= m; ++b) {
    if (m & (std::size_t{1} << b)) r.xor_shifted(std::size_t{1} << b);
  }
  return r;
}

std::string BitRow::to_string(std::size_t n) const {
  std::string s;
  for (std::size_t k = 1; k <= std::min(n, size_); ++k) s += get(k) ? '1' : '0';
  return s;
}

bool operator==(const BitRow& a, const BitRow& b) {
  return a.size_ == b.size_ && a.words_ == b.words_;
}

CyclicBitRow::CyclicBitRow(std::uint64_t period) : bits_(period, 0) {
  if (period == 0) throw std::invalid_argument("CyclicBitRow: period must be positive");
}

CyclicBitRow CyclicBitRow::multiples_of(std::uint64_t p) {
  CyclicBitRow r(p);
  r.bits_[p - 1] = 1;
  return r;
}

CyclicBitRow CyclicBitRow::compress(const BitRow& row, std::uint64_t period) {
  if (row.size() < period || !row.has_column_period(period)) {
    throw std::invalid_argument("CyclicBitRow::compress: row is not column-periodic");
  }
  CyclicBitRow r(period);
  for (std::uint64_t k = 1; k <= period; ++k) r.bits_[k - 1] = row.get(k) ? 1 : 0;
  return r;
}

CyclicBitRow CyclicBitRow::step() const { return jump(1); }

CyclicBitRow CyclicBitRow::jump(std::uint64_t m) const {
  const std::uint64_t p = bits_.size();
  CyclicBitRow r = *this;
  std::vector<std::uint8_t> next(p);
  for (unsigned b = 0; b < 64 && (std::uint64_t{1} << b) <= m; ++b) {
    if (!(m & (std::uint64_t{1} << b))) continue;
    const std::uint64_t s = (std::uint64_t{1} << b) % p;
    for (std::uint64_t i = 0; i < p; ++i) {
      const std::uint64_t t = i + s < p ? i + s : i + s - p;
      next[i] = r.bits_[i] ^ r.bits_[t];
    }
    r.bits_.swap(next);
  }
  return r;
}

BitRow CyclicBitRow::expand(std::size_t K) const {
  BitRow r(K);
  for (std::size_t k = 1; k <= K; ++k) r.set(k, get(k));
  r.set_column_period(bits_.size());
  return r;
}

std::string CyclicBitRow::to_string() const {
  std::string s;
  for (auto b : bits_) s += b ? '1' : '0';
  return s;
}

}  // namespace zrule
