#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zrule {

// Truncated series sum_{k=1..K} e_k X^k over F_2, packed 64 bits per word
// (bit k-1 of the row is bit (k-1)%64 of word (k-1)/64).
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t K);

  // Row 1 of v_p(T_P): ones exactly at multiples of p.
  static BitRow multiples_of(std::uint64_t p, std::size_t K);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool get(std::size_t k) const;
  void set(std::size_t k, bool v);
  [[nodiscard]] std::size_t popcount() const;

  // Declared column period: bit[k] == bit[k + p] for every valid k.
  [[nodiscard]] std::optional<std::uint64_t> column_period() const { return period_; }
  void set_column_period(std::optional<std::uint64_t> p) { period_ = p; }
  [[nodiscard]] bool has_column_period(std::uint64_t p) const;

  // new[k] = row[k] ^ row[k + 1]; the row loses its last position.
  [[nodiscard]] BitRow step() const;

  // m generations at once: new[k] = xor over j with C(m, j) odd of
  // row[k + j]. Throws std::invalid_argument when m >= size().
  [[nodiscard]] BitRow jump(std::size_t m) const;

  // First `n` bits as '0'/'1'.
  [[nodiscard]] std::string to_string(std::size_t n) const;

  friend bool operator==(const BitRow& a, const BitRow& b);

 private:
  void xor_shifted(std::size_t s);  // row[k] ^= row[k + s], size shrinks by s
  void clear_tail();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
  std::optional<std::uint64_t> period_;
};

// One column period of a p-periodic row, positions 1..p stored cyclically.
// Evolution is exact on the infinite row it stands for.
class CyclicBitRow {
 public:
  explicit CyclicBitRow(std::uint64_t period);

  static CyclicBitRow multiples_of(std::uint64_t p);
  // Throws std::invalid_argument when `row` lacks the declared period.
  static CyclicBitRow compress(const BitRow& row, std::uint64_t period);

  [[nodiscard]] std::uint64_t period() const { return bits_.size(); }
  // Position k >= 1 of the infinite row.
  [[nodiscard]] bool get(std::uint64_t k) const { return bits_[(k - 1) % bits_.size()] != 0; }

  [[nodiscard]] CyclicBitRow step() const;
  [[nodiscard]] CyclicBitRow jump(std::uint64_t m) const;

  [[nodiscard]] BitRow expand(std::size_t K) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const CyclicBitRow&, const CyclicBitRow&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// C(m, j) mod 2: odd iff every binary digit of j is dominated by m's.
constexpr bool binomial_is_odd(std::uint64_t m, std::uint64_t j) { return (j & ~m) == 0 && j <= m; }

}  // namespace zrule
