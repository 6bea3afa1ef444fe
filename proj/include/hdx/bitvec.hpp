#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hdx {

/// Dense bit vector over Z2. Coordinate i lives in bit (i % 64) of word i / 64;
/// bits past size() are always zero.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t length) : length_(length), words_(word_count(length), 0) {}

  /// "0110" -> coordinates 1 and 2 set; coordinate 0 is the first character.
  static BitVec from_string(std::string_view bits);
  static BitVec from_indices(std::size_t length, std::span<const std::size_t> indices);
  static BitVec from_indices(std::size_t length, std::initializer_list<std::size_t> indices) {
    return from_indices(length, std::span<const std::size_t>(indices.begin(), indices.size()));
  }
  static std::size_t word_count(std::size_t length) { return (length + kWordBits - 1) / kWordBits; }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  std::size_t weight() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void clear() noexcept;

  /// Index of the lowest set coordinate, or size() when zero.
  std::size_t first_set() const noexcept;
  std::vector<std::size_t> support() const;

  /// Parity of the overlap (the Z2 evaluation pairing).
  bool dot(const BitVec& other) const;
  std::size_t overlap(const BitVec& other) const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend bool operator==(const BitVec& a, const BitVec& b) = default;

  /// Lexicographic order on bit strings, coordinate 0 most significant, 0 < 1.
  bool lex_less(const BitVec& other) const noexcept;

  std::string to_string() const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

/// Lexicographic comparison of equal-length word arrays (see BitVec::lex_less).
/// Returns <0, 0, >0.
inline int lex_compare_words(std::span<const BitVec::Word> a, std::span<const BitVec::Word> b) noexcept {
  for (std::size_t w = 0; w < a.size(); ++w) {
    const BitVec::Word diff = a[w] ^ b[w];
    if (diff != 0) {
      const int bit = std::countr_zero(diff);
      return ((a[w] >> bit) & 1U) ? 1 : -1;
    }
  }
  return 0;
}

}  // namespace hdx
