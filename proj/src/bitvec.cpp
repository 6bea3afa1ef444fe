#include "hdx/bitvec.hpp"

#include "hdx/error.hpp"

namespace hdx {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw InvalidArgument("bit string may only contain 0 and 1");
  }
  return v;
}

BitVec BitVec::from_indices(std::size_t length, std::span<const std::size_t> indices) {
  BitVec v(length);
  for (std::size_t i : indices) {
    if (i >= length) throw InvalidArgument("bit index out of range");
    v.flip(i);
  }
  return v;
}

std::size_t BitVec::weight() const noexcept {
  std::size_t w = 0;
  for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

bool BitVec::any() const noexcept {
  for (Word x : words_)
    if (x != 0) return true;
  return false;
}

void BitVec::clear() noexcept {
  for (Word& x : words_) x = 0;
}

std::size_t BitVec::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return length_;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word x = words_[w];
    while (x != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

bool BitVec::dot(const BitVec& other) const { return (overlap(other) & 1U) != 0; }

std::size_t BitVec::overlap(const BitVec& other) const {
  if (other.length_ != length_) throw InvalidArgument("bit vector length mismatch");
  std::size_t w = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    w += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return w;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.length_ != length_) throw InvalidArgument("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.length_ != length_) throw InvalidArgument("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  if (other.length_ != length_) throw InvalidArgument("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool BitVec::lex_less(const BitVec& other) const noexcept {
  return lex_compare_words(words_, other.words_) < 0;
}

std::string BitVec::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

}  // namespace hdx
