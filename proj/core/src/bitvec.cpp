#include "hbasis/bitvec.hpp"

#include <algorithm>
#include <bit>

namespace hbasis {

BitVector::BitVector(std::size_t nbits)
    : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

void BitVector::clear_tail() {
  const std::size_t rem = nbits_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

void BitVector::set_all() {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  clear_tail();
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::optional<std::size_t> BitVector::first_clear() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != ~Word{0}) {
      const std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_one(words_[w]));
      if (i < nbits_) return i;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> BitVector::next_set(std::size_t from) const {
  if (from >= nbits_) return std::nullopt;
  std::size_t w = from / kWordBits;
  Word cur = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w >= words_.size()) return std::nullopt;
    cur = words_[w];
  }
}

void BitVector::or_shifted_left(const BitVector& src, std::size_t shift,
                                std::size_t word_begin, std::size_t word_end) {
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  word_end = std::min(word_end, words_.size());
  // Destination word w reads source words w - ws and w - ws - 1.
  const std::size_t src_words = src.words_.size();
  word_end = std::min(word_end, ws + src_words + (bs != 0 ? 1 : 0));
  std::size_t w = std::max(word_begin, ws);
  if (w >= word_end) {
    if (word_end == words_.size()) clear_tail();
    return;
  }
  Word* dst = words_.data();
  const Word* in = src.words_.data();
  if (bs == 0) {
    for (; w < word_end; ++w) dst[w] |= in[w - ws];
  } else {
    const unsigned back = static_cast<unsigned>(kWordBits) - bs;
    if (w == ws) {
      dst[w] |= in[0] << bs;
      ++w;
    }
    // Interior words have both source neighbours in range.
    const std::size_t interior_end = std::min(word_end, ws + src_words);
    for (; w < interior_end; ++w) dst[w] |= (in[w - ws] << bs) | (in[w - ws - 1] >> back);
    if (w < word_end) dst[w] |= in[w - ws - 1] >> back;
  }
  if (word_end == words_.size()) clear_tail();
}

void BitVector::or_shifted_right(const BitVector& src, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const unsigned bs = static_cast<unsigned>(shift % kWordBits);
  const std::size_t src_words = src.words_.size();
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::size_t s = w + ws;
    if (s >= src_words) break;
    Word v = src.words_[s] >> bs;
    if (bs != 0 && s + 1 < src_words) v |= src.words_[s + 1] << (kWordBits - bs);
    words_[w] |= v;
  }
  clear_tail();
}

void BitVector::or_rotated(const BitVector& src, std::size_t shift) {
  if (nbits_ == 0) return;
  shift %= nbits_;
  if (shift == 0) {
    *this |= src;
    return;
  }
  or_shifted_left(src, shift);
  or_shifted_right(src, nbits_ - shift);
}

BitVector& BitVector::operator|=(const BitVector& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] |= other.words_[w];
  clear_tail();
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= other.words_[w];
  for (std::size_t w = n; w < words_.size(); ++w) words_[w] = 0;
  return *this;
}

BitVector& BitVector::subtract(const BitVector& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::vector<std::uint64_t> BitVector::to_indices() const {
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word cur = words_[w];
    while (cur != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
      cur &= cur - 1;
    }
  }
  return out;
}

}  // namespace hbasis
