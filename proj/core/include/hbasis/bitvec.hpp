#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hbasis {

// Dense fixed-size bit vector over [0, size). Bits past size() in the last
// word are kept clear so word-level popcounts and comparisons stay exact.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t nbits);

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  void set_all();
  std::size_t count() const;
  bool none() const;
  bool all() const { return count() == nbits_; }

  // Least clear bit, or nullopt when every bit is set.
  std::optional<std::size_t> first_clear() const;
  // Least set bit at or after `from`, or nullopt.
  std::optional<std::size_t> next_set(std::size_t from) const;

  // this[i + shift] |= src[i] for all i, restricted to destination words
  // [word_begin, word_end). Bits shifted past size() are dropped.
  void or_shifted_left(const BitVector& src, std::size_t shift,
                       std::size_t word_begin, std::size_t word_end);
  void or_shifted_left(const BitVector& src, std::size_t shift) {
    or_shifted_left(src, shift, 0, words_.size());
  }
  // this[i - shift] |= src[i] for all i >= shift.
  void or_shifted_right(const BitVector& src, std::size_t shift);
  // Cyclic: this[(i + shift) mod size] |= src[i].
  void or_rotated(const BitVector& src, std::size_t shift);

  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  // Clears every bit that is set in `other`.
  BitVector& subtract(const BitVector& other);

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::vector<std::uint64_t> to_indices() const;

 private:
  void clear_tail();

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

}  // namespace hbasis
