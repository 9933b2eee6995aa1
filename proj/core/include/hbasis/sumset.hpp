#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hbasis/bitvec.hpp"

namespace hbasis {

// Largest coverage limit a bit map may be asked for (bits). About 1 GiB.
inline constexpr std::uint64_t kMaxCoverageLimit = std::uint64_t{1} << 33;

// Sorted, distinct, non-negative integers. Never empty.
class BasisSet {
 public:
  // Sorts and removes duplicates. Throws InvalidInput when empty.
  explicit BasisSet(std::vector<std::uint64_t> elements);
  BasisSet(std::initializer_list<std::uint64_t> elements)
      : BasisSet(std::vector<std::uint64_t>(elements)) {}

  // Requires a strictly increasing list; throws InvalidInput otherwise.
  static BasisSet from_sorted(std::vector<std::uint64_t> elements);

  std::span<const std::uint64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::uint64_t min() const { return elements_.front(); }
  std::uint64_t max() const { return elements_.back(); }
  bool contains(std::uint64_t v) const;

  friend bool operator==(const BasisSet&, const BasisSet&) = default;

 private:
  struct Validated {};
  BasisSet(Validated, std::vector<std::uint64_t> elements)
      : elements_(std::move(elements)) {}

  std::vector<std::uint64_t> elements_;
};

// Membership map of the exactly-h-fold sumset of a set, truncated to [0, limit].
class CoverageMap {
 public:
  CoverageMap(unsigned h, std::uint64_t limit, BitVector bits)
      : h_(h), limit_(limit), bits_(std::move(bits)) {}

  unsigned h() const { return h_; }
  std::uint64_t limit() const { return limit_; }
  bool contains(std::uint64_t v) const { return v <= limit_ && bits_.test(v); }
  std::size_t count() const { return bits_.count(); }
  // Least integer in [0, limit] that is not covered.
  std::optional<std::uint64_t> first_gap() const;
  std::vector<std::uint64_t> members() const { return bits_.to_indices(); }
  const BitVector& bits() const { return bits_; }

 private:
  unsigned h_;
  std::uint64_t limit_;
  BitVector bits_;
};

// Subset of Z_q.
class ResidueSet {
 public:
  // Members are reduced mod q and deduplicated. Throws if q == 0.
  ResidueSet(std::uint64_t q, std::span<const std::uint64_t> members);
  ResidueSet(std::uint64_t q, std::initializer_list<std::uint64_t> members)
      : ResidueSet(q, std::span<const std::uint64_t>(members.begin(), members.size())) {}
  ResidueSet(std::uint64_t q, BitVector bits);

  static ResidueSet empty(std::uint64_t q);
  static ResidueSet full(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }
  bool contains(std::uint64_t r) const { return r < q_ && bits_.test(r); }
  std::vector<std::uint64_t> members() const { return bits_.to_indices(); }
  const BitVector& bits() const { return bits_; }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::uint64_t q_;
  BitVector bits_;
};

// Exactly-h sums of A (repetition allowed) intersected with [0, limit].
CoverageMap h_fold_coverage(const BasisSet& a, unsigned h, std::uint64_t limit);

// Largest n with [0, n] inside hA; nullopt when 0 is not in A.
std::optional<std::uint64_t> n_of(const BasisSet& a, unsigned h);

struct Certificate {
  bool ok = false;
  std::optional<std::uint64_t> first_gap;
};

// Decides [0, n] ⊆ hA. On failure first_gap is the least uncovered integer.
Certificate verify_basis(const BasisSet& a, unsigned h, std::uint64_t n);

// H ⊕ X1 ⊕ ... ⊕ Xk over Z_q. All operands must share the modulus.
ResidueSet residue_sumset(const ResidueSet& base, std::span<const ResidueSet> families);

// Layered reachability table for answering many witness queries against one
// (A, h, limit). Layer i marks the i-fold sums up to limit.
class SumsetWitness {
 public:
  SumsetWitness(const BasisSet& a, unsigned h, std::uint64_t limit);

  // h elements of A summing to z, ascending; nullopt when z is
  // not an h-fold sum or lies above the table limit.
  std::optional<std::vector<std::uint64_t>> find(std::uint64_t z) const;

  std::uint64_t limit() const { return limit_; }

 private:
  std::vector<std::uint64_t> elements_;
  unsigned h_;
  std::uint64_t limit_;
  std::vector<BitVector> layers_;
};

// One-shot form of SumsetWitness::find.
std::optional<std::vector<std::uint64_t>> witness(const BasisSet& a, unsigned h, std::uint64_t z);

}  // namespace hbasis
