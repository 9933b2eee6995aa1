#include "hbasis/sumset.hpp"

#include <algorithm>

#include "hbasis/checked.hpp"
#include "hbasis/errors.hpp"
#include "hbasis/parallel.hpp"

namespace hbasis {

namespace {

constexpr std::size_t kMinWordsPerChunk = 1 << 14;
constexpr std::size_t kBlockWords = 1 << 12;

void check_h(unsigned h) {
  if (h == 0) throw InvalidInput("h must be >= 1");
}

void check_limit(std::uint64_t limit) {
  if (limit >= kMaxCoverageLimit) {
    throw GuardTripped("coverage limit " + std::to_string(limit) + " exceeds the bit map guard");
  }
}

BitVector first_layer(std::span<const std::uint64_t> elems, std::uint64_t limit) {
  BitVector bits(limit + 1);
  for (std::uint64_t e : elems) {
    if (e > limit) break;
    bits.set(e);
  }
  return bits;
}

// next = (cur + A) ∩ [0, limit], chunked over destination words.
BitVector add_layer(const BitVector& cur, std::span<const std::uint64_t> elems,
                    std::uint64_t limit) {
  BitVector next(limit + 1);
  parallel_chunks(next.word_count(), kMinWordsPerChunk, [&](std::size_t wb, std::size_t we) {
    // Blocked so each destination slice stays in cache across all shifts.
    for (std::size_t bb = wb; bb < we; bb += kBlockWords) {
      const std::size_t be = std::min(we, bb + kBlockWords);
      for (std::uint64_t e : elems) {
        if (e > limit) break;
        next.or_shifted_left(cur, e, bb, be);
      }
    }
  });
  return next;
}

}  // namespace

BasisSet::BasisSet(std::vector<std::uint64_t> elements) {
  if (elements.empty()) throw InvalidInput("basis set must not be empty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elements_ = std::move(elements);
}

BasisSet BasisSet::from_sorted(std::vector<std::uint64_t> elements) {
  if (elements.empty()) throw InvalidInput("basis set must not be empty");
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i] <= elements[i - 1]) {
      throw InvalidInput("basis elements must be strictly increasing");
    }
  }
  return BasisSet(Validated{}, std::move(elements));
}

bool BasisSet::contains(std::uint64_t v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::optional<std::uint64_t> CoverageMap::first_gap() const {
  auto gap = bits_.first_clear();
  if (!gap) return std::nullopt;
  return static_cast<std::uint64_t>(*gap);
}

ResidueSet::ResidueSet(std::uint64_t q, std::span<const std::uint64_t> members) {
  if (q == 0) throw InvalidInput("residue modulus must be >= 1");
  check_limit(q);
  q_ = q;
  bits_ = BitVector(q);
  for (std::uint64_t m : members) bits_.set(m % q);
}

ResidueSet::ResidueSet(std::uint64_t q, BitVector bits) : q_(q), bits_(std::move(bits)) {
  if (q == 0) throw InvalidInput("residue modulus must be >= 1");
  if (bits_.size() != q) throw InvalidInput("residue bit map size must equal the modulus");
}

ResidueSet ResidueSet::empty(std::uint64_t q) { return ResidueSet(q, BitVector(q)); }

ResidueSet ResidueSet::full(std::uint64_t q) {
  BitVector bits(q);
  bits.set_all();
  return ResidueSet(q, std::move(bits));
}

CoverageMap h_fold_coverage(const BasisSet& a, unsigned h, std::uint64_t limit) {
  check_h(h);
  check_limit(limit);
  const auto elems = a.elements();
  BitVector cur = first_layer(elems, limit);
  for (unsigned i = 1; i < h; ++i) cur = add_layer(cur, elems, limit);
  return CoverageMap(h, limit, std::move(cur));
}

std::optional<std::uint64_t> n_of(const BasisSet& a, unsigned h) {
  check_h(h);
  if (a.min() != 0) return std::nullopt;
  const std::uint64_t limit = checked_mul(h, a.max(), "n_of scan bound");
  const CoverageMap cov = h_fold_coverage(a, h, limit);
  if (auto gap = cov.first_gap()) return *gap - 1;  // gap > 0 because 0 ∈ hA
  return limit;
}

Certificate verify_basis(const BasisSet& a, unsigned h, std::uint64_t n) {
  const CoverageMap cov = h_fold_coverage(a, h, n);
  Certificate cert;
  cert.first_gap = cov.first_gap();
  cert.ok = !cert.first_gap.has_value();
  return cert;
}

ResidueSet residue_sumset(const ResidueSet& base, std::span<const ResidueSet> families) {
  const std::uint64_t q = base.modulus();
  BitVector cur = base.bits();
  for (const ResidueSet& fam : families) {
    if (fam.modulus() != q) throw InvalidInput("residue_sumset: modulus mismatch");
    BitVector next(q);
    for (std::uint64_t x : fam.members()) next.or_rotated(cur, x);
    cur = std::move(next);
  }
  return ResidueSet(q, std::move(cur));
}

SumsetWitness::SumsetWitness(const BasisSet& a, unsigned h, std::uint64_t limit)
    : elements_(a.elements().begin(), a.elements().end()), h_(h), limit_(limit) {
  check_h(h);
  check_limit(limit);
  layers_.reserve(h);
  layers_.push_back(first_layer(elements_, limit));
  for (unsigned i = 1; i < h; ++i) layers_.push_back(add_layer(layers_.back(), elements_, limit));
}

std::optional<std::vector<std::uint64_t>> SumsetWitness::find(std::uint64_t z) const {
  if (z > limit_ || !layers_.back().test(z)) return std::nullopt;
  std::vector<std::uint64_t> picked;
  picked.reserve(h_);
  std::uint64_t rest = z;
  // Layer i-1 holds the (i)-fold sums; peel one addend per step.
  for (unsigned i = h_; i >= 1; --i) {
    auto it = std::upper_bound(elements_.begin(), elements_.end(), rest);
    bool found = false;
    while (it != elements_.begin()) {
      --it;
      const std::uint64_t e = *it;
      const std::uint64_t left = rest - e;
      const bool reachable = (i == 1) ? left == 0 : layers_[i - 2].test(left);
      if (reachable) {
        picked.push_back(e);
        rest = left;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;  // unreachable: layer h had z set
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

std::optional<std::vector<std::uint64_t>> witness(const BasisSet& a, unsigned h, std::uint64_t z) {
  return SumsetWitness(a, h, z).find(z);
}

}  // namespace hbasis
