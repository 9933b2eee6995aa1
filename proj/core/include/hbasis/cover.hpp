#pragma once

#include <cstdint>
#include <vector>

#include "hbasis/sumset.hpp"

namespace hbasis {

struct ShiftCover {
  std::vector<std::uint64_t> shifts;  // in the order the greedy picked them
  ResidueSet set;                     // the same shifts as a residue set X
  ResidueSet remainder;               // B \ (A ⊕ X)
  // uncovered[j] = |B \ (A ⊕ {first j shifts})|, j = 0..shifts.size()
  std::vector<std::size_t> uncovered;
};

// Greedy max-gain shift selection: up to t rounds, each picking the shift x
// maximising |uncovered ∩ (A + x)|, ties to the smallest x. Stops early once
// B is covered.
ShiftCover greedy_shift_cover(const ResidueSet& a, const ResidueSet& b, std::uint64_t t);

struct ComplementFamily {
  std::uint64_t q = 1;
  ResidueSet base = ResidueSet::empty(1);
  std::vector<ResidueSet> families;  // X_1 .. X_k
  std::vector<std::size_t> family_sizes;
  std::size_t union_size = 0;        // |X_1 ∪ ... ∪ X_k|
  std::size_t total_shifts = 0;      // Σ |X_i|
  std::uint64_t round_budget = 0;    // t
  std::uint64_t final_budget = 0;    // t + ceil(ln q)
  bool complete = false;             // base ⊕ X_1 ⊕ ... ⊕ X_k = Z_q, checked
  bool over_budget = false;          // final round needed shifts beyond final_budget

  ResidueSet united() const;
};

// k-complement of A in Z_q: k - 1 greedy rounds of budget t that grow the
// base, then a final round of budget t + ceil(ln q) that must cover Z_q.
ComplementFamily k_complement(const ResidueSet& a, unsigned k);

// k * ceil((q ln q / alpha)^(1/k)) + ceil(ln q).
double complement_size_bound(std::uint64_t q, std::uint64_t alpha, unsigned k);

// The per-round budget t = ceil((q ln q / alpha)^(1/k)).
std::uint64_t complement_round_budget(std::uint64_t q, std::uint64_t alpha, unsigned k);

}  // namespace hbasis
