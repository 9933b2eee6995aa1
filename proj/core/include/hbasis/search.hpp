#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hbasis/sumset.hpp"

namespace hbasis {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SearchResult {
  unsigned h = 0;
  unsigned k = 0;
  std::uint64_t value = 0;   // n(h, k), or the best found when not proven
  BasisSet witness{0};       // lexicographically smallest set attaining value
  std::uint64_t nodes_explored = 0;
  bool proof_of_optimality = false;
};

// n(h, k): maximum of n(h, A) over |A| = k, 0 ∈ A counted in k. Depth-first
// over ascending elements with the successor rule a_{i+1} <= n(h, prefix) + 1.
SearchResult extremal_n(unsigned h, unsigned k, std::uint64_t node_budget = kDefaultNodeBudget);

struct ZetaResult {
  unsigned h = 0;
  std::uint64_t n = 0;
  unsigned k_min = 0;
  BasisSet witness{0};
  std::uint64_t nodes_explored = 0;
  bool proof_of_optimality = false;
};

// ζ(h, n): smallest k with n(h, k) >= n, by iterative deepening on k.
ZetaResult zeta_exact(unsigned h, std::uint64_t n, std::uint64_t node_budget = kDefaultNodeBudget);

// Largest number of subsets the brute-force oracle will enumerate.
inline constexpr std::uint64_t kOracleSubsetGuard = 20'000'000;

// Plain enumeration of every k-subset of [0, max_element] containing 0,
// scored with h_fold_coverage. max_element defaults to C(k+h, h).
SearchResult oracle_exhaustive(unsigned h, unsigned k,
                               std::optional<std::uint64_t> max_element = std::nullopt);

}  // namespace hbasis
