#include "hbasis/search.hpp"

#include <algorithm>
#include <limits>

#include "hbasis/checked.hpp"
#include "hbasis/errors.hpp"

namespace hbasis {

namespace {

constexpr std::uint8_t kUnreached = std::numeric_limits<std::uint8_t>::max();

void check_hk(unsigned h, unsigned k) {
  if (h == 0) throw InvalidInput("h must be >= 1");
  if (k == 0) throw InvalidInput("k must be >= 1");
  if (h >= kUnreached) throw InvalidInput("h too large for the search tables");
}

// Depth-first branch and bound. need[v] is the fewest nonzero addends from
// the prefix summing to v; v ∈ hA iff need[v] <= h because 0 ∈ A pads.
class ExtremalSearch {
 public:
  ExtremalSearch(unsigned h, unsigned k, std::uint64_t budget)
      : h_(h), k_(k), budget_(budget) {
    // At most C(k+h-1, h) distinct h-fold sums, so the first gap is <= cap.
    cap_ = binomial(std::uint64_t{k} + h - 1, h);
    if (cap_ > (std::uint64_t{1} << 28)) throw GuardTripped("search: value range too large");
  }

  SearchResult run() {
    std::vector<std::uint8_t> need(cap_ + 1, kUnreached);
    need[0] = 0;
    prefix_.push_back(0);
    dfs(need, gap_of(need, 0));
    SearchResult r;
    r.h = h_;
    r.k = k_;
    r.value = best_value_;
    r.witness = BasisSet::from_sorted(best_set_);
    r.nodes_explored = nodes_;
    r.proof_of_optimality = !exhausted_;
    return r;
  }

 private:
  std::uint64_t gap_of(const std::vector<std::uint8_t>& need, std::uint64_t from) const {
    std::uint64_t v = from;
    while (v <= cap_ && need[v] <= h_) ++v;
    return v;
  }

  // Best n any completion of the current prefix could reach: the next element
  // is at most gap, and each later one at most h * (previous) + 1.
  std::uint64_t optimistic(std::uint64_t gap) const {
    const std::size_t remaining = k_ - prefix_.size();
    unsigned __int128 top = gap;
    for (std::size_t i = 1; i < remaining && top <= cap_; ++i) top = top * h_ + 1;
    const unsigned __int128 reach = top * h_;
    return static_cast<std::uint64_t>(std::min<unsigned __int128>(reach, cap_ - 1));
  }

  void dfs(const std::vector<std::uint8_t>& need, std::uint64_t gap) {
    ++nodes_;
    if (prefix_.size() == k_) {
      const std::uint64_t value = gap - 1;
      if (!have_best_ || value > best_value_) {
        have_best_ = true;
        best_value_ = value;
        best_set_ = prefix_;
      }
      return;
    }
    if (have_best_ && optimistic(gap) <= best_value_) return;
    for (std::uint64_t e = prefix_.back() + 1; e <= gap; ++e) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return;
      }
      std::vector<std::uint8_t> next = need;
      for (std::uint64_t v = e; v <= cap_; ++v) {
        const std::uint8_t via = next[v - e];
        if (via < h_ && via + 1 < next[v]) next[v] = static_cast<std::uint8_t>(via + 1);
      }
      prefix_.push_back(e);
      dfs(next, gap_of(next, gap));
      prefix_.pop_back();
      if (exhausted_) return;
    }
  }

  unsigned h_;
  unsigned k_;
  std::uint64_t budget_;
  std::uint64_t cap_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool have_best_ = false;
  std::uint64_t best_value_ = 0;
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> best_set_{0};
};

}  // namespace

SearchResult extremal_n(unsigned h, unsigned k, std::uint64_t node_budget) {
  check_hk(h, k);
  return ExtremalSearch(h, k, node_budget).run();
}

ZetaResult zeta_exact(unsigned h, std::uint64_t n, std::uint64_t node_budget) {
  if (h == 0) throw InvalidInput("h must be >= 1");
  ZetaResult out;
  out.h = h;
  out.n = n;
  if (h == 1) {
    // 1A = A: every integer in [0, n] must be an element.
    if (n >= (std::uint64_t{1} << 26)) throw GuardTripped("zeta_exact: n too large for h = 1");
    std::vector<std::uint64_t> all(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) all[i] = i;
    out.k_min = static_cast<unsigned>(n + 1);
    out.witness = BasisSet::from_sorted(std::move(all));
    out.proof_of_optimality = true;
    return out;
  }
  bool proven = true;
  for (unsigned k = 1;; ++k) {
    const std::uint64_t left = node_budget > out.nodes_explored ? node_budget - out.nodes_explored : 0;
    if (left == 0) throw GuardTripped("zeta_exact: node budget exhausted");
    SearchResult r = extremal_n(h, k, left);
    out.nodes_explored += r.nodes_explored;
    proven = proven && r.proof_of_optimality;
    if (r.value >= n) {
      out.k_min = k;
      out.witness = r.witness;
      out.proof_of_optimality = proven;
      return out;
    }
  }
}

SearchResult oracle_exhaustive(unsigned h, unsigned k, std::optional<std::uint64_t> max_element) {
  check_hk(h, k);
  const std::uint64_t top = max_element.value_or(binomial(std::uint64_t{k} + h, h));
  const std::size_t picks = k - 1;
  if (picks > top) throw InvalidInput("oracle_exhaustive: max_element too small for k elements");
  if (binomial(top, picks) > kOracleSubsetGuard) {
    throw GuardTripped("oracle_exhaustive: C(" + std::to_string(top) + ", " +
                       std::to_string(picks) + ") subsets exceeds the enumeration guard");
  }

  SearchResult best;
  best.h = h;
  best.k = k;
  best.proof_of_optimality = true;
  bool have = false;

  // Lexicographic enumeration of picks-subsets of [1, top].
  std::vector<std::uint64_t> chosen(picks);
  for (std::size_t i = 0; i < picks; ++i) chosen[i] = i + 1;
  while (true) {
    std::vector<std::uint64_t> elems{0};
    elems.insert(elems.end(), chosen.begin(), chosen.end());
    const BasisSet set = BasisSet::from_sorted(elems);
    const std::uint64_t value = *n_of(set, h);
    ++best.nodes_explored;
    if (!have || value > best.value) {
      have = true;
      best.value = value;
      best.witness = set;
    }
    std::size_t i = picks;
    while (i > 0 && chosen[i - 1] == top - (picks - i)) --i;
    if (i == 0) break;
    ++chosen[i - 1];
    for (std::size_t j = i; j < picks; ++j) chosen[j] = chosen[j - 1] + 1;
  }
  return best;
}

}  // namespace hbasis
