#include "hbasis/cover.hpp"

#include <algorithm>
#include <cmath>

#include "hbasis/errors.hpp"

namespace hbasis {

namespace {

// Greedy state over a fixed base A: gain[x] = |U ∩ (A + x)| for the current
// uncovered set U, maintained incrementally as elements get covered.
class GreedyCover {
 public:
  GreedyCover(const ResidueSet& a, const ResidueSet& b)
      : q_(a.modulus()), base_(a.members()), uncovered_(b.bits()), remaining_(b.size()),
        gain_(q_, 0) {
    if (b.is_full()) {
      // Every shift of A lands entirely on uncovered residues.
      std::fill(gain_.begin(), gain_.end(), static_cast<std::uint32_t>(base_.size()));
      return;
    }
    for (auto u = uncovered_.next_set(0); u; u = uncovered_.next_set(*u + 1)) {
      for (std::uint64_t x : base_) ++gain_[sub(*u, x)];
    }
  }

  std::size_t remaining() const { return remaining_; }
  const BitVector& uncovered() const { return uncovered_; }

  // Picks the best shift and marks what it covers.
  std::uint64_t step() {
    std::uint64_t best = 0;
    for (std::uint64_t x = 1; x < q_; ++x) {
      if (gain_[x] > gain_[best]) best = x;
    }
    for (std::uint64_t a : base_) {
      const std::uint64_t u = add(a, best);
      if (!uncovered_.test(u)) continue;
      uncovered_.reset(u);
      --remaining_;
      for (std::uint64_t x : base_) --gain_[sub(u, x)];
    }
    return best;
  }

 private:
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + q_ - b; }

  std::uint64_t q_;
  std::vector<std::uint64_t> base_;
  BitVector uncovered_;
  std::size_t remaining_;
  std::vector<std::uint32_t> gain_;
};

}  // namespace

ShiftCover greedy_shift_cover(const ResidueSet& a, const ResidueSet& b, std::uint64_t t) {
  if (a.empty()) throw InvalidInput("greedy_shift_cover: A must be non-empty");
  if (a.modulus() != b.modulus()) throw InvalidInput("greedy_shift_cover: modulus mismatch");
  const std::uint64_t q = a.modulus();
  GreedyCover greedy(a, b);
  std::vector<std::uint64_t> shifts;
  std::vector<std::size_t> uncovered{greedy.remaining()};
  while (shifts.size() < t && greedy.remaining() > 0) {
    shifts.push_back(greedy.step());
    uncovered.push_back(greedy.remaining());
  }
  ResidueSet set(q, shifts);
  return ShiftCover{std::move(shifts), std::move(set), ResidueSet(q, greedy.uncovered()),
                    std::move(uncovered)};
}

std::uint64_t complement_round_budget(std::uint64_t q, std::uint64_t alpha, unsigned k) {
  if (q < 2 || alpha < 1 || k < 1) throw InvalidInput("complement budget needs q >= 2, alpha >= 1, k >= 1");
  const double base = static_cast<double>(q) * std::log(static_cast<double>(q)) /
                      static_cast<double>(alpha);
  return static_cast<std::uint64_t>(std::ceil(std::pow(base, 1.0 / k)));
}

double complement_size_bound(std::uint64_t q, std::uint64_t alpha, unsigned k) {
  const double t = static_cast<double>(complement_round_budget(q, alpha, k));
  return k * t + std::ceil(std::log(static_cast<double>(q)));
}

ResidueSet ComplementFamily::united() const {
  BitVector bits(q);
  for (const auto& f : families) bits |= f.bits();
  return ResidueSet(q, std::move(bits));
}

ComplementFamily k_complement(const ResidueSet& a, unsigned k) {
  if (a.empty()) throw InvalidInput("k_complement: A must be non-empty");
  if (k < 1) throw InvalidInput("k_complement: k must be >= 1");
  const std::uint64_t q = a.modulus();
  ComplementFamily out;
  out.q = q;
  out.base = a;
  if (q == 1) {
    out.complete = true;
    return out;
  }
  const std::uint64_t t = complement_round_budget(q, a.size(), k);
  const std::uint64_t t_final = t + static_cast<std::uint64_t>(std::ceil(std::log(static_cast<double>(q))));
  out.round_budget = t;
  out.final_budget = t_final;

  const ResidueSet whole = ResidueSet::full(q);
  ResidueSet grown = a;
  for (unsigned round = 1; round < k; ++round) {
    ShiftCover cover = greedy_shift_cover(grown, whole, t);
    const ResidueSet fam[] = {cover.set};
    grown = residue_sumset(grown, fam);
    out.families.push_back(std::move(cover.set));
  }
  // Final round: no budget cap, so the cover is always completed; exceeding
  // t_final is recorded instead.
  ShiftCover last = greedy_shift_cover(grown, whole, q);
  out.over_budget = last.shifts.size() > t_final;
  out.families.push_back(std::move(last.set));

  for (const auto& f : out.families) {
    out.family_sizes.push_back(f.size());
    out.total_shifts += f.size();
  }
  out.union_size = out.united().size();
  out.complete = residue_sumset(a, out.families).is_full();
  return out;
}

}  // namespace hbasis
