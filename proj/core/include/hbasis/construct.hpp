#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbasis/cover.hpp"
#include "hbasis/sumset.hpp"

namespace hbasis {

// Root in (0, 1) of e^t (1 - t) = e^{-1}, by bisection to 1e-12.
double tau();

enum class Feasibility { kFormula, kGridFallback, kOverride };
std::string to_string(Feasibility f);

struct ConstructionPlan {
  std::uint64_t n = 0;
  unsigned h = 0;
  std::uint64_t p = 0;        // ceil(n^{1/h})
  unsigned k = 0;             // complement rounds
  unsigned a = 0;             // 1 <= k <= a < h
  std::uint64_t m = 0;        // p^{h-a} (h-a)!
  std::uint64_t q = 0;        // p^{h-a+k}
  std::uint64_t p_sidon = 0;  // smallest prime >= ceil(m^{1/(h-a)})
  double tau = 0.0;
  Feasibility feasibility = Feasibility::kFormula;
  // Component-size estimate used to rank grid candidates.
  std::uint64_t predicted_size = 0;
};

struct PlanOverrides {
  unsigned k = 0;
  unsigned a = 0;
};

// Throws Infeasible when h < 3 or n < 2, InvalidInput for bad overrides.
ConstructionPlan plan_params(std::uint64_t n, unsigned h,
                             std::optional<PlanOverrides> overrides = std::nullopt);

// {j * b^i : 0 <= j < b, 0 <= i < h}: an h-basis of [0, b^h - 1].
BasisSet digit_basis(std::uint64_t b, unsigned h);

// Predicted |A| + |B| + |C| + |D| for (k, a); exposed for the grid search.
std::uint64_t predicted_size(std::uint64_t n, unsigned h, unsigned k, unsigned a);

// Largest working-set estimate (|H| * q) the complement stage will accept.
inline constexpr double kMaxComplementWork = 2e10;

// One element of H = (h-a)B: its integer value and the B multiset behind it.
struct HEntry {
  std::uint64_t value = 0;
  std::vector<std::uint32_t> parts;  // indices into the sorted B, non-decreasing
};

struct ComponentStats {
  std::size_t a = 0, b = 0, c = 0, d = 0;
  std::size_t total = 0;        // |G|
  std::size_t sum = 0;          // |A| + |B| + |C| + |D|
  bool disjoint = false;        // total == sum
  std::uint64_t a_max = 0, b_max = 0, c_max = 0, d_max = 0;
  std::size_t h_integer = 0;    // |(h-a)B| as integers
  std::size_t h_residues = 0;   // |(h-a)B mod q|
  std::uint64_t digit_base = 0; // base of the digit basis A
};

struct ConstructionResult {
  ConstructionPlan plan;
  BasisSet g{0};
  BasisSet a{0};
  BasisSet b{0};
  BasisSet c{0};
  BasisSet d{0};
  std::vector<HEntry> h_entries;   // sorted by value
  ComplementFamily complement;
  ComponentStats stats;
  bool verified = false;
  std::optional<std::uint64_t> first_gap;
};

ConstructionResult build_composite_basis(const ConstructionPlan& plan);

enum class Component { kA, kB, kC, kD };
char to_char(Component c);

struct Addend {
  std::uint64_t value = 0;
  Component from = Component::kA;
};

struct Decomposition {
  std::uint64_t z = 0;
  std::vector<Addend> addends;           // exactly h on success
  std::optional<std::string> violation;  // arithmetic headroom failure, if any
  bool ok() const { return !violation.has_value(); }
};

// Precomputes the lookup tables for repeated decompose() calls on one result.
class Decomposer {
 public:
  explicit Decomposer(const ConstructionResult& result);

  // Writes z as h elements of G following the construction. Throws
  // InvalidInput when z > n or the result is unverified.
  Decomposition decompose(std::uint64_t z) const;

 private:
  const ConstructionResult& result_;
  std::uint64_t low_limit_ = 0;  // z below this use A alone
  std::optional<SumsetWitness> low_;
  // pick_[i][v]: an element x of X_{i+1} with v - x reachable by X_1..X_i,
  // or kNone. Layer i covers X_1 ⊕ ... ⊕ X_{i+1}.
  std::vector<std::vector<std::uint32_t>> pick_;
  std::uint64_t digit_headroom_ = 0;  // p^{a-k}
};

Decomposition decompose(std::uint64_t z, const ConstructionResult& result);

}  // namespace hbasis
