#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hbasis {

// GF(p^k) presented as F_p[x]/(modulus), where x is a primitive element.
struct FieldSpec {
  std::uint64_t p = 0;
  unsigned k = 0;
  // Monic, constant term first; size k + 1 with modulus.back() == 1.
  std::vector<std::uint64_t> modulus;

  std::uint64_t order() const;  // p^k
};

// B_k set produced by the Bose-Chowla construction.
struct SidonSet {
  std::vector<std::uint64_t> elements;  // sorted, in [0, p^k - 2]
  std::uint64_t order_modulus = 0;      // p^k - 1
  unsigned k = 0;
  FieldSpec field;
};

// Fields with p^k - 1 above this use baby-step giant-step for discrete logs.
inline constexpr std::uint64_t kPowerWalkLimit = std::uint64_t{1} << 24;
// Hard ceiling on the field order handled by bose_chowla.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 40;

// Lexicographically smallest (constant term first) monic degree-k polynomial
// over F_p that is irreducible and has x as a primitive root.
FieldSpec build_field(std::uint64_t p, unsigned k);

// Polynomial-level predicates over F_p, exposed for testing.
bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p);
bool is_primitive(std::span<const std::uint64_t> monic, std::uint64_t p);

enum class DiscreteLogMethod { kAuto, kPowerWalk, kBabyGiant };

// { d : θ^d = θ + a, a in F_p } for θ a primitive root of GF(p^k).
SidonSet bose_chowla(std::uint64_t p, unsigned k,
                     DiscreteLogMethod method = DiscreteLogMethod::kAuto);

// All k-element multisets of s have distinct sums (mod `modulus` if given).
bool is_bk(std::span<const std::uint64_t> s, unsigned k,
           std::optional<std::uint64_t> modulus = std::nullopt);

struct PhiResult {
  std::size_t size = 0;
  std::vector<std::uint64_t> witness;  // lexicographically smallest maximizer
};

// Largest B_k subset of [0, n], by exhaustive backtracking.
PhiResult phi_exact(std::uint64_t n, unsigned k);

// Range guard used by phi_exact; n above this throws GuardTripped.
std::uint64_t phi_range_guard(unsigned k);

}  // namespace hbasis
