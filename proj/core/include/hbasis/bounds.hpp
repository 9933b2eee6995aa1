#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hbasis {

using Rational = boost::multiprecision::cpp_rational;

enum class BoundDirection { kLower, kUpper };

// One evaluated bound. `exact` is set whenever the formula is rational.
// Main terms only: `dropped_terms` names whatever asymptotic tail was left
// out, and is empty when the value is the full bound.
struct BoundReport {
  std::string name;
  std::string inputs;
  double value = 0.0;
  std::optional<Rational> exact;
  BoundDirection direction = BoundDirection::kLower;
  std::string dropped_terms;
  // Only meaningful for bounds with a validity regime (zeta_upper_composite).
  std::optional<bool> precondition_met;
};

struct RohrbachBracket {
  Rational lower;       // (k/h)^h
  std::uint64_t upper;  // C(k+h, h)
};

RohrbachBracket rohrbach(unsigned h, unsigned k);

// n(2,k) lower bounds.
Rational rohrbach_quadratic(std::uint64_t k);   // k^2/4 + 2k, δ dropped
Rational hammerer_hofmeister(std::uint64_t k);  // (10/9) k^2/4
Rational improved_quadratic(std::uint64_t k);   // (2/7) k^2

// (4/3)^{floor(h/3)} (8/7)^{floor((h mod 3)/2)} (k/h)^h
Rational hofmeister_lower(unsigned h, unsigned k);

// ζ(h,n) upper bounds (main terms).
double zeta_upper_hofmeister(unsigned h, double n);

struct CompositeBound {
  double value = 0.0;
  bool precondition_met = false;  // n >= e^{h^2}
};
CompositeBound zeta_upper_composite(unsigned h, double n);

// Φ_k(n) >= n^{1/k} (main term).
double bose_chowla_lower(double n, unsigned k);

// Every bound that applies to (h, k): Rohrbach pair, Hofmeister, and the
// quadratic family when h == 2.
std::vector<BoundReport> bounds_for_hk(unsigned h, unsigned k);
// Every bound that applies to (h, n): the two ζ upper bounds and Φ_h(n).
std::vector<BoundReport> bounds_for_hn(unsigned h, std::uint64_t n);

// Compares a real against a bound with 1e-9 relative slack.
bool within_lower(double value, double lower);
bool within_upper(double value, double upper);

std::string to_string(BoundDirection d);
double to_double(const Rational& r);
std::string rational_string(const Rational& r);

}  // namespace hbasis
