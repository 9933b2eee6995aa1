#include "hbasis/bounds.hpp"

#include <cmath>

#include "hbasis/checked.hpp"
#include "hbasis/errors.hpp"

namespace hbasis {

namespace {

constexpr double kLogLogCoefficient = 2.32;
constexpr double kRelTol = 1e-9;

Rational rational_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

void require_positive(unsigned v, const char* what) {
  if (v == 0) throw InvalidInput(std::string(what) + " must be >= 1");
}

BoundReport exact_report(std::string name, std::string inputs, const Rational& v,
                         BoundDirection dir, std::string dropped = {}) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.value = to_double(v);
  r.exact = v;
  r.direction = dir;
  r.dropped_terms = std::move(dropped);
  return r;
}

}  // namespace

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(BoundDirection d) { return d == BoundDirection::kLower ? "lower" : "upper"; }

RohrbachBracket rohrbach(unsigned h, unsigned k) {
  require_positive(h, "h");
  require_positive(k, "k");
  return RohrbachBracket{rational_pow(Rational(k, h), h), binomial(std::uint64_t{k} + h, h)};
}

Rational rohrbach_quadratic(std::uint64_t k) {
  const Rational kk(k);
  return kk * kk / 4 + 2 * kk;
}

Rational hammerer_hofmeister(std::uint64_t k) {
  const Rational kk(k);
  return Rational(10, 9) * kk * kk / 4;
}

Rational improved_quadratic(std::uint64_t k) {
  const Rational kk(k);
  return Rational(2, 7) * kk * kk;
}

Rational hofmeister_lower(unsigned h, unsigned k) {
  require_positive(h, "h");
  require_positive(k, "k");
  const unsigned thirds = h / 3;
  const unsigned pairs = (h - 3 * thirds) / 2;
  return rational_pow(Rational(4, 3), thirds) * rational_pow(Rational(8, 7), pairs) *
         rational_pow(Rational(k, h), h);
}

double zeta_upper_hofmeister(unsigned h, double n) {
  require_positive(h, "h");
  return std::pow(n, 1.0 / h) * h / std::cbrt(4.0 / 3.0);
}

CompositeBound zeta_upper_composite(unsigned h, double n) {
  require_positive(h, "h");
  if (!(n > 1.0)) throw InvalidInput("zeta_upper_composite needs n > 1");
  const double ln_n = std::log(n);
  CompositeBound b;
  b.value = std::pow(n, 1.0 / h) * (h / std::exp(1.0) + kLogLogCoefficient * std::log(ln_n));
  // e^{h^2} overflows doubles for h >= 27; compare logarithms instead.
  b.precondition_met = ln_n >= static_cast<double>(h) * h * (1.0 - kRelTol);
  return b;
}

double bose_chowla_lower(double n, unsigned k) {
  require_positive(k, "k");
  return std::pow(n, 1.0 / k);
}

std::vector<BoundReport> bounds_for_hk(unsigned h, unsigned k) {
  const std::string in = "h=" + std::to_string(h) + ";k=" + std::to_string(k);
  const RohrbachBracket br = rohrbach(h, k);
  std::vector<BoundReport> out;
  out.push_back(exact_report("rohrbach_lower", in, br.lower, BoundDirection::kLower));
  out.push_back(exact_report("rohrbach_upper", in, Rational(br.upper), BoundDirection::kUpper));
  out.push_back(exact_report("hofmeister_lower", in, hofmeister_lower(h, k), BoundDirection::kLower,
                             "-O(k^(h-1))"));
  if (h == 2) {
    out.push_back(exact_report("rohrbach_quadratic", in, rohrbach_quadratic(k),
                               BoundDirection::kLower, "+delta (delta<=1)"));
    out.push_back(exact_report("hammerer_hofmeister", in, hammerer_hofmeister(k),
                               BoundDirection::kLower));
    out.push_back(exact_report("improved_quadratic", in, improved_quadratic(k),
                               BoundDirection::kLower));
  }
  return out;
}

std::vector<BoundReport> bounds_for_hn(unsigned h, std::uint64_t n) {
  const std::string in = "h=" + std::to_string(h) + ";n=" + std::to_string(n);
  const double nd = static_cast<double>(n);
  std::vector<BoundReport> out;

  BoundReport hof;
  hof.name = "zeta_upper_hofmeister";
  hof.inputs = in;
  hof.value = zeta_upper_hofmeister(h, nd);
  hof.direction = BoundDirection::kUpper;
  hof.dropped_terms = "o(h)";
  out.push_back(hof);

  if (n >= 2) {
    const CompositeBound t1 = zeta_upper_composite(h, nd);
    BoundReport r;
    r.name = "zeta_upper_composite";
    r.inputs = in;
    r.value = t1.value;
    r.direction = BoundDirection::kUpper;
    r.dropped_terms = "o(h)";
    r.precondition_met = t1.precondition_met;
    out.push_back(r);
  }

  BoundReport bc;
  bc.name = "bose_chowla_lower";
  bc.inputs = "n=" + std::to_string(n) + ";k=" + std::to_string(h);
  bc.value = bose_chowla_lower(nd, h);
  bc.direction = BoundDirection::kLower;
  bc.dropped_terms = "o(n^(1/k))";
  out.push_back(bc);
  return out;
}

bool within_lower(double value, double lower) {
  return value >= lower - kRelTol * std::max(1.0, std::fabs(lower));
}

bool within_upper(double value, double upper) {
  return value <= upper + kRelTol * std::max(1.0, std::fabs(upper));
}

}  // namespace hbasis
