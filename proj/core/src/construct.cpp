#include "hbasis/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hbasis/checked.hpp"
#include "hbasis/errors.hpp"
#include "hbasis/sidon.hpp"

namespace hbasis {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::uint64_t factorial(unsigned v) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= v; ++i) r = checked_mul(r, i, "factorial");
  return r;
}

struct Derived {
  std::uint64_t m = 0, q = 0, p_sidon = 0;
};

Derived derive(std::uint64_t p, unsigned h, unsigned k, unsigned a) {
  Derived d;
  d.m = checked_mul(checked_pow(p, h - a, "p^(h-a)"), factorial(h - a), "m");
  d.q = checked_pow(p, h - a + k, "q = p^(h-a+k)");
  d.p_sidon = next_prime_at_least(ceil_root(d.m, h - a));
  return d;
}

void check_plan_inputs(std::uint64_t n, unsigned h) {
  if (h < 3) throw Infeasible("the composite construction needs h >= 3; use digit_basis or search");
  if (n < 2) throw Infeasible("the composite construction needs n >= 2");
}

std::uint64_t digit_base_for(std::uint64_t q, unsigned h) {
  const std::uint64_t target = checked_add(checked_mul(h, q, "h*q"), 1);
  return std::max<std::uint64_t>(2, ceil_root(target, h));
}

// Enumerates all size-r multisets of B (as index tuples) with their sums.
std::vector<HEntry> multiset_sums(const std::vector<std::uint64_t>& b, unsigned r) {
  const std::uint64_t count = binomial(b.size() + r - 1, r);
  if (count > 50'000'000) throw GuardTripped("(h-a)B has too many entries to tabulate");
  std::vector<HEntry> out;
  out.reserve(count);
  std::vector<std::uint32_t> idx(r, 0);
  while (true) {
    std::uint64_t sum = 0;
    for (std::uint32_t i : idx) sum = checked_add(sum, b[i], "(h-a)B sum");
    out.push_back(HEntry{sum, idx});
    std::size_t pos = r;
    while (pos > 0 && idx[pos - 1] == b.size() - 1) --pos;
    if (pos == 0) break;
    const std::uint32_t v = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < r; ++i) idx[i] = v;
  }
  std::sort(out.begin(), out.end(), [](const HEntry& x, const HEntry& y) {
    return x.value != y.value ? x.value < y.value : x.parts < y.parts;
  });
  return out;
}

}  // namespace

double tau() {
  auto f = [](double t) { return std::exp(t) * (1.0 - t) - std::exp(-1.0); };
  double lo = 0.0, hi = 1.0;  // f(0) > 0 > f(1), f strictly decreasing on (0, 1)
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::kFormula: return "formula";
    case Feasibility::kGridFallback: return "grid-fallback";
    case Feasibility::kOverride: return "override";
  }
  return "unknown";
}

BasisSet digit_basis(std::uint64_t b, unsigned h) {
  if (b < 2) throw InvalidInput("digit_basis: base must be >= 2");
  if (h < 1) throw InvalidInput("digit_basis: h must be >= 1");
  std::vector<std::uint64_t> elems;
  std::uint64_t power = 1;
  for (unsigned i = 0; i < h; ++i) {
    for (std::uint64_t j = 0; j < b; ++j) elems.push_back(checked_mul(j, power, "digit basis"));
    if (i + 1 < h) power = checked_mul(power, b, "digit basis");
  }
  return BasisSet(std::move(elems));
}

std::uint64_t predicted_size(std::uint64_t n, unsigned h, unsigned k, unsigned a) {
  const std::uint64_t p = ceil_root(n, h);
  const Derived d = derive(p, h, k, a);
  const std::uint64_t base = digit_base_for(d.q, h);
  const std::uint64_t size_a = std::uint64_t{h} * (base - 1) + 1;
  const std::uint64_t size_b = d.p_sidon;
  const std::uint64_t h_size = std::min<std::uint64_t>(d.q, binomial(d.p_sidon + (h - a) - 1, h - a));
  const auto size_c = static_cast<std::uint64_t>(complement_size_bound(d.q, h_size, k));
  const std::uint64_t size_d = 1 + (p - 1) * (a - k);
  return size_a + size_b + size_c + size_d;
}

ConstructionPlan plan_params(std::uint64_t n, unsigned h, std::optional<PlanOverrides> overrides) {
  check_plan_inputs(n, h);
  ConstructionPlan plan;
  plan.n = n;
  plan.h = h;
  plan.p = ceil_root(n, h);
  plan.tau = tau();

  auto fill = [&](unsigned k, unsigned a, Feasibility how) {
    const Derived d = derive(plan.p, h, k, a);
    plan.k = k;
    plan.a = a;
    plan.m = d.m;
    plan.q = d.q;
    plan.p_sidon = d.p_sidon;
    plan.feasibility = how;
    plan.predicted_size = predicted_size(n, h, k, a);
    return plan;
  };

  if (overrides) {
    const auto [k, a] = *overrides;
    if (!(1 <= k && k <= a && a < h)) {
      throw InvalidInput("overrides must satisfy 1 <= k <= a < h");
    }
    return fill(k, a, Feasibility::kOverride);
  }

  const double loglog = std::log(std::log(static_cast<double>(n)));
  const double k_formula = std::ceil(loglog / plan.tau);
  if (k_formula >= 1) {
    const auto k = static_cast<unsigned>(k_formula);
    const auto a = k + static_cast<unsigned>(std::ceil(2.0 * std::log(static_cast<double>(h))));
    if (k <= a && a < h) return fill(k, a, Feasibility::kFormula);
  }

  // Grid fallback over 1 <= k <= a <= h - 2, keeping the smallest estimate.
  std::optional<std::pair<unsigned, unsigned>> best;
  std::uint64_t best_size = 0;
  for (unsigned k = 1; k + 2 <= h; ++k) {
    for (unsigned a = k; a + 2 <= h; ++a) {
      std::uint64_t size = 0;
      try {
        size = predicted_size(n, h, k, a);
      } catch (const GuardTripped&) {
        continue;
      }
      if (!best || size < best_size) {
        best = {k, a};
        best_size = size;
      }
    }
  }
  // h >= 3 always offers (1, 1), so an empty grid means every pair overflowed.
  if (!best) throw GuardTripped("every (k, a) overflows for n = " + std::to_string(n));
  return fill(best->first, best->second, Feasibility::kGridFallback);
}

ConstructionResult build_composite_basis(const ConstructionPlan& plan) {
  const unsigned h = plan.h;
  const unsigned k = plan.k;
  const unsigned a = plan.a;
  if (!(1 <= k && k <= a && a < h)) throw InvalidInput("plan violates 1 <= k <= a < h");
  const unsigned sidon_order = h - a;
  const std::uint64_t q = plan.q;
  if (q != checked_pow(plan.p, h - a + k)) throw InvalidInput("plan q != p^(h-a+k)");
  if (q >= kNone) throw GuardTripped("modulus q too large for the decomposition tables");

  ConstructionResult res;
  res.plan = plan;

  // (1) B: a B_{h-a} set; for h - a = 1 every set qualifies, so take an interval.
  std::vector<std::uint64_t> b;
  if (sidon_order == 1) {
    b.resize(plan.p_sidon);
    for (std::uint64_t i = 0; i < plan.p_sidon; ++i) b[i] = i;
  } else {
    b = bose_chowla(plan.p_sidon, sidon_order).elements;
  }

  // (2) H = (h-a)B as integers, then mod q.
  res.h_entries = multiset_sums(b, sidon_order);
  std::vector<std::uint64_t> h_values;
  h_values.reserve(res.h_entries.size());
  for (const auto& e : res.h_entries) h_values.push_back(e.value);
  const ResidueSet h_res(q, h_values);
  if (static_cast<double>(h_res.size()) * static_cast<double>(q) > kMaxComplementWork) {
    throw GuardTripped("complement stage too large: |H| * q = " +
                       std::to_string(static_cast<double>(h_res.size()) * static_cast<double>(q)));
  }

  // (3) C = union of a k-complement of H in Z_q.
  res.complement = k_complement(h_res, k);
  if (!res.complement.complete) throw std::logic_error("k_complement returned an incomplete cover");
  std::vector<std::uint64_t> c = res.complement.united().members();

  // (4) D = {j p^i : 0 <= j < p, h-a+k <= i < h}
  std::vector<std::uint64_t> d{0};
  for (unsigned i = h - a + k; i < h; ++i) {
    const std::uint64_t power = checked_pow(plan.p, i, "p^i");
    for (std::uint64_t j = 1; j < plan.p; ++j) d.push_back(checked_mul(j, power, "D element"));
  }

  // (5) A: a digit basis covering [0, hq].
  const std::uint64_t base = digit_base_for(q, h);
  res.a = digit_basis(base, h);
  res.b = BasisSet(b);
  res.c = BasisSet(c);
  res.d = BasisSet(d);

  // (6) G = A ∪ B ∪ C ∪ D
  std::vector<std::uint64_t> all;
  for (const BasisSet* part : {&res.a, &res.b, &res.c, &res.d}) {
    all.insert(all.end(), part->elements().begin(), part->elements().end());
  }
  res.g = BasisSet(std::move(all));

  auto& st = res.stats;
  st.a = res.a.size();
  st.b = res.b.size();
  st.c = res.c.size();
  st.d = res.d.size();
  st.total = res.g.size();
  st.sum = st.a + st.b + st.c + st.d;
  st.disjoint = st.total == st.sum;
  st.a_max = res.a.max();
  st.b_max = res.b.max();
  st.c_max = res.c.max();
  st.d_max = res.d.max();
  st.h_integer = res.h_entries.size();
  st.h_residues = h_res.size();
  st.digit_base = base;

  // (7) Mandatory full check over [0, n].
  const Certificate cert = verify_basis(res.g, h, plan.n);
  res.verified = cert.ok;
  res.first_gap = cert.first_gap;
  return res;
}

char to_char(Component c) {
  switch (c) {
    case Component::kA: return 'A';
    case Component::kB: return 'B';
    case Component::kC: return 'C';
    case Component::kD: return 'D';
  }
  return '?';
}

Decomposer::Decomposer(const ConstructionResult& result) : result_(result) {
  const ConstructionPlan& plan = result.plan;
  const std::uint64_t q = plan.q;
  low_limit_ = std::min(checked_mul(plan.h, q), checked_add(plan.n, 1));
  if (low_limit_ > 0) low_.emplace(result.a, plan.h, low_limit_ - 1);
  digit_headroom_ = checked_pow(plan.p, plan.a - plan.k, "p^(a-k)");

  // Only needed when some z in [hq, n] exists.
  if (low_limit_ > plan.n) return;
  const auto& fams = result.complement.families;
  pick_.resize(fams.size());
  std::vector<std::uint64_t> reach;  // residues reachable by X_1 .. X_i
  for (std::size_t i = 0; i < fams.size(); ++i) {
    auto& layer = pick_[i];
    layer.assign(q, kNone);
    const auto members = fams[i].members();
    if (i == 0) {
      for (std::uint64_t x : members) layer[x] = static_cast<std::uint32_t>(x);
    } else {
      for (std::uint64_t v : reach) {
        for (std::uint64_t x : members) {
          const std::uint64_t w = (v + x) % q;
          if (layer[w] == kNone) layer[w] = static_cast<std::uint32_t>(x);
        }
      }
    }
    reach.clear();
    for (std::uint64_t v = 0; v < q; ++v) {
      if (layer[v] != kNone) reach.push_back(v);
    }
  }
}

Decomposition Decomposer::decompose(std::uint64_t z) const {
  const ConstructionPlan& plan = result_.plan;
  if (!result_.verified) throw InvalidInput("decompose needs a verified construction");
  if (z > plan.n) throw InvalidInput("decompose: z exceeds n");
  Decomposition out;
  out.z = z;

  if (z < low_limit_) {
    auto parts = low_->find(z);
    if (!parts) throw std::logic_error("digit basis failed to represent z < hq");
    for (std::uint64_t v : *parts) out.addends.push_back({v, Component::kA});
    return out;
  }

  const std::uint64_t q = plan.q;
  const std::uint64_t s = z / q;
  const std::uint64_t r = z % q;
  const std::size_t k = pick_.size();
  std::optional<std::string> first_violation;

  for (const HEntry& x : result_.h_entries) {
    const std::uint64_t need = (r + q - x.value % q) % q;
    if (pick_[k - 1][need] == kNone) continue;
    std::vector<std::uint64_t> ys(k);
    std::uint64_t v = need;
    std::uint64_t y = 0;
    for (std::size_t i = k; i-- > 0;) {
      ys[i] = pick_[i][v];
      y += ys[i];
      v = (v + q - ys[i]) % q;
    }
    const std::uint64_t xy = x.value + y;  // ≡ r (mod q), so xy >= r
    const std::uint64_t t = (xy - r) / q;
    std::optional<std::string> why;
    if (t >= plan.h) {
      why = "t = " + std::to_string(t) + " >= h";
    } else if (t > s) {
      why = "s - t < 0 (s = " + std::to_string(s) + ", t = " + std::to_string(t) + ")";
    } else if (s - t >= digit_headroom_) {
      why = "s - t = " + std::to_string(s - t) + " >= p^(a-k)";
    }
    if (why) {
      if (!first_violation) first_violation = "z = " + std::to_string(z) + ": " + *why;
      continue;
    }

    for (std::uint32_t idx : x.parts) out.addends.push_back({result_.b.elements()[idx], Component::kB});
    for (std::uint64_t c : ys) out.addends.push_back({c, Component::kC});
    std::uint64_t digits = s - t;
    std::uint64_t power = checked_pow(plan.p, plan.h - plan.a + plan.k);
    for (unsigned i = 0; i < plan.a - plan.k; ++i) {
      out.addends.push_back({(digits % plan.p) * power, Component::kD});
      digits /= plan.p;
      if (i + 1 < plan.a - plan.k) power *= plan.p;
    }
    std::uint64_t total = 0;
    for (const auto& ad : out.addends) total += ad.value;
    if (total != z || out.addends.size() != plan.h) {
      throw std::logic_error("decomposition does not recompute to z");
    }
    return out;
  }
  out.violation = first_violation.value_or("z = " + std::to_string(z) + ": no x in H with a complement match");
  return out;
}

Decomposition decompose(std::uint64_t z, const ConstructionResult& result) {
  return Decomposer(result).decompose(z);
}

}  // namespace hbasis
