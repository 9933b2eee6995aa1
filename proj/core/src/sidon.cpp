#include "hbasis/sidon.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "hbasis/bitvec.hpp"
#include "hbasis/checked.hpp"
#include "hbasis/errors.hpp"

namespace hbasis {

namespace {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
Poly reduce(Poly a, const Poly& f, std::uint64_t p) {
  const std::size_t df = f.size() - 1;
  trim(a);
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t off = a.size() - 1 - df;
    for (std::size_t i = 0; i < df; ++i) {
      a[off + i] = (a[off + i] + p - mulmod(lead, f[i], p)) % p;
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly mul_mod_poly(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return reduce(std::move(prod), f, p);
}

Poly pow_mod_poly(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r = reduce(Poly{1}, f, p);
  base = reduce(std::move(base), f, p);
  while (e != 0) {
    if (e & 1U) r = mul_mod_poly(r, base, f, p);
    base = mul_mod_poly(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b, with b made monic first.
    const std::uint64_t inv = inverse_mod_prime(b.back(), p);
    for (auto& c : b) c = mulmod(c, inv, p);
    a = reduce(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void check_field_args(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw GuardTripped("field characteristic too large");
  if (k < 2) throw InvalidInput("field degree must be >= 2");
  checked_pow(p, k, "field order p^k");
}

std::uint64_t encode(const Poly& coeffs, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p + coeffs[i];
  return v;
}

// Multiplies a k-coefficient element by x, reducing with the monic modulus.
void times_x(Poly& c, const Poly& f, std::uint64_t p) {
  const std::size_t k = c.size();
  const std::uint64_t top = c[k - 1];
  for (std::size_t i = k - 1; i >= 1; --i) c[i] = (c[i - 1] + p - mulmod(top, f[i], p)) % p;
  c[0] = (p - mulmod(top, f[0], p)) % p;
}

std::vector<std::uint64_t> logs_by_power_walk(const FieldSpec& field) {
  const std::uint64_t p = field.p;
  const unsigned k = field.k;
  const std::uint64_t n = field.order() - 1;
  std::vector<std::uint64_t> logs(p, n);
  std::uint64_t found = 0;
  Poly cur(k, 0);
  cur[0] = 1;
  for (std::uint64_t d = 0; d < n && found < p; ++d) {
    const bool linear_monic =
        cur[1] == 1 && std::all_of(cur.begin() + 2, cur.end(), [](std::uint64_t c) { return c == 0; });
    if (linear_monic && logs[cur[0]] == n) {
      logs[cur[0]] = d;
      ++found;
    }
    times_x(cur, field.modulus, p);
  }
  if (found != p) throw std::logic_error("power walk missed a discrete log");
  return logs;
}

std::vector<std::uint64_t> logs_by_baby_giant(const FieldSpec& field) {
  const std::uint64_t p = field.p;
  const unsigned k = field.k;
  const std::uint64_t n = field.order() - 1;
  // p targets share one baby table; m ≈ sqrt(p n) balances table size
  // against p * (n / m) giant steps. Capped to bound memory.
  constexpr std::uint64_t kMaxBabySteps = std::uint64_t{1} << 22;
  const auto balanced = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(p) * static_cast<double>(n))));
  const std::uint64_t m = std::max<std::uint64_t>(1, std::min({balanced, n, kMaxBabySteps}));

  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m * 2);
  Poly cur(k, 0);
  cur[0] = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(encode(cur, p), j);
    times_x(cur, field.modulus, p);
  }
  // giant = x^{-m} = x^{n - m}
  const Poly giant = pow_mod_poly(Poly{0, 1}, n - (m % n), field.modulus, p);
  const std::uint64_t giant_steps = n / m + 1;

  std::vector<std::uint64_t> logs(p, n);
  for (std::uint64_t a = 0; a < p; ++a) {
    Poly y(k, 0);
    y[0] = a;
    y[1] = 1;
    for (std::uint64_t i = 0; i <= giant_steps; ++i) {
      Poly padded = y;
      padded.resize(k, 0);
      auto hit = baby.find(encode(padded, p));
      if (hit != baby.end()) {
        logs[a] = (i * m + hit->second) % n;
        break;
      }
      y = mul_mod_poly(y, giant, field.modulus, p);
    }
    if (logs[a] == n) throw std::logic_error("baby-step giant-step missed a discrete log");
  }
  return logs;
}

}  // namespace

std::uint64_t FieldSpec::order() const { return checked_pow(p, k, "field order p^k"); }

bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p) {
  const Poly f(monic.begin(), monic.end());
  if (f.size() < 2 || f.back() != 1) throw InvalidInput("is_irreducible expects a monic polynomial");
  const std::uint64_t k = f.size() - 1;
  if (k == 1) return true;
  // Rabin: x^{p^k} ≡ x (mod f) and gcd(x^{p^{k/r}} - x, f) = 1 for primes r | k.
  std::vector<Poly> frob(k + 1);  // frob[i] = x^{p^i} mod f
  frob[0] = reduce(Poly{0, 1}, f, p);
  for (std::uint64_t i = 1; i <= k; ++i) frob[i] = pow_mod_poly(frob[i - 1], p, f, p);
  if (frob[k] != frob[0]) return false;
  for (std::uint64_t r : prime_factors(k)) {
    Poly g = frob[k / r];
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    if (g.empty()) return false;
    if (poly_gcd(f, g, p).size() != 1) return false;
  }
  return true;
}

namespace {

// Order test for x, given the prime factors of p^k - 1.
bool x_is_generator(const Poly& f, std::uint64_t p, std::uint64_t n,
                    const std::vector<std::uint64_t>& factors) {
  const Poly x{0, 1};
  const Poly one = reduce(Poly{1}, f, p);
  if (pow_mod_poly(x, n, f, p) != one) return false;
  for (std::uint64_t r : factors) {
    if (pow_mod_poly(x, n / r, f, p) == one) return false;
  }
  return true;
}

// g generates F_p^*.
bool is_primitive_root(std::uint64_t g, std::uint64_t p, const std::vector<std::uint64_t>& factors) {
  if (g % p == 0) return false;
  for (std::uint64_t r : factors) {
    if (powmod(g, (p - 1) / r, p) == 1) return false;
  }
  return true;
}

}  // namespace

bool is_primitive(std::span<const std::uint64_t> monic, std::uint64_t p) {
  if (!is_irreducible(monic, p)) return false;
  const Poly f(monic.begin(), monic.end());
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  const std::uint64_t n = checked_pow(p, k) - 1;
  return x_is_generator(f, p, n, prime_factors(n));
}

FieldSpec build_field(std::uint64_t p, unsigned k) {
  check_field_args(p, k);
  const std::uint64_t total = checked_pow(p, k);
  const std::uint64_t n = total - 1;
  const std::vector<std::uint64_t> order_factors = prime_factors(n);
  const std::vector<std::uint64_t> unit_factors = prime_factors(p - 1);
  Poly f(k + 1, 0);
  f[k] = 1;
  // Lexicographic order on (c0, c1, ..., c_{k-1}): c0 varies slowest.
  // (-1)^k c0 is the norm of x, which generates F_p^* when x generates GF(p^k)^*.
  const std::uint64_t stride = total / p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned i = k; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    const std::uint64_t norm = k % 2 == 0 ? f[0] : (p - f[0]) % p;
    if (!is_primitive_root(norm, p, unit_factors)) {
      idx += stride - 1;  // skip every polynomial with this constant term
      continue;
    }
    if (is_irreducible(f, p) && x_is_generator(f, p, n, order_factors)) return FieldSpec{p, k, f};
  }
  throw std::logic_error("no primitive polynomial found over F_" + std::to_string(p));
}

SidonSet bose_chowla(std::uint64_t p, unsigned k, DiscreteLogMethod method) {
  check_field_args(p, k);
  if (checked_pow(p, k) > kMaxFieldOrder) throw GuardTripped("field order exceeds bose_chowla guard");
  FieldSpec field = build_field(p, k);
  const std::uint64_t n = field.order() - 1;
  if (method == DiscreteLogMethod::kAuto) {
    method = n <= kPowerWalkLimit ? DiscreteLogMethod::kPowerWalk : DiscreteLogMethod::kBabyGiant;
  }
  std::vector<std::uint64_t> logs = method == DiscreteLogMethod::kPowerWalk
                                        ? logs_by_power_walk(field)
                                        : logs_by_baby_giant(field);
  std::sort(logs.begin(), logs.end());
  SidonSet out;
  out.elements = std::move(logs);
  out.order_modulus = n;
  out.k = k;
  out.field = std::move(field);
  return out;
}

bool is_bk(std::span<const std::uint64_t> s, unsigned k, std::optional<std::uint64_t> modulus) {
  if (k == 0) throw InvalidInput("is_bk: k must be >= 1");
  if (modulus && *modulus == 0) throw InvalidInput("is_bk: modulus must be >= 1");
  std::vector<std::uint64_t> elems(s.begin(), s.end());
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw InvalidInput("is_bk: set has duplicate elements");
  }
  if (elems.empty()) return true;
  const std::uint64_t count = binomial(elems.size() + k - 1, k);
  if (count > 50'000'000) throw GuardTripped("is_bk: too many multisets to enumerate");

  std::vector<std::uint64_t> sums;
  sums.reserve(count);
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::uint64_t sum = 0;
    for (std::size_t i : idx) sum = checked_add(sum, elems[i], "is_bk sum");
    sums.push_back(modulus ? sum % *modulus : sum);
    // next non-decreasing index tuple
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == elems.size() - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < k; ++i) idx[i] = v;
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

std::uint64_t phi_range_guard(unsigned k) {
  switch (k) {
    case 1: return 1'000'000;
    case 2: return 64;
    case 3: return 40;
    default: return 24;
  }
}

namespace {

class PhiSearch {
 public:
  PhiSearch(std::uint64_t n, unsigned k, const std::vector<std::size_t>& shorter)
      : n_(n), k_(k), shorter_(shorter) {}

  PhiResult run() {
    std::vector<BitVector> layers(k_ + 1, BitVector(k_ * n_ + 1));
    layers[0].set(0);
    dfs(0, layers);
    return PhiResult{best_.size(), best_};
  }

 private:
  // layers[j] holds the j-fold multiset sums of current_.
  void dfs(std::uint64_t next, const std::vector<BitVector>& layers) {
    if (current_.size() > best_.size()) best_ = current_;
    for (std::uint64_t e = next; e <= n_; ++e) {
      // Elements still to come lie in [e, n], a translate of [0, n - e].
      if (current_.size() + shorter_[n_ - e] <= best_.size()) break;
      std::vector<BitVector> grown = layers;
      if (!extend(grown, e)) continue;
      current_.push_back(e);
      dfs(e + 1, grown);
      current_.pop_back();
    }
  }

  // Adds e to every layer; false if two k-sums collide.
  bool extend(std::vector<BitVector>& layers, std::uint64_t e) const {
    for (unsigned j = k_; j >= 1; --j) {
      BitVector& dst = layers[j];
      for (unsigned t = 1; t <= j; ++t) {
        const BitVector& src = layers[j - t];
        const std::uint64_t shift = t * e;
        for (auto v = src.next_set(0); v; v = src.next_set(*v + 1)) {
          const std::uint64_t s = *v + shift;
          if (dst.test(s)) {
            if (j == k_) return false;
            continue;
          }
          dst.set(s);
        }
      }
    }
    return true;
  }

  std::uint64_t n_;
  unsigned k_;
  const std::vector<std::size_t>& shorter_;
  std::vector<std::uint64_t> current_;
  std::vector<std::uint64_t> best_;
};

}  // namespace

PhiResult phi_exact(std::uint64_t n, unsigned k) {
  if (k == 0) throw InvalidInput("phi_exact: k must be >= 1");
  if (n > phi_range_guard(k)) {
    throw GuardTripped("phi_exact: n = " + std::to_string(n) + " exceeds the range guard " +
                       std::to_string(phi_range_guard(k)));
  }
  if (k == 1) {
    std::vector<std::uint64_t> all(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) all[i] = i;
    return PhiResult{all.size(), all};
  }
  // phi over shorter ranges bounds the tail of each branch.
  std::vector<std::size_t> shorter(n + 1, 0);
  PhiResult result;
  for (std::uint64_t len = 0; len <= n; ++len) {
    shorter[len] = len + 1;  // optimistic placeholder for the range being solved
    result = PhiSearch(len, k, shorter).run();
    shorter[len] = result.size;
  }
  return result;
}

}  // namespace hbasis
