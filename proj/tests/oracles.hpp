#pragma once

// Brute-force reference implementations. They share no code with the
// library and favour obviousness over speed; keep inputs tiny.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

// All multisets of size h drawn from `elems`, visited in non-decreasing index order.
inline void for_each_multiset(const std::vector<u64>& elems, unsigned h,
                              const std::function<void(const std::vector<u64>&)>& fn) {
  std::vector<u64> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == h) {
      fn(pick);
      return;
    }
    for (std::size_t i = from; i < elems.size(); ++i) {
      pick.push_back(elems[i]);
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
}

inline std::set<u64> hfold(const std::vector<u64>& elems, unsigned h, u64 limit) {
  std::set<u64> out;
  for_each_multiset(elems, h, [&](const std::vector<u64>& m) {
    u64 s = 0;
    for (u64 v : m) s += v;
    if (s <= limit) out.insert(s);
  });
  return out;
}

inline std::optional<u64> n_of(const std::vector<u64>& elems, unsigned h) {
  const u64 top = *std::max_element(elems.begin(), elems.end()) * h;
  const auto cov = hfold(elems, h, top);
  if (!cov.count(0)) return std::nullopt;
  u64 n = 0;
  while (n + 1 <= top && cov.count(n + 1)) ++n;
  return n;
}

inline bool is_bk(const std::vector<u64>& elems, unsigned k, std::optional<u64> mod = std::nullopt) {
  std::map<u64, std::vector<u64>> seen;
  bool ok = true;
  for_each_multiset(elems, k, [&](const std::vector<u64>& m) {
    u64 s = 0;
    for (u64 v : m) s += v;
    if (mod) s %= *mod;
    auto [it, fresh] = seen.emplace(s, m);
    if (!fresh) ok = false;
  });
  return ok;
}

// Largest B_k subset of [0, n] by trying every subset (n <= ~14).
inline std::vector<u64> phi_bruteforce(u64 n, unsigned k) {
  std::vector<u64> best;
  for (u64 mask = 1; mask < (u64{1} << (n + 1)); ++mask) {
    std::vector<u64> s;
    for (u64 i = 0; i <= n; ++i) {
      if (mask >> i & 1U) s.push_back(i);
    }
    if (s.size() < best.size()) continue;
    if (!is_bk(s, k)) continue;
    if (s.size() > best.size() || s < best) best = s;
  }
  return best;
}

// Polynomials over F_p as coefficient vectors, constant term first.
inline std::vector<u64> mulmod_poly(const std::vector<u64>& a, const std::vector<u64>& b,
                                    const std::vector<u64>& f, u64 p) {
  const std::size_t k = f.size() - 1;
  std::vector<u64> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > k;) {
    const u64 c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + p * p - c * f[i]) % p;
  }
  prod.resize(k, 0);
  return prod;
}

// Multiplicative order of x modulo f, or 0 if x is not a unit within p^k steps.
inline u64 order_of_x(const std::vector<u64>& f, u64 p) {
  const std::size_t k = f.size() - 1;
  std::vector<u64> one(k, 0), x(k, 0), cur(k, 0);
  one[0] = 1;
  x[1 % k] = (k == 1) ? (p - f[0]) % p : 1;
  cur = x;
  u64 total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= p;
  for (u64 d = 1; d < total; ++d) {
    if (cur == one) return d;
    cur = mulmod_poly(cur, x, f, p);
  }
  return 0;
}

// Irreducible iff no root and no monic factor of degree <= k/2 (trial division).
inline bool irreducible_by_trial(const std::vector<u64>& f, u64 p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    u64 count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      std::vector<u64> g(d + 1, 0);
      u64 rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      g[d] = 1;
      // long division f mod g
      std::vector<u64> r = f;
      for (std::size_t top = k; top >= d; --top) {
        const u64 c = r[top];
        if (c != 0)
          for (std::size_t i = 0; i <= d; ++i) r[top - d + i] = (r[top - d + i] + p * p - c * g[i]) % p;
        if (top == d) break;
      }
      if (std::all_of(r.begin(), r.begin() + d, [](u64 c) { return c == 0; })) return false;
    }
  }
  return true;
}

inline std::vector<u64> first_primitive(u64 p, unsigned k) {
  u64 total = 1;
  for (unsigned i = 0; i < k; ++i) total *= p;
  for (u64 idx = 0; idx < total; ++idx) {
    std::vector<u64> f(k + 1, 0);
    u64 rest = idx;
    for (unsigned i = k; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (irreducible_by_trial(f, p) && order_of_x(f, p) == total - 1) return f;
  }
  return {};
}

// Residues of Z_q covered by base + X1 + ... (direct enumeration of tuples).
inline std::set<u64> residue_sum(const std::vector<u64>& base, const std::vector<std::vector<u64>>& fams, u64 q) {
  std::set<u64> cur(base.begin(), base.end());
  for (const auto& f : fams) {
    std::set<u64> next;
    for (u64 a : cur)
      for (u64 x : f) next.insert((a + x) % q);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace oracle
