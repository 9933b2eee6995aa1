#pragma once

#include <cstdint>
#include <string_view>

#include "hbasis/errors.hpp"

namespace hbasis {

// Overflow-checked unsigned arithmetic. Every size that feeds a bit map or a
// modulus goes through these; wrapped values are never returned.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b,
                                 std::string_view what = "addition") {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw GuardTripped(std::string("overflow in ") + std::string(what));
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                                 std::string_view what = "multiplication") {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw GuardTripped(std::string("overflow in ") + std::string(what));
  }
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                                 std::string_view what = "power") {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base, what);
  return r;
}

// Smallest r >= 0 with r^k >= x (exact integer ceiling of the k-th root).
inline std::uint64_t ceil_root(std::uint64_t x, unsigned k) {
  if (k == 0) throw InvalidInput("ceil_root: k must be >= 1");
  if (x <= 1 || k == 1) return x;
  auto pow_ge = [&](std::uint64_t r) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (__builtin_mul_overflow(acc, r, &acc)) return true;
    }
    return acc >= x;
  };
  std::uint64_t lo = 1, hi = 1;
  while (!pow_ge(hi)) hi *= 2;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (pow_ge(mid)) hi = mid; else lo = mid + 1;
  }
  return lo;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw GuardTripped("overflow in binomial");
  }
  return static_cast<std::uint64_t>(r);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 7; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t next_prime_at_least(std::uint64_t n) {
  if (n <= 2) return 2;
  while (!is_prime(n)) n = checked_add(n, 1, "prime search");
  return n;
}

}  // namespace hbasis
