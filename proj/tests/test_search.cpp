#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hbasis/bounds.hpp"
#include "hbasis/errors.hpp"
#include "hbasis/search.hpp"
#include "oracles.hpp"

using namespace hbasis;
using u64 = std::uint64_t;

namespace {

std::vector<u64> elems(const BasisSet& b) { return {b.elements().begin(), b.elements().end()}; }

}  // namespace

TEST_CASE("extremal_n examples") {
  for (unsigned k = 1; k <= 8; ++k) {
    const SearchResult r = extremal_n(1, k);
    CHECK(r.value == k - 1);
    std::vector<u64> want(k);
    for (unsigned i = 0; i < k; ++i) want[i] = i;
    CHECK(elems(r.witness) == want);
    CHECK(r.proof_of_optimality);
  }
  const SearchResult r23 = extremal_n(2, 3);
  CHECK(r23.value == 4);
  CHECK(elems(r23.witness) == std::vector<u64>{0, 1, 2});
  const SearchResult r24 = extremal_n(2, 4);
  CHECK(r24.value == 8);
  CHECK(elems(r24.witness) == std::vector<u64>{0, 1, 3, 4});
  CHECK_THROWS_AS(extremal_n(2, 0), InvalidInput);
}

TEST_CASE("oracle_exhaustive examples") {
  const SearchResult r = oracle_exhaustive(2, 2, 10);
  CHECK(r.value == 2);
  CHECK(elems(r.witness) == std::vector<u64>{0, 1});
  CHECK(oracle_exhaustive(2, 3, 10).value == 4);
}

TEST_CASE("extremal_n agrees with the exhaustive oracle, brackets and witnesses") {
  std::vector<std::pair<unsigned, unsigned>> cases;
  for (unsigned h = 1; h <= 3; ++h)
    for (unsigned k = 1; k <= 5; ++k) cases.emplace_back(h, k);
  cases.emplace_back(2, 6);
  cases.emplace_back(4, 3);
  for (auto [h, k] : cases) {
    CAPTURE(h);
    CAPTURE(k);
    const SearchResult fast = extremal_n(h, k);
    const SearchResult slow = oracle_exhaustive(h, k);
    CHECK(fast.proof_of_optimality);
    CHECK(slow.proof_of_optimality);
    CHECK(fast.value == slow.value);
    CHECK(fast.witness == slow.witness);
    CHECK(fast.witness.size() == k);
    CHECK(oracle::n_of(elems(fast.witness), h) == fast.value);
    const Certificate cert = verify_basis(fast.witness, h, fast.value + 1);
    CHECK_FALSE(cert.ok);
    CHECK(cert.first_gap == fast.value + 1);
    CHECK(fast.value <= rohrbach(h, k).upper);
    // The lower bound counts k without the element 0, so it applies to n(h, k + 1).
    if (k >= 2) CHECK(Rational(fast.value) >= rohrbach(h, k - 1).lower);
  }
}

TEST_CASE("the lower bound with 0 counted in k fails exactly at h = 1 or k = 1") {
  for (unsigned h = 1; h <= 3; ++h) {
    for (unsigned k = 1; k <= 5; ++k) {
      const bool holds = Rational(extremal_n(h, k).value) >= rohrbach(h, k).lower;
      CHECK(holds == (h > 1 && k > 1));
    }
  }
}

TEST_CASE("extremal_n is non-decreasing in k") {
  for (unsigned h = 1; h <= 3; ++h) {
    u64 prev = 0;
    for (unsigned k = 1; k <= 6; ++k) {
      const u64 v = extremal_n(h, k).value;
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("successor rule: elements past the first gap never fill it") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned h = 1 + static_cast<unsigned>(rng() % 3);
    std::set<u64> prefix{0};
    while (prefix.size() < 1 + rng() % 4) prefix.insert(rng() % 12);
    const std::vector<u64> p(prefix.begin(), prefix.end());
    const u64 gap_n = *oracle::n_of(p, h);
    std::vector<u64> ext = p;
    u64 e = std::max(p.back(), gap_n) + 2 + rng() % 5;
    for (int extra = 0; extra < 3; ++extra) {
      ext.push_back(e);
      e += 1 + rng() % 7;
    }
    CHECK(oracle::n_of(ext, h) == gap_n);
  }
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  const SearchResult r = extremal_n(3, 6, 10);
  CHECK_FALSE(r.proof_of_optimality);
  CHECK(r.nodes_explored <= 11);
  CHECK_THROWS_AS(zeta_exact(3, 60, 10), GuardTripped);
}

TEST_CASE("zeta_exact examples") {
  const ZetaResult z28 = zeta_exact(2, 8);
  CHECK(z28.k_min == 4);
  CHECK(verify_basis(z28.witness, 2, 8).ok);
  for (unsigned h = 1; h <= 4; ++h) {
    const ZetaResult z0 = zeta_exact(h, 0);
    CHECK(z0.k_min == 1);
    CHECK(elems(z0.witness) == std::vector<u64>{0});
  }
  for (u64 n : {0ULL, 1ULL, 7ULL, 40ULL}) {
    const ZetaResult z = zeta_exact(1, n);
    CHECK(z.k_min == n + 1);
    CHECK(z.witness.size() == n + 1);
  }
  for (u64 n = 1; n <= 20; ++n) {
    const ZetaResult z = zeta_exact(2, n);
    CHECK(verify_basis(z.witness, 2, n).ok);
    CHECK(extremal_n(2, z.k_min).value >= n);
    if (z.k_min > 1) CHECK(extremal_n(2, z.k_min - 1).value < n);
  }
}

TEST_CASE("node counts are reproducible") {
  CHECK(extremal_n(3, 5).nodes_explored == extremal_n(3, 5).nodes_explored);
}
