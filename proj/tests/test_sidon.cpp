#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hbasis/errors.hpp"
#include "hbasis/sidon.hpp"
#include "oracles.hpp"

using namespace hbasis;
using u64 = std::uint64_t;

TEST_CASE("build_field matches a brute-force primitive search") {
  for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{
           {2, 2}, {3, 2}, {5, 2}, {7, 2}, {11, 2}, {2, 3}, {3, 3}, {5, 3}, {2, 4}, {3, 4}}) {
    CAPTURE(p);
    CAPTURE(k);
    const FieldSpec f = build_field(p, k);
    CHECK(f.modulus == oracle::first_primitive(p, k));
    CHECK(f.order() == oracle::order_of_x(f.modulus, p) + 1);
  }
}

TEST_CASE("build_field documented moduli") {
  CHECK(build_field(3, 2).modulus == std::vector<u64>{2, 1, 1});
  CHECK(build_field(2, 2).modulus == std::vector<u64>{1, 1, 1});
  // x^2 + 1 over F_3 is irreducible but x has order 4.
  const std::vector<u64> x2p1{1, 0, 1};
  CHECK(is_irreducible(x2p1, 3));
  CHECK_FALSE(is_primitive(x2p1, 3));
  CHECK_THROWS_AS(build_field(4, 2), InvalidInput);
  CHECK_THROWS_AS(build_field(3, 1), InvalidInput);
}

TEST_CASE("irreducibility agrees with trial division") {
  for (u64 p : {2ULL, 3ULL, 5ULL}) {
    for (unsigned k = 2; k <= 4; ++k) {
      std::vector<u64> f(k + 1, 0);
      f[k] = 1;
      u64 total = 1;
      for (unsigned i = 0; i < k; ++i) total *= p;
      for (u64 code = 0; code < total; ++code) {
        u64 c = code;
        for (unsigned i = 0; i < k; ++i) {
          f[i] = c % p;
          c /= p;
        }
        REQUIRE(is_irreducible(f, p) == oracle::irreducible_by_trial(f, p));
      }
    }
  }
}

TEST_CASE("bose_chowla documented example") {
  const SidonSet s = bose_chowla(3, 2);
  CHECK(s.elements == std::vector<u64>{1, 6, 7});
  CHECK(s.order_modulus == 8);
  CHECK(s.field.modulus == std::vector<u64>{2, 1, 1});
}

TEST_CASE("bose_chowla yields p-element B_k sets modulo p^k - 1 and over the integers") {
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (unsigned k : {2U, 3U}) {
      CAPTURE(p);
      CAPTURE(k);
      const SidonSet s = bose_chowla(p, k);
      CHECK(s.elements.size() == p);
      CHECK(std::binary_search(s.elements.begin(), s.elements.end(), 1ULL));
      CHECK(s.elements.back() <= s.order_modulus - 1);
      CHECK(oracle::is_bk(s.elements, k, s.order_modulus));
      CHECK(oracle::is_bk(s.elements, k));
      CHECK(is_bk(s.elements, k, s.order_modulus));
      CHECK(is_bk(s.elements, k));
    }
  }
}

TEST_CASE("discrete log methods agree") {
  for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{31, 3}, {7, 4}, {3, 5}, {101, 2}}) {
    const SidonSet walk = bose_chowla(p, k, DiscreteLogMethod::kPowerWalk);
    const SidonSet bsgs = bose_chowla(p, k, DiscreteLogMethod::kBabyGiant);
    CHECK(walk.elements == bsgs.elements);
  }
}

TEST_CASE("is_bk examples and agreement with the oracle") {
  CHECK(is_bk(std::vector<u64>{0, 1, 3}, 2));
  CHECK_FALSE(is_bk(std::vector<u64>{0, 1, 2}, 2));
  CHECK(is_bk(std::vector<u64>{1, 6, 7}, 2, 8));
  CHECK(is_bk(std::vector<u64>{5}, 3));
  CHECK_THROWS_AS(is_bk(std::vector<u64>{1, 1}, 2), InvalidInput);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::set<u64> s;
    const std::size_t size = 1 + rng() % 6;
    while (s.size() < size) s.insert(rng() % 60);
    const std::vector<u64> v(s.begin(), s.end());
    const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    const std::optional<u64> mod = trial % 2 ? std::optional<u64>(61 + rng() % 40) : std::nullopt;
    CHECK(is_bk(v, k, mod) == oracle::is_bk(v, k, mod));
  }
}

TEST_CASE("subsets of B_k sets are B_k") {
  const SidonSet s = bose_chowla(7, 2);
  for (std::size_t drop = 0; drop < s.elements.size(); ++drop) {
    std::vector<u64> sub = s.elements;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
    CHECK(is_bk(sub, 2));
  }
}

TEST_CASE("phi_exact examples") {
  const PhiResult three = phi_exact(3, 2);
  CHECK(three.size == 3);
  CHECK(three.witness == std::vector<u64>{0, 1, 3});
  const PhiResult six = phi_exact(6, 2);
  CHECK(six.size == 4);
  CHECK(six.witness == std::vector<u64>{0, 1, 4, 6});
  const PhiResult zero = phi_exact(0, 2);
  CHECK(zero.size == 1);
  CHECK(zero.witness == std::vector<u64>{0});
}

TEST_CASE("phi_exact agrees with subset enumeration and is monotone") {
  for (unsigned k : {1U, 2U, 3U}) {
    std::size_t prev = 0;
    for (u64 n = 0; n <= 13; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const PhiResult got = phi_exact(n, k);
      const auto want = oracle::phi_bruteforce(n, k);
      CHECK(got.size == want.size());
      CHECK(got.witness == want);
      CHECK(got.size >= prev);
      prev = got.size;
    }
  }
}

TEST_CASE("phi_exact larger values stay monotone and valid") {
  std::size_t prev = 0;
  for (u64 n = 0; n <= 40; ++n) {
    const PhiResult r = phi_exact(n, 2);
    CHECK(r.size >= prev);
    CHECK(is_bk(r.witness, 2));
    prev = r.size;
  }
}

TEST_CASE("phi_exact guard trips above the range cap") {
  CHECK_THROWS_AS(phi_exact(phi_range_guard(2) + 1, 2), GuardTripped);
  CHECK_THROWS_AS(phi_exact(phi_range_guard(3) + 1, 3), GuardTripped);
}
