#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hbasis/errors.hpp"
#include "hbasis/parallel.hpp"
#include "hbasis/sumset.hpp"
#include "oracles.hpp"

using namespace hbasis;
using u64 = std::uint64_t;

namespace {

std::vector<u64> members(const CoverageMap& c) { return c.members(); }

std::vector<u64> random_set(std::mt19937_64& rng, std::size_t size, u64 max_value, bool with_zero) {
  std::uniform_int_distribution<u64> pick(0, max_value);
  std::set<u64> s;
  if (with_zero) s.insert(0);
  while (s.size() < size) s.insert(pick(rng));
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("BasisSet normalises and rejects empty input") {
  BasisSet b{4, 1, 1, 0};
  CHECK(std::vector<u64>(b.elements().begin(), b.elements().end()) == std::vector<u64>{0, 1, 4});
  CHECK_THROWS_AS(BasisSet(std::vector<u64>{}), InvalidInput);
  CHECK_THROWS_AS(BasisSet::from_sorted({0, 2, 2}), InvalidInput);
  CHECK_THROWS_AS(BasisSet::from_sorted({3, 1}), InvalidInput);
}

TEST_CASE("h_fold_coverage examples") {
  CHECK(members(h_fold_coverage({0, 1}, 2, 4)) == std::vector<u64>{0, 1, 2});
  CHECK(members(h_fold_coverage({0}, 5, 10)) == std::vector<u64>{0});
  CHECK(members(h_fold_coverage({0, 1, 3}, 2, 10)) == std::vector<u64>{0, 1, 2, 3, 4, 6});
  CHECK_THROWS_AS(h_fold_coverage({0, 1}, 0, 4), InvalidInput);
}

TEST_CASE("n_of examples") {
  CHECK(n_of({0, 1, 3}, 2) == 4);
  CHECK_FALSE(n_of({1, 2}, 2).has_value());
  CHECK(n_of({0, 1, 3, 4}, 2) == 8);
  CHECK(n_of({0}, 7) == 0);
}

TEST_CASE("verify_basis examples") {
  const Certificate ok = verify_basis({0, 1, 3, 4}, 2, 8);
  CHECK(ok.ok);
  CHECK_FALSE(ok.first_gap.has_value());
  const Certificate bad = verify_basis({0, 1, 3, 4}, 2, 9);
  CHECK_FALSE(bad.ok);
  CHECK(bad.first_gap == 9);
  CHECK(verify_basis({0}, 3, 0).ok);
}

TEST_CASE("residue_sumset examples") {
  const ResidueSet fam1[] = {ResidueSet(4, {0, 1})};
  CHECK(residue_sumset(ResidueSet(4, {0}), fam1).members() == std::vector<u64>{0, 1});
  const ResidueSet fam2[] = {ResidueSet(4, {0, 2})};
  CHECK(residue_sumset(ResidueSet(4, {0, 1}), fam2).is_full());
  CHECK(residue_sumset(ResidueSet(4, {0, 2}), fam2).members() == std::vector<u64>{0, 2});
  const ResidueSet wrong[] = {ResidueSet(5, {0})};
  CHECK_THROWS_AS(residue_sumset(ResidueSet(4, {0}), wrong), InvalidInput);
}

TEST_CASE("witness examples") {
  CHECK(witness({0, 1, 3}, 2, 4) == std::vector<u64>{1, 3});
  CHECK_FALSE(witness({0, 1, 3}, 2, 5).has_value());
  CHECK(witness({0, 2}, 3, 0) == std::vector<u64>{0, 0, 0});
}

TEST_CASE("property: coverage equals multiset enumeration on small instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t size = 1 + rng() % 6;
    const unsigned h = 1 + static_cast<unsigned>(rng() % 4);
    const auto elems = random_set(rng, size, 50, trial % 2 == 0);
    const u64 limit = h * 50;
    const auto want = oracle::hfold(elems, h, limit);
    const auto got = h_fold_coverage(BasisSet(elems), h, limit).members();
    REQUIRE(got == std::vector<u64>(want.begin(), want.end()));
    CHECK(n_of(BasisSet(elems), h) == oracle::n_of(elems, h));
  }
}

TEST_CASE("property: monotone in the set, nested in h when 0 is present") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto small = random_set(rng, 3, 40, true);
    auto big = small;
    big.push_back(41 + rng() % 20);
    const unsigned h = 1 + static_cast<unsigned>(rng() % 3);
    const auto cs = h_fold_coverage(BasisSet(small), h, 150);
    const auto cb = h_fold_coverage(BasisSet(big), h, 150);
    const auto ch1 = h_fold_coverage(BasisSet(small), h + 1, 150);
    for (u64 v : cs.members()) {
      CHECK(cb.contains(v));
      CHECK(ch1.contains(v));
    }
  }
}

TEST_CASE("property: witness agrees with coverage and sums correctly") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto elems = random_set(rng, 1 + rng() % 5, 30, trial % 3 != 0);
    const unsigned h = 1 + static_cast<unsigned>(rng() % 4);
    const BasisSet set(elems);
    const u64 limit = 130;
    const auto cov = h_fold_coverage(set, h, limit);
    const SumsetWitness table(set, h, limit);
    for (u64 z = 0; z <= limit; ++z) {
      const auto w = table.find(z);
      REQUIRE(w.has_value() == cov.contains(z));
      if (!w) continue;
      CHECK(w->size() == h);
      u64 sum = 0;
      for (u64 v : *w) {
        CHECK(set.contains(v));
        sum += v;
      }
      CHECK(sum == z);
    }
  }
}

TEST_CASE("residue_sumset with the family {0} is the identity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const u64 q = 1 + rng() % 200;
    std::vector<u64> m;
    for (int i = 0; i < 10; ++i) m.push_back(rng() % q);
    const ResidueSet h(q, m);
    const ResidueSet zero[] = {ResidueSet(q, {0})};
    CHECK(residue_sumset(h, zero) == h);
  }
}

TEST_CASE("residue_sumset agrees with tuple enumeration") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const u64 q = 2 + rng() % 150;
    std::vector<u64> base{rng() % q, rng() % q};
    std::vector<std::vector<u64>> fams(1 + rng() % 3);
    std::vector<ResidueSet> sets;
    for (auto& f : fams) {
      for (int i = 0; i < 3; ++i) f.push_back(rng() % q);
      sets.emplace_back(q, f);
    }
    const auto want = oracle::residue_sum(base, fams, q);
    CHECK(residue_sumset(ResidueSet(q, base), sets).members() == std::vector<u64>(want.begin(), want.end()));
  }
}

TEST_CASE("threaded coverage is identical to single-threaded") {
  std::vector<u64> elems{0, 1, 7, 40, 333, 4096, 70001, 123457};
  const BasisSet set(elems);
  set_max_threads(1);
  const auto one = h_fold_coverage(set, 4, 3'000'000);
  set_max_threads(8);
  const auto many = h_fold_coverage(set, 4, 3'000'000);
  set_max_threads(1);
  CHECK(one.bits() == many.bits());
}

TEST_CASE("coverage guard trips on absurd limits") {
  CHECK_THROWS_AS(h_fold_coverage({0, 1}, 2, kMaxCoverageLimit), GuardTripped);
  CHECK_THROWS_AS(n_of(BasisSet{0, UINT64_MAX / 2}, 3), GuardTripped);
}
