#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include <semicov/covariety.hpp>
#include <semicov/errors.hpp>
#include <semicov/frobenius_fixed.hpp>
#include <semicov/oracle.hpp>
#include <semicov/semigroup.hpp>

#include "util.hpp"

using namespace semicov;

namespace {

void sort_canonical(std::vector<NumericalSemigroup>& v) {
  std::sort(v.begin(), v.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return canonical_less(a, b);
  });
}

}  // namespace

TEST_SUITE("frobenius_fixed") {

TEST_CASE("delta") {
  CHECK(delta(5) == NumericalSemigroup::ordinary(5));
  CHECK(delta(1) == NumericalSemigroup::from_generators({2, 3}));
  CHECK_THROWS_AS(delta(0), InvalidFError);
  CHECK_THROWS_AS(delta(-2), InvalidFError);
  CHECK_THROWS_AS(delta(NumericalSemigroup::max_frobenius + 1), FrobeniusTooLargeError);
}

TEST_CASE("member counts per Frobenius number") {
  const std::vector<std::uint64_t> expected = {1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40};
  for (int f = 1; f <= 12; ++f) {
    CAPTURE(f);
    REQUIRE(enumerate(f, [](const FrontierNode&) {}) ==
            expected[static_cast<std::size_t>(f - 1)]);
  }
}

TEST_CASE("the five members with Frobenius number five, in visiting order") {
  const NumericalSemigroup d = NumericalSemigroup::ordinary(5);
  const std::vector<NumericalSemigroup> expected = {
      d, d.adjoin(3), d.adjoin(4), d.adjoin(4).adjoin(2), d.adjoin(4).adjoin(3)};
  CHECK(af_members(5) == expected);
}

TEST_CASE("visitor sees consistent nodes in level order") {
  const int f = 9;
  std::vector<FrontierNode> nodes;
  const std::uint64_t count = enumerate(f, [&](const FrontierNode& n) { nodes.push_back(n); });
  REQUIRE(count == nodes.size());
  CHECK(nodes.front().semigroup == delta(f));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const FrontierNode& n = nodes[i];
    REQUIRE(n.semigroup.frobenius() == f);
    REQUIRE(n.depth == f - n.semigroup.genus());
    REQUIRE(n.apery.modulus() == f + 1);
    REQUIRE(n.apery.frobenius() == f);
    const AperyTable fresh = n.semigroup.apery(f + 1);
    REQUIRE(n.apery.entries() == fresh.entries());
    if (i > 0) {
      REQUIRE(nodes[i - 1].depth <= n.depth);
      if (nodes[i - 1].depth == n.depth)
        REQUIRE(canonical_less(nodes[i - 1].semigroup, n.semigroup));
    }
  }
}

TEST_CASE("enumeration agrees with the brute force oracle") {
  for (int f = 1; f <= 10; ++f) {
    CAPTURE(f);
    std::vector<NumericalSemigroup> mine = af_members(f);
    sort_canonical(mine);
    REQUIRE(mine == oracle::brute_enumerate(f));
  }
}

TEST_CASE("worker count and memory mode do not change the walk") {
  const std::vector<NumericalSemigroup> base = af_members(11);

  EnumerateOptions parallel;
  parallel.workers = 8;
  CHECK(af_members(11, parallel) == base);

  EnumerateOptions frugal;
  frugal.low_memory = true;
  CHECK(af_members(11, frugal) == base);

  frugal.workers = 8;
  std::vector<FrontierNode> nodes;
  enumerate(11, [&](const FrontierNode& n) { nodes.push_back(n); }, frugal);
  REQUIRE(nodes.size() == base.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    REQUIRE(nodes[i].semigroup == base[i]);
    REQUIRE(nodes[i].apery.entries() == base[i].apery(12).entries());
  }

  EnumerateOptions loose;
  loose.order_insensitive = true;
  loose.workers = 8;
  std::vector<NumericalSemigroup> unsorted = af_members(11, loose);
  sort_canonical(unsorted);
  std::vector<NumericalSemigroup> sorted_base = base;
  sort_canonical(sorted_base);
  CHECK(unsorted == sorted_base);
}

TEST_CASE("irreducible members are the maximal ones") {
  CHECK(is_irreducible(NumericalSemigroup::naturals()));
  CHECK(is_irreducible(NumericalSemigroup::from_generators({2, 7})));
  CHECK_FALSE(is_irreducible(NumericalSemigroup::ordinary(5)));
  for (int f = 1; f <= 10; ++f) {
    CAPTURE(f);
    const Covariety c = Covariety::validate(af_members(f));
    std::vector<bool> maximal(c.size(), false);
    for (std::size_t i : c.maximal_member_indices()) maximal[i] = true;
    for (std::size_t i = 0; i < c.size(); ++i)
      REQUIRE(is_irreducible(c.members()[i]) == maximal[i]);
  }
}

TEST_CASE("af_closure") {
  const NumericalSemigroup s = af_closure(15, {6});
  CHECK(s.frobenius() == 15);
  CHECK(s.genus() == 13);
  CHECK(s == NumericalSemigroup::from_small_elements(15, {0, 6, 12, 16}));

  CHECK(af_closure(15, {}) == delta(15));
  CHECK(af_closure(9, {5, 6, 7}) ==
        NumericalSemigroup::from_small_elements(9, {0, 5, 6, 7, 10}));
  CHECK(af_closure(9, {6, 5, 6, 7}) == af_closure(9, {5, 6, 7}));

  CHECK_THROWS_AS(af_closure(15, {15}), NotAnAFSetError);
  CHECK_THROWS_AS(af_closure(15, {0}), NotAnAFSetError);
  CHECK_THROWS_AS(af_closure(15, {-3}), NotAnAFSetError);
  CHECK_THROWS_AS(af_closure(15, {16}), NotAnAFSetError);
  CHECK_THROWS_AS(af_closure(15, {3, 5}), NotAnAFSetError);
  CHECK_THROWS_AS(af_closure(0, {}), InvalidFError);
}

TEST_CASE("minimal systems and rank") {
  const NumericalSemigroup s1 = NumericalSemigroup::from_small_elements(9, {0, 5, 6, 7, 10});
  CHECK(af_minimal_system(9, s1) == std::vector<int>{5, 6, 7});
  CHECK(af_rank(9, s1) == 3);
  CHECK_THROWS_AS(af_minimal_system(10, s1), WrongFrobeniusError);
  CHECK_THROWS_AS(af_rank(10, s1), WrongFrobeniusError);

  CHECK(af_minimal_system(9, delta(9)).empty());
  CHECK(af_rank(9, delta(9)) == 0);
  CHECK(af_minimal_system(13, NumericalSemigroup::from_generators({5, 7, 9})) ==
        std::vector<int>{5, 7, 9});

  SUBCASE("the minimal system regenerates its semigroup") {
    auto g = testutil::rng(51);
    for (int i = 0; i < 200; ++i) {
      const NumericalSemigroup s = testutil::random_af_member(12, g);
      REQUIRE(af_closure(12, af_minimal_system(12, s)) == s);
    }
  }
}

TEST_CASE("rank one members") {
  const auto members = rank1_classify(6);
  REQUIRE(members.size() == 2);
  for (const auto& s : members) {
    CHECK(s.frobenius() == 6);
    CHECK(af_rank(6, s) == 1);
  }
  CHECK(members[0] == NumericalSemigroup::from_small_elements(6, {0, 4, 7}));
  CHECK(members[1] == NumericalSemigroup::from_small_elements(6, {0, 5, 7}));

  CHECK(rank1_classify(12).size() == 6);
  CHECK(rank1_classify(72).size() == 60);

  for (const auto& s : rank1_classify(12)) {
    CHECK(rank1_genus(12, s.multiplicity()) == s.genus());
    CHECK(af_minimal_system(12, s) == std::vector<int>{s.multiplicity()});
  }

  CHECK(rank1_genus(15, 6) == 13);
  CHECK_THROWS_AS(rank1_genus(15, 5), NotRank1FormError);
  CHECK_THROWS_AS(rank1_genus(15, 15), NotRank1FormError);
  CHECK_THROWS_AS(rank1_genus(15, 0), NotRank1FormError);
  CHECK_THROWS_AS(rank1_classify(1), InvalidFError);
}

TEST_CASE("maximal rank members") {
  const auto members = max_rank_members(15);
  REQUIRE(members.size() == 10);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const NumericalSemigroup& s = members[i];
    CHECK(s.frobenius() == 15);
    CHECK(af_rank(15, s) == s.multiplicity() - 1);
    if (i + 1 < members.size()) CHECK(canonical_less(s, members[i + 1]));

    const NumericalSemigroup p = s.adjoin(15);
    CHECK(p.is_med());
    CHECK(p.msg().back() == 15);
    CHECK(max_rank_genus(15, af_minimal_system(15, s)) == s.genus());
  }

  const std::vector<int> full{8, 9, 10, 11, 12, 13, 14};
  CHECK(max_rank_genus(15, full) == 8);
  const NumericalSemigroup top = af_closure(15, full);
  CHECK(top.genus() == 8);
  CHECK(std::find(members.begin(), members.end(), top) != members.end());

  CHECK_THROWS_AS(max_rank_genus(15, {6}), NotMaxRankError);
  CHECK_THROWS_AS(max_rank_genus(15, {8, 9, 10, 11, 12, 13}), NotMaxRankError);
  CHECK_THROWS_AS(max_rank_genus(15, {5, 10}), NotMaxRankError);
  CHECK_THROWS_AS(max_rank_genus(15, {}), NotMaxRankError);
  CHECK_THROWS_AS(max_rank_members(1), InvalidFError);
  CHECK_THROWS_AS(max_rank_genus(1, {1}), InvalidFError);
}

TEST_CASE("genus formulas against direct gap counts") {
  for (int f = 2; f <= 20; ++f) {
    CAPTURE(f);
    for (const auto& s : rank1_classify(f))
      REQUIRE(rank1_genus(f, s.multiplicity()) == static_cast<int>(s.gaps().size()));
    for (const auto& s : max_rank_members(f))
      REQUIRE(max_rank_genus(f, af_minimal_system(f, s)) == static_cast<int>(s.gaps().size()));
  }
}

TEST_CASE("the bounded-Frobenius family") {
  const Covariety b1 = bf_family(1);
  CHECK(b1.size() == 2);
  CHECK(b1.minimum() == delta(1));
  CHECK(b1.contains(NumericalSemigroup::naturals()));

  const Covariety b5 = bf_family(5);
  CHECK(b5.size() == 12);
  CHECK(b5.minimum() == delta(5));
  CHECK(b5.contains(NumericalSemigroup::naturals()));
  for (const auto& s : b5.members()) CHECK(s.frobenius() <= 5);

  CHECK(bf_family(8).size() == 37);
  CHECK_THROWS_AS(bf_family(0), InvalidFError);
}

}  // TEST_SUITE
