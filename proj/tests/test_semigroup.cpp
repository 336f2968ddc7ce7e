#include <doctest.h>

#include <algorithm>
#include <vector>

#include <semicov/errors.hpp>
#include <semicov/semigroup.hpp>

#include "util.hpp"

using namespace semicov;

TEST_SUITE("semigroup") {

TEST_CASE("the naturals") {
  const NumericalSemigroup n;
  CHECK(n.is_naturals());
  CHECK(n.frobenius() == -1);
  CHECK(n.multiplicity() == 1);
  CHECK(n.genus() == 0);
  CHECK(n.msg() == std::vector<int>{1});
  CHECK(n.embedding_dimension() == 1);
  CHECK(n.contains(0));
  CHECK(n.contains(123456));
  CHECK_FALSE(n.contains(-1));
  CHECK(n.gaps().empty());
  CHECK(n.small_elements() == std::vector<int>{0});
  CHECK(n.is_med());
  CHECK_THROWS_AS(n.pseudo_frobenius(), TrivialSemigroupError);
  CHECK_THROWS_AS(n.type(), TrivialSemigroupError);
  CHECK_THROWS_AS(n.special_gaps(), TrivialSemigroupError);
  CHECK(n == NumericalSemigroup::naturals());
  CHECK(n == NumericalSemigroup::from_generators({1}));
}

TEST_CASE("ordinary semigroups") {
  const NumericalSemigroup d = NumericalSemigroup::ordinary(5);
  CHECK(d.frobenius() == 5);
  CHECK(d.multiplicity() == 6);
  CHECK(d.genus() == 5);
  CHECK(d.small_elements() == std::vector<int>{0, 6});
  CHECK(d.msg() == std::vector<int>{6, 7, 8, 9, 10, 11});
  CHECK(display_string(d) == "{0, 6, ->}");
  CHECK(NumericalSemigroup::ordinary(-1).is_naturals());
  CHECK_THROWS_AS(NumericalSemigroup::ordinary(0), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::ordinary(-4), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::ordinary(NumericalSemigroup::max_frobenius + 1),
                  FrobeniusTooLargeError);
}

TEST_CASE("from_generators golden values") {
  const NumericalSemigroup s = NumericalSemigroup::from_generators({5, 7, 9});
  CHECK(s.frobenius() == 13);
  CHECK(s.multiplicity() == 5);
  CHECK(s.genus() == 8);
  CHECK(s.small_elements() == std::vector<int>{0, 5, 7, 9, 10, 12, 14});
  CHECK(s.gaps() == std::vector<int>{1, 2, 3, 4, 6, 8, 11, 13});
  CHECK(s.msg() == std::vector<int>{5, 7, 9});
  CHECK(s.pseudo_frobenius() == std::vector<int>{11, 13});
  CHECK(s.type() == 2);
  CHECK(s.special_gaps() == std::vector<int>{11, 13});
  CHECK_FALSE(s.is_med());

  const NumericalSemigroup t = NumericalSemigroup::from_generators({2, 3});
  CHECK(t.frobenius() == 1);
  CHECK(t.genus() == 1);

  CHECK(NumericalSemigroup::from_generators({4, 9, 6, 9, 4}) ==
        NumericalSemigroup::from_generators({4, 6, 9}));
}

TEST_CASE("from_generators validation") {
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({}), EmptyInputError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), NotCoprimeError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 5}), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({-2, 3}), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({65521, 65027}), FrobeniusTooLargeError);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({2, 2 * NumericalSemigroup::max_frobenius + 7}),
                  FrobeniusTooLargeError);
  CHECK(NumericalSemigroup::from_generators({2, NumericalSemigroup::max_frobenius + 1}).frobenius() ==
        NumericalSemigroup::max_frobenius - 1);
}

TEST_CASE("element list and gap list constructors") {
  const NumericalSemigroup s = NumericalSemigroup::from_small_elements(5, {0, 3, 6});
  CHECK(s == NumericalSemigroup::from_gaps({1, 2, 4, 5}));
  CHECK(s.multiplicity() == 3);

  CHECK(NumericalSemigroup::from_gaps({}).is_naturals());
  CHECK(NumericalSemigroup::from_small_elements(-1, {0}).is_naturals());

  CHECK_THROWS_AS(NumericalSemigroup::from_small_elements(5, {0, 3, 5, 6}), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_small_elements(5, {3, 6}), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_small_elements(5, {0, 3}), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_small_elements(5, {0, 2, 6}), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_small_elements(0, {0, 1}), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({2}), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({0, 1}), NotASemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps({NumericalSemigroup::max_frobenius + 1}),
                  FrobeniusTooLargeError);
}

TEST_CASE("adjoining a special gap") {
  const NumericalSemigroup s = NumericalSemigroup::ordinary(4);
  const NumericalSemigroup t = s.adjoin(3);
  CHECK(t == NumericalSemigroup::from_gaps({1, 2, 4}));
  CHECK(t.multiplicity() == 3);
  CHECK(t.genus() == 3);
  CHECK_THROWS_AS(s.adjoin(1), NotSpecialGapError);
  CHECK_THROWS_AS(s.adjoin(5), NotSpecialGapError);
  CHECK_THROWS_AS(NumericalSemigroup::naturals().adjoin(1), NotSpecialGapError);

  SUBCASE("adjoining the Frobenius number shrinks the window") {
    const NumericalSemigroup u = NumericalSemigroup::from_gaps({1, 2, 4});
    CHECK(u.adjoin(4) == NumericalSemigroup::from_gaps({1, 2}));
    CHECK(NumericalSemigroup::from_gaps({1}).adjoin(1).is_naturals());
  }
}

TEST_CASE("removing a minimal generator") {
  const NumericalSemigroup s = NumericalSemigroup::from_generators({5, 7, 9});
  const NumericalSemigroup t = s.remove_element(5);
  CHECK(t == NumericalSemigroup::from_gaps({1, 2, 3, 4, 5, 6, 8, 11, 13}));
  CHECK(t.msg() == std::vector<int>{7, 9, 10, 12, 15});
  CHECK(t.frobenius() == 13);
  CHECK_THROWS_AS(s.remove_element(10), NotMinimalGeneratorError);
  CHECK_THROWS_AS(s.remove_element(4), NotMinimalGeneratorError);

  CHECK(NumericalSemigroup::naturals().remove_element(1) == NumericalSemigroup::ordinary(1));

  SUBCASE("removing past the Frobenius number enlarges it") {
    const NumericalSemigroup u = NumericalSemigroup::from_generators({2, 3});
    CHECK(u.remove_element(3) == NumericalSemigroup::from_gaps({1, 3}));
  }
}

TEST_CASE("adjoin and remove_element invert each other") {
  auto g = testutil::rng(21);
  for (int i = 0; i < 200; ++i) {
    const NumericalSemigroup s = testutil::random_semigroup(18, g);
    for (int x : s.special_gaps()) {
      const NumericalSemigroup t = s.adjoin(x);
      REQUIRE(t.contains(x));
      REQUIRE(t.genus() == s.genus() - 1);
      REQUIRE(t.remove_element(x) == s);
    }
  }
}

TEST_CASE("intersection") {
  const NumericalSemigroup a = NumericalSemigroup::from_generators({5, 7, 9});
  const NumericalSemigroup b = NumericalSemigroup::from_generators({4, 6, 9});
  const NumericalSemigroup c = intersect(a, b);
  CHECK(c.frobenius() == 13);
  for (int x = 0; x <= 15; ++x) CHECK(c.contains(x) == (a.contains(x) && b.contains(x)));
  CHECK(intersect(a, b) == intersect(b, a));
  CHECK(intersect(a, NumericalSemigroup::naturals()) == a);
  CHECK(c.subset_of(a));
  CHECK(c.subset_of(b));
  CHECK_FALSE(a.subset_of(c));
}

TEST_CASE("canonical order") {
  const NumericalSemigroup d = NumericalSemigroup::ordinary(5);
  const NumericalSemigroup a = d.adjoin(3);
  const NumericalSemigroup b = d.adjoin(4);
  CHECK(canonical_less(a, b));       // contains 3, the smaller new element
  CHECK(canonical_less(b, d));       // delta contains nothing extra
  CHECK(canonical_less(a, d));
  CHECK_FALSE(canonical_less(a, a));
  CHECK(canonical_less(NumericalSemigroup::ordinary(4), a));  // smaller F first
}

TEST_CASE("genus equals the gap count") {
  auto g = testutil::rng(22);
  for (int i = 0; i < 200; ++i) {
    const NumericalSemigroup s = testutil::random_semigroup(20, g);
    REQUIRE(s.genus() == static_cast<int>(s.gaps().size()));
    REQUIRE(s == NumericalSemigroup::from_gaps(s.gaps()));
    REQUIRE(s == NumericalSemigroup::from_generators(s.msg()));
    REQUIRE(s == NumericalSemigroup::from_small_elements(s.frobenius(), s.small_elements()));
  }
}

TEST_CASE("minimal generators are exactly the non-decomposable elements") {
  auto g = testutil::rng(23);
  for (int i = 0; i < 100; ++i) {
    const NumericalSemigroup s = testutil::random_semigroup(16, g);
    const int limit = s.frobenius() + s.multiplicity() + 1;
    std::vector<int> expected;
    for (int x = 1; x <= limit; ++x) {
      if (!s.contains(x)) continue;
      bool decomposable = false;
      for (int a = 1; a <= x - 1 && !decomposable; ++a)
        if (s.contains(a) && s.contains(x - a)) decomposable = true;
      if (!decomposable) expected.push_back(x);
    }
    REQUIRE(s.msg() == expected);
  }
}

TEST_CASE("maximal embedding dimension lift and unlift") {
  const NumericalSemigroup s = NumericalSemigroup::from_generators({5, 7, 9});
  const NumericalSemigroup t = med_lift(s, 7);
  CHECK(t.msg() == std::vector<int>{7, 12, 16, 17, 22, 25, 27});
  CHECK(t.is_med());
  CHECK(med_shift_closed(t));
  CHECK(t.frobenius() == 20);
  CHECK(t.genus() == 14);
  CHECK(med_genus(t) == 14);
  const auto [base, m] = med_unlift(t);
  CHECK(base == s);
  CHECK(m == 7);

  CHECK(med_lift(NumericalSemigroup::naturals(), 3) == NumericalSemigroup::from_generators({3, 4, 5}));
  CHECK(med_lift(NumericalSemigroup::naturals(), 1).is_naturals());
  CHECK_THROWS_AS(med_lift(s, 6), NotAnElementError);
  CHECK_THROWS_AS(med_lift(s, 0), NotAnElementError);
  CHECK_THROWS_AS(med_unlift(s), NotMEDError);
  CHECK_THROWS_AS(med_genus(s), NotMEDError);
}

TEST_CASE("med_shift_closed agrees with the dimension count") {
  auto g = testutil::rng(24);
  for (int i = 0; i < 300; ++i) {
    const NumericalSemigroup s = testutil::random_semigroup(18, g);
    REQUIRE(med_shift_closed(s) == s.is_med());
  }
  CHECK(med_shift_closed(NumericalSemigroup::naturals()));
}

TEST_CASE("copies share the cached derived data") {
  const NumericalSemigroup s = NumericalSemigroup::from_generators({5, 7, 9});
  (void)s.msg();
  const NumericalSemigroup copy = s;
  CHECK(copy.msg() == s.msg());
  CHECK(copy == s);
  NumericalSemigroup moved = std::move(copy);
  CHECK(moved.pseudo_frobenius() == s.pseudo_frobenius());
}

}  // TEST_SUITE
