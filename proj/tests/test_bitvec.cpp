#include <doctest.h>

#include <random>
#include <vector>

#include <semicov/bitvec.hpp>

using semicov::BitVec;

TEST_SUITE("bitvec") {

TEST_CASE("basic set, test and count") {
  BitVec v(130);
  CHECK(v.size() == 130);
  CHECK(v.count() == 0);
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.test(0));
  CHECK(v.test(64));
  CHECK(v.test(129));
  CHECK_FALSE(v.test(1));
  CHECK(v.count() == 3);
  v.reset(64);
  CHECK_FALSE(v.test(64));
  CHECK(v.count() == 2);
}

TEST_CASE("find_set scans forward across words") {
  BitVec v(200);
  v.set(3);
  v.set(150);
  CHECK(v.find_set(0) == 3);
  CHECK(v.find_set(3) == 3);
  CHECK(v.find_set(4) == 150);
  CHECK(v.find_set(151) == -1);
  CHECK(BitVec(5).find_set(0) == -1);
}

TEST_CASE("find_last_clear respects the tail") {
  BitVec v(3);
  v.set(0);
  v.set(1);
  v.set(2);
  CHECK(v.find_last_clear() == -1);
  v.reset(1);
  CHECK(v.find_last_clear() == 1);

  BitVec w(70);
  for (int i = 0; i < 70; ++i) w.set(i);
  CHECK(w.find_last_clear() == -1);
  w.reset(64);
  CHECK(w.find_last_clear() == 64);
  w.reset(69);
  CHECK(w.find_last_clear() == 69);
}

TEST_CASE("equality and hashing include the size") {
  BitVec a(5);
  BitVec b(5);
  for (int i = 0; i < 5; ++i) {
    a.set(i);
    b.set(i);
  }
  CHECK(a == b);
  BitVec c(6);
  for (int i = 0; i < 5; ++i) c.set(i);
  CHECK(a.hash() != c.hash());
  b.reset(2);
  CHECK(a != b);
}

TEST_CASE("lex_less prefers presence of the smallest differing bit") {
  BitVec a(10);
  BitVec b(10);
  a.set(0);
  b.set(0);
  a.set(2);
  b.set(3);
  CHECK(lex_less(a, b));
  CHECK_FALSE(lex_less(b, a));
  CHECK_FALSE(lex_less(a, a));

  BitVec c(100);
  BitVec d(100);
  c.set(70);
  d.set(71);
  CHECK(lex_less(c, d));
  d.set(3);
  CHECK(lex_less(d, c));
}

TEST_CASE("subset check") {
  BitVec a(40);
  BitVec b(40);
  b.set(1);
  b.set(20);
  CHECK(is_subset(a, b));
  a.set(20);
  CHECK(is_subset(a, b));
  a.set(2);
  CHECK_FALSE(is_subset(a, b));
}

TEST_CASE("randomized agreement with a reference implementation") {
  std::mt19937_64 g(20260825);
  const int size = 193;
  BitVec v(size);
  std::vector<bool> ref(size, false);
  std::uniform_int_distribution<int> idx(0, size - 1);
  for (int step = 0; step < 500; ++step) {
    const int i = idx(g);
    if (g() & 1) {
      v.set(i);
      ref[i] = true;
    } else {
      v.reset(i);
      ref[i] = false;
    }

    int count = 0;
    for (bool bit : ref) count += bit;
    REQUIRE(v.count() == count);

    const int from = idx(g);
    int expected = -1;
    for (int j = from; j < size; ++j)
      if (ref[j]) {
        expected = j;
        break;
      }
    REQUIRE(v.find_set(from) == expected);

    int last_clear = -1;
    for (int j = size - 1; j >= 0; --j)
      if (!ref[j]) {
        last_clear = j;
        break;
      }
    REQUIRE(v.find_last_clear() == last_clear);
  }
}

}  // TEST_SUITE
