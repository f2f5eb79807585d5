#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tangles/direct_builder.hpp"
#include "tangles/oracles.hpp"
#include "testutil.hpp"

using namespace tangles;

TEST_CASE("min_corners basics") {
  CHECK(min_corners(Permutation::identity(4), false) == 0);
  CHECK(min_corners(Permutation({2, 1}), false) == 4);
  CHECK(min_corners(Permutation({2, 1}), true) == 4);
  CHECK_THROWS_AS(min_corners(Permutation::identity(7), false), SizeGuard);
}

TEST_CASE("min_corners visited cap raises the guard") {
  CHECK_THROWS_AS(min_corners(Permutation({4, 3, 2, 1}), false, 10), SizeGuard);
}

TEST_CASE("min_corners matches the direct builder on 321-avoiding S4") {
  testutil::each_permutation(4, [](const Permutation& p) {
    const auto r = build_direct(p);
    if (!r.ok()) return;
    const int total = corner_count(*r.tangle).total;
    CHECK(min_corners(p, false) == total);
    CHECK(min_corners(p, true) == total);
  });
}

TEST_CASE("simple restriction never wins") {
  testutil::each_permutation(4, [](const Permutation& p) {
    CHECK(min_corners(p, true) >= min_corners(p, false));
  });
}

TEST_CASE("balanced_marking_bruteforce") {
  const auto id = balanced_marking_bruteforce(Permutation::identity(3));
  REQUIRE(id.has_value());
  for (int v = 1; v <= 3; ++v) CHECK((*id)[static_cast<std::size_t>(v)] == Mark::none);

  CHECK_FALSE(balanced_marking_bruteforce(parse_permutation("3 6 1 4 7 2 5")).has_value());
  CHECK_FALSE(balanced_marking_bruteforce(family_example(4)).has_value());

  CHECK_THROWS_AS(balanced_marking_bruteforce(parse_permutation("3 6 1 4 7 2 5"), 0), SizeGuard);
}

TEST_CASE("bruteforce markings are balanced markings") {
  testutil::each_permutation(5, [](const Permutation& p) {
    const auto m = balanced_marking_bruteforce(p);
    REQUIRE(m.has_value());  // all of S5 is perfect
    CHECK(is_marking_for(p, *m));
    CHECK(is_balanced(p, *m, BalanceMode::full));
  });
}

TEST_CASE("random_simple_tangle") {
  const auto id = random_simple_tangle(Permutation::identity(3), 5);
  CHECK(crossing_count(id) == 0);

  const auto cross = random_simple_tangle(Permutation({2, 1}), 9);
  CHECK(crossing_count(cross) == 1);
  CHECK(is_simple(cross));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto p = testutil::random_permutation(2 + static_cast<int>(rng() % 7), rng);
    const auto t = random_simple_tangle(p, rng());
    REQUIRE_FALSE(validate(t).has_value());
    CHECK(solves(t, p));
    CHECK(is_simple(t));
    CHECK(crossing_count(t) == inversion_number(p));
  }
}

TEST_CASE("random_simple_tangle is deterministic in the seed") {
  const auto p = parse_permutation("3 6 1 4 7 2 5");
  CHECK(random_simple_tangle(p, 1234) == random_simple_tangle(p, 1234));
}

TEST_CASE("oracle minimum lower-bounds every generated simple tangle") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 60; ++i) {
    const auto p = testutil::random_permutation(2 + static_cast<int>(rng() % 4), rng);
    const int floor_simple = min_corners(p, true);
    const int floor_any = min_corners(p, false);
    CHECK(floor_any <= floor_simple);
    for (int j = 0; j < 3; ++j)
      CHECK(floor_simple <= corner_count(random_simple_tangle(p, rng())).total);
  }
}
