#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tangles/direct_builder.hpp"
#include "testutil.hpp"

using namespace tangles;

TEST_CASE("trivial builds") {
  const auto one = build_direct(Permutation({1}));
  REQUIRE(one.ok());
  CHECK(corner_count(*one.tangle).total == 0);

  const auto cross = build_direct(Permutation({2, 1}));
  REQUIRE(cross.ok());
  CHECK(corner_count(*cross.tangle).total == 4);
  CHECK(crossing_count(*cross.tangle) == 1);
}

TEST_CASE("rejects with a 321 witness") {
  const auto p = parse_permutation("3 6 1 4 7 2 5");
  const auto r = build_direct(p);
  REQUIRE_FALSE(r.ok());
  CHECK(p(r.witness[0]) == 6);
  CHECK(p(r.witness[1]) == 4);
  CHECK(p(r.witness[2]) == 2);
}

TEST_CASE("shift_to_touch") {
  // Column neighbours: touch one unit below.
  HeightedCrossSet base;
  base.add({4, 10});
  HeightedCrossSet sub;
  sub.add({3, 0});
  const auto merged = shift_to_touch(base, sub);
  REQUIRE(merged.size() == 2);
  CHECK(merged.topmost_at(3) == 9);

  // No column interaction: rises until the top rows align.
  HeightedCrossSet far_sub;
  far_sub.add({1, 0});
  const auto aligned = shift_to_touch(base, far_sub);
  CHECK(aligned.topmost_at(1) == 10);

  // Empty base leaves the sub untouched.
  CHECK(touch_shift(HeightedCrossSet{}, far_sub) == 0);
}

TEST_CASE("builder succeeds exactly on 321-avoiding permutations (n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    testutil::each_permutation(n, [](const Permutation& p) {
      const auto r = build_direct(p);
      REQUIRE(r.ok() == !find_321(p).has_value());
      if (!r.ok()) return;
      const Tangle& t = *r.tangle;
      CHECK(solves(t, p));
      CHECK(is_direct(t));
      CHECK(is_simple(t));
      for (const auto& s : marking_of(t)) CHECK(s.size() <= 1);
    });
  }
}

TEST_CASE("corner total is twice the number of moved elements") {
  testutil::each_permutation(6, [](const Permutation& p) {
    const auto r = build_direct(p);
    if (!r.ok()) return;
    const auto cls = classify(p);
    int moved = 0;
    for (int v = 1; v <= 6; ++v)
      if (cls[static_cast<std::size_t>(v)] != ElementClass::neither) ++moved;
    CHECK(corner_count(*r.tangle).total == 2 * moved);
  });
}

TEST_CASE("any admissible top-level descent yields an equally good direct tangle") {
  testutil::each_permutation(5, [](const Permutation& p) {
    if (find_321(p) || p.is_identity()) return;
    const int reference = corner_count(*build_direct(p).tangle).total;
    for (int s = 1; s <= 4; ++s) {
      if (p(s) <= p(s + 1)) continue;
      const auto r = build_direct(p, s);
      REQUIRE(r.ok());
      CHECK(solves(*r.tangle, p));
      CHECK(is_direct(*r.tangle));
      CHECK(corner_count(*r.tangle).total == reference);
    }
  });
}

TEST_CASE("top_descent must be a descent") {
  CHECK(build_direct(Permutation({1, 3, 2}), 2).ok());
  CHECK_THROWS_AS(build_direct(Permutation({1, 3, 2}), 1), PositionOutOfRange);
  CHECK_THROWS_AS(build_direct(Permutation({1, 3, 2}), 3), PositionOutOfRange);
}
