#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tangles/permutation.hpp"
#include "testutil.hpp"

using namespace tangles;

TEST_CASE("parse accepts spaces and commas") {
  CHECK(parse_permutation("1").entries() == std::vector<int>{1});
  CHECK(parse_permutation("3 6 1 4 7 2 5").entries() == std::vector<int>{3, 6, 1, 4, 7, 2, 5});
  CHECK(parse_permutation("3,6,1,4,7,2,5").entries() == std::vector<int>{3, 6, 1, 4, 7, 2, 5});
}

TEST_CASE("parse rejects non-bijections and empty input") {
  CHECK_THROWS_AS(parse_permutation("1 1 2"), NotABijection);
  CHECK_THROWS_AS(parse_permutation("1 3"), NotABijection);
  CHECK_THROWS_AS(parse_permutation("0 1"), NotABijection);
  CHECK_THROWS_AS(parse_permutation("x"), NotABijection);
  CHECK_THROWS_AS(parse_permutation("   "), EmptyInput);
}

TEST_CASE("inversions") {
  CHECK(inversions(Permutation({1, 2, 3})).empty());
  CHECK(inversions(Permutation({2, 1})) == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(inversion_number(parse_permutation("3 6 1 4 7 2 5")) == 9);
}

TEST_CASE("apply_swap basics") {
  CHECK(apply_swap(Permutation({1, 2}), 1) == Permutation({2, 1}));
  CHECK(apply_swap(Permutation({2, 1}), 1) == Permutation({1, 2}));
  CHECK(apply_swap(parse_permutation("3 6 1 4 7 2 5"), 2) == parse_permutation("3 1 6 4 7 2 5"));
  CHECK_THROWS_AS(apply_swap(Permutation({1, 2}), 2), PositionOutOfRange);
  CHECK_THROWS_AS(apply_swap(Permutation({1, 2}), 0), PositionOutOfRange);
}

TEST_CASE("apply_swap is an involution and moves the inversion number by one") {
  testutil::each_permutation(5, [](const Permutation& p) {
    for (int s = 1; s <= 4; ++s) {
      const Permutation q = apply_swap(p, s);
      CHECK(apply_swap(q, s) == p);
      CHECK(std::abs(inversion_number(q) - inversion_number(p)) == 1);
    }
  });
}

TEST_CASE("pattern containment") {
  const auto host = parse_permutation("3 6 1 4 7 2 5");
  CHECK(contains_pattern(host, Permutation({3, 2, 1})));
  CHECK_FALSE(contains_pattern(Permutation({1, 2, 3}), Permutation({2, 1})));
  const auto self = parse_permutation("7 3 2 4 6 5 1");
  CHECK(contains_pattern(self, self));
  CHECK_THROWS_AS(contains_pattern(Permutation({1}), Permutation({1, 2})),
                  PatternLargerThanHost);
}

TEST_CASE("find_321 witness is a descending subsequence") {
  const auto p = parse_permutation("3 6 1 4 7 2 5");
  const auto w = find_321(p);
  REQUIRE(w.has_value());
  CHECK((*w)[0] < (*w)[1]);
  CHECK((*w)[1] < (*w)[2]);
  CHECK(p((*w)[0]) > p((*w)[1]));
  CHECK(p((*w)[1]) > p((*w)[2]));
}

TEST_CASE("generic pattern search agrees with subsequence enumeration on S5 hosts") {
  const Permutation mu({2, 3, 1});
  testutil::each_permutation(5, [&](const Permutation& p) {
    bool expect = false;
    for (int i = 1; i <= 5 && !expect; ++i)
      for (int j = i + 1; j <= 5 && !expect; ++j)
        for (int k = j + 1; k <= 5 && !expect; ++k)
          expect = p(k) < p(i) && p(i) < p(j);
    CHECK(contains_pattern(p, mu) == expect);
  });
}

TEST_CASE("classify examples") {
  for (auto c : classify(Permutation::identity(6)))
    CHECK(c == ElementClass::neither);
  const auto two = classify(Permutation({2, 1}));
  CHECK(two[2] == ElementClass::right_straight);
  CHECK(two[1] == ElementClass::left_straight);
  const auto cls = classify(parse_permutation("3 6 1 4 7 2 5"));
  for (int v : {3, 6, 7}) CHECK(cls[static_cast<std::size_t>(v)] == ElementClass::right_straight);
  for (int v : {1, 2, 5}) CHECK(cls[static_cast<std::size_t>(v)] == ElementClass::left_straight);
  CHECK(cls[4] == ElementClass::switchback);
}

TEST_CASE("classification matches the inversion sets") {
  testutil::each_permutation(6, [](const Permutation& p) {
    const auto cls = classify(p);
    std::set<int> lefts, rights;
    for (const auto& [a, b] : inversions(p)) {
      rights.insert(a);
      lefts.insert(b);
    }
    for (int v = 1; v <= 6; ++v) {
      CHECK(is_left_class(cls[static_cast<std::size_t>(v)]) == (lefts.count(v) > 0));
      CHECK(is_right_class(cls[static_cast<std::size_t>(v)]) == (rights.count(v) > 0));
    }
  });
}

TEST_CASE("has_split") {
  CHECK(has_split(Permutation({2, 1, 3}), 2));
  CHECK_FALSE(has_split(Permutation({2, 3, 1}), 2));
  CHECK_FALSE(has_split(parse_permutation("3 6 1 4 7 2 5"), 4));
  CHECK_THROWS_AS(has_split(Permutation({2, 1}), 2), LocationOutOfRange);
}

TEST_CASE("family_example expands the displayed formula") {
  CHECK(family_example(4).entries() ==
        std::vector<int>{8, 3, 2, 5, 4, 7, 6, 1, 16, 11, 10, 13, 12, 15, 14, 9});
  CHECK(contains_pattern(family_example(4), Permutation({3, 2, 1})));
  const auto p5 = family_example(5);
  CHECK(p5.size() == 20);
  CHECK(p5(1) == 10);
  CHECK_THROWS_AS(family_example(3), KTooSmall);
}

TEST_CASE("inversion-reducing swaps preserve 321-avoidance (exhaustive S6)") {
  testutil::each_permutation(6, [](const Permutation& p) {
    if (find_321(p)) return;
    for (int s = 1; s <= 5; ++s) {
      const Permutation q = apply_swap(p, s);
      if (inversion_number(q) == inversion_number(p) - 1) CHECK_FALSE(find_321(q).has_value());
    }
  });
}

TEST_CASE("321-avoiding census matches the Catalan numbers up to n=6") {
  const long long want[] = {0, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    long long count = 0;
    testutil::each_permutation(n, [&](const Permutation& p) {
      if (!find_321(p)) ++count;
    });
    CHECK(count == want[n]);
  }
}
