#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tangles/oracles.hpp"
#include "tangles/recognizer.hpp"
#include "testutil.hpp"

using namespace tangles;

TEST_CASE("identity is perfect with the empty marking") {
  const auto r = recognize(Permutation::identity(5));
  REQUIRE(r.perfect);
  for (int v = 1; v <= 5; ++v) CHECK(r.marking[static_cast<std::size_t>(v)] == Mark::none);
}

TEST_CASE("irregular conflict obstruction") {
  const auto r = recognize(parse_permutation("7 3 2 4 6 5 1"));
  REQUIRE_FALSE(r.perfect);
  CHECK(r.reason == NotPerfectReason::irregular_conflict);
  CHECK(r.obstruction == std::vector<int>{4});
}

TEST_CASE("matching deficit obstruction") {
  const auto r = recognize(parse_permutation("3 6 1 4 7 2 5"));
  REQUIRE_FALSE(r.perfect);
  CHECK(r.reason == NotPerfectReason::matching_deficit);
  CHECK(r.obstruction == std::vector<int>{4});
}

TEST_CASE("match graph for the starved instance has a forced vertex and no edges") {
  const auto p = parse_permutation("3 6 1 4 7 2 5");
  const auto g = build_match_graph(p, candidate_sets(p));
  CHECK(g.vertices == std::vector<int>{4});
  CHECK(g.weights == std::vector<int>{1});
  CHECK(g.edges.empty());
}

TEST_CASE("emitted markings are fully balanced (S6)") {
  testutil::each_permutation(6, [](const Permutation& p) {
    const auto r = recognize(p);
    REQUIRE(r.perfect);  // every S6 permutation
    CHECK(is_marking_for(p, r.marking));
    CHECK(is_balanced(p, r.marking, BalanceMode::full));
  });
}

TEST_CASE("recognizer agrees with the exhaustive-marking oracle (S6)") {
  testutil::each_permutation(6, [](const Permutation& p) {
    CHECK(recognize(p).perfect == balanced_marking_bruteforce(p).has_value());
  });
}

TEST_CASE("recognizer agrees with the oracle on random n=9") {
  std::mt19937_64 rng(906);
  for (int i = 0; i < 60; ++i) {
    const auto p = testutil::random_permutation(9, rng);
    CHECK(recognize(p).perfect == balanced_marking_bruteforce(p).has_value());
  }
}

TEST_CASE("census") {
  const auto s5 = census(5, CensusPredicate::both);
  CHECK(s5.total == 120);
  CHECK(s5.perfect == 120);
  CHECK(s5.direct == 42);

  const auto s6 = census(6, CensusPredicate::perfect);
  CHECK(s6.perfect == 720);

  CHECK_THROWS_AS(census(9, CensusPredicate::perfect), BoundExceeded);
  CHECK_THROWS_AS(census(0, CensusPredicate::perfect), BoundExceeded);
}

TEST_CASE("census can list the non-perfect permutations") {
  const auto s7 = census(7, CensusPredicate::perfect, 8, true);
  CHECK(s7.perfect == 5024);
  CHECK(s7.non_perfect.size() == 16);
  for (const auto& p : s7.non_perfect) CHECK_FALSE(recognize(p).perfect);
}
