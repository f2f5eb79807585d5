#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "tangles/direct_builder.hpp"
#include "tangles/oracles.hpp"
#include "tangles/perfect_builder.hpp"
#include "tangles/svg.hpp"
#include "tangles/tangle_json.hpp"
#include "testutil.hpp"

using namespace tangles;

TEST_CASE("tangle json format is byte-exact") {
  const Tangle cross(Permutation({2, 1}), {{}, {1}, {}});
  CHECK(write_tangle(cross) == R"({"n":2,"start":[2,1],"rows":[[],[1],[]]})");
  CHECK(read_tangle(R"({"n":2,"start":[2,1],"rows":[[],[1],[]]})") == cross);
  // Key order does not matter on input.
  CHECK(read_tangle(R"({"rows":[[],[1],[]],"n":2,"start":[2,1]})") == cross);
}

TEST_CASE("read_tangle error taxonomy") {
  CHECK_THROWS_AS(read_tangle("{"), MalformedJson);
  CHECK_THROWS_AS(read_tangle("[1,2]"), SchemaViolation);
  CHECK_THROWS_AS(read_tangle(R"({"n":2,"start":[2,1]})"), SchemaViolation);
  CHECK_THROWS_AS(read_tangle(R"({"n":2,"start":[2,1],"rows":[[],[]],"x":1})"), SchemaViolation);
  CHECK_THROWS_AS(read_tangle(R"({"n":3,"start":[2,1],"rows":[[],[]]})"), SchemaViolation);
  CHECK_THROWS_AS(read_tangle(R"({"n":2,"start":[2,2],"rows":[[],[]]})"), SchemaViolation);
  CHECK_THROWS_AS(read_tangle(R"({"n":3,"start":[2,1,3],"rows":[[],[2,1],[]]})"), SchemaViolation);
  // Structurally fine but not a tangle.
  CHECK_THROWS_AS(read_tangle(R"({"n":2,"start":[2,1],"rows":[[1]]})"), InvalidTangle);
  CHECK_THROWS_AS(read_tangle(R"({"n":3,"start":[2,1,3],"rows":[[],[1,2],[]]})"), InvalidTangle);
  try {
    read_tangle(R"({"n":2,"start":[2,1],"rows":[[1]]})");
    FAIL("expected InvalidTangle");
  } catch (const InvalidTangle& e) {
    CHECK(e.detail.kind == ValidationError::Kind::non_empty_boundary_row);
  }
}

TEST_CASE("round trip over builder outputs") {
  testutil::each_permutation(5, [](const Permutation& p) {
    if (const auto d = build_direct(p); d.ok())
      CHECK(read_tangle(write_tangle(*d.tangle)) == *d.tangle);
    if (const auto b = build_perfect(p); b.ok())
      CHECK(read_tangle(write_tangle(*b.tangle)) == *b.tangle);
  });
}

TEST_CASE("round trip preserves interior empty rows") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto t = random_simple_tangle(testutil::random_permutation(6, rng), rng());
    CHECK(read_tangle(write_tangle(t)) == t);
  }
}

TEST_CASE("svg renders one path per element") {
  const std::string flat = to_svg(Tangle(Permutation::identity(3), {{}, {}}));
  std::size_t paths = 0;
  for (std::size_t at = flat.find("<path"); at != std::string::npos;
       at = flat.find("<path", at + 1))
    ++paths;
  CHECK(paths == 3);
  // Vertical lines only: no diagonal, so every path is a single M/L pair.
  CHECK(flat.find(" A ") == std::string::npos);
}

TEST_CASE("svg vertex count is corners plus endpoints") {
  testutil::each_permutation(4, [](const Permutation& p) {
    const auto r = build_perfect(p);
    REQUIRE(r.ok());
    const std::string svg = to_svg(*r.tangle);
    const auto corners = corner_count(*r.tangle);
    std::size_t at = 0;
    for (int v = 1; v <= 4; ++v) {
      at = svg.find("d=\"M ", at);
      REQUIRE(at != std::string::npos);
      const std::size_t end = svg.find('"', at + 3);
      const std::string d = svg.substr(at, end - at);
      std::size_t lines = 0;
      for (std::size_t l = d.find(" L "); l != std::string::npos; l = d.find(" L ", l + 1))
        ++lines;
      // Paths are emitted in element order: vertices = corners + 2.
      CHECK(1 + lines == static_cast<std::size_t>(corners.per_path[static_cast<std::size_t>(v)]) + 2);
      at = end;
    }
  });
}

TEST_CASE("svg output is deterministic") {
  const auto r = build_perfect(parse_permutation("3 4 1 2"));
  REQUIRE(r.ok());
  RenderOptions opts;
  opts.rounded = true;
  opts.colored = true;
  CHECK(to_svg(*r.tangle, opts) == to_svg(*r.tangle, opts));
}

TEST_CASE("read_tangle rejects arbitrary junk without crashing") {
  std::mt19937_64 rng(313);
  const std::string seedling = R"({"n":2,"start":[2,1],"rows":[[],[1],[]]})";
  for (int i = 0; i < 500; ++i) {
    std::string text;
    if (rng() % 2) {
      text = seedling;
      const int mutations = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < mutations; ++k)
        text[rng() % text.size()] = static_cast<char>(rng() % 96 + 32);
    } else {
      const std::size_t len = rng() % 40;
      for (std::size_t k = 0; k < len; ++k) text += static_cast<char>(rng() % 96 + 32);
    }
    try {
      const Tangle t = read_tangle(text);
      CHECK_FALSE(validate(t).has_value());  // whatever parses must be valid
    } catch (const Error&) {
      // any library error type is acceptable
    }
  }
}

TEST_CASE("svg segments are vertical or exact 45 degrees") {
  std::mt19937_64 rng(451);
  for (int i = 0; i < 20; ++i) {
    const auto t = random_simple_tangle(testutil::random_permutation(5, rng), rng());
    const std::string svg = to_svg(t);
    // Collect every "x y" pair along each path and check consecutive deltas.
    std::size_t at = 0;
    while ((at = svg.find("d=\"", at)) != std::string::npos) {
      const std::size_t end = svg.find('"', at + 3);
      std::istringstream in(svg.substr(at + 3, end - at - 3));
      std::string tok;
      double px = 0, py = 0;
      bool have = false;
      while (in >> tok) {
        if (tok != "M" && tok != "L") continue;
        double x, y;
        in >> x >> y;
        if (have) {
          const double dx = x - px, dy = y - py;
          CHECK(dy > 0);
          if (dx != 0.0) CHECK(std::abs(std::abs(dx) - dy) < 1e-9);
        }
        px = x;
        py = y;
        have = true;
      }
      at = end;
    }
  }
}

TEST_CASE("rounded mode emits arcs at corners") {
  const auto r = build_direct(Permutation({2, 1}));
  RenderOptions opts;
  opts.rounded = true;
  const std::string svg = to_svg(*r.tangle, opts);
  CHECK(svg.find(" A ") != std::string::npos);
  CHECK_THROWS_AS(to_svg(*r.tangle, RenderOptions{2, false, false, 2.0}), Error);
}
