#include <doctest.h>

#include "fixtures.hpp"
#include "polycover/model.hpp"

using namespace polycover;
using namespace polycover::fixtures;

namespace {

const char* kSquareJson = R"({
  "type": "CGSHOP2023_Instance",
  "name": "sq",
  "n": 4,
  "outer_boundary": [{"x":0,"y":0},{"x":1,"y":0},{"x":1,"y":1},{"x":0,"y":1}],
  "holes": []
})";

}  // namespace

TEST_CASE("parse_instance on a square") {
  Instance inst = parse_instance(kSquareJson);
  CHECK(inst.name == "sq");
  CHECK(inst.n == 4);
  CHECK(inst.polygon.holes().empty());
  CHECK(sgn(ring_area2(inst.polygon.outer())) > 0);
}

TEST_CASE("parse_instance normalizes a CCW hole to CW") {
  const char* json = R"({
    "type": "CGSHOP2023_Instance", "name": "don", "n": 8,
    "outer_boundary": [{"x":0,"y":0},{"x":6,"y":0},{"x":6,"y":6},{"x":0,"y":6}],
    "holes": [[{"x":2,"y":2},{"x":4,"y":2},{"x":4,"y":4},{"x":2,"y":4}]]
  })";
  Instance inst = parse_instance(json);
  REQUIRE(inst.polygon.holes().size() == 1);
  CHECK(sgn(ring_area2(inst.polygon.holes()[0])) < 0);
  CHECK(inst.n == 8);
}

TEST_CASE("parse_instance rejects a repeated vertex") {
  const char* json = R"({
    "type": "CGSHOP2023_Instance", "name": "bad", "n": 4,
    "outer_boundary": [{"x":0,"y":0},{"x":1,"y":0},{"x":1,"y":0},{"x":0,"y":1}]
  })";
  CHECK_THROWS_AS(parse_instance(json), InvalidPolygon);
}

TEST_CASE("parse_instance rejects malformed input") {
  CHECK_THROWS_AS(parse_instance("not json"), ParseError);
  CHECK_THROWS_AS(parse_instance("{\"type\":\"CGSHOP2023_Instance\"}"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"outer_boundary":[{"x":0.5,"y":0}]})"), ParseError);
}

TEST_CASE("rational coordinates round-trip as num/den in lowest terms") {
  ConvexPolygon c = ConvexPolygon::hull_of(
      {Point(Rat(1, 2), Rat(3)), Point(Rat(2), Rat(0)), Point(Rat(3), Rat(4))});
  Solution sol = Solution::from_convex("sq", {c});
  std::string bytes = write_solution(sol);
  Json j = Json::parse(bytes);
  const Json& vx = j.at("polygons").at(0).at(0);
  bool found = false;
  for (const Json& pt : j.at("polygons").at(0)) {
    if (pt.at("x").is_object()) {
      CHECK(pt.at("x").at("num") == 1);
      CHECK(pt.at("x").at("den") == 2);
      found = true;
    }
  }
  CHECK(found);
  CHECK(vx.at("y").is_number_integer());
  Solution back = parse_solution(bytes);
  CHECK(back.polygons == sol.polygons);
  CHECK(back.instance_name == "sq");
}

TEST_CASE("solution round-trip on an LSH cover") {
  Solution sol = Solution::from_convex("lsh", {lsh_q1(), lsh_q2()});
  Solution back = parse_solution(write_solution(sol));
  CHECK(back.polygons == sol.polygons);
}

TEST_CASE("instance round-trip") {
  Instance don{donut(), "donut", 8};
  Instance back = parse_instance(write_instance(don));
  CHECK(back.polygon.outer() == don.polygon.outer());
  CHECK(back.polygon.holes() == don.polygon.holes());
  CHECK(back.n == 8);
}

TEST_CASE("fuzzed solutions with rational coordinates round-trip exactly") {
  for (std::uint64_t seed = 1; seed <= 15; seed++) {
    Rng rng(seed);
    Solution sol;
    sol.instance_name = "fuzz";
    std::size_t n_polys = 1 + rng.below(4);
    for (std::size_t k = 0; k < n_polys; k++) {
      // Random strictly convex polygon with rational vertices.
      std::vector<Point> pts;
      for (int i = 0; i < 8; i++) {
        long nx = static_cast<long>(rng.below(2001)) - 1000;
        long ny = static_cast<long>(rng.below(2001)) - 1000;
        long dx = 1 + static_cast<long>(rng.below(9));
        long dy = 1 + static_cast<long>(rng.below(9));
        Rat rx(nx, dx), ry(ny, dy);
        rx.canonicalize();
        ry.canonicalize();
        pts.emplace_back(rx, ry);
      }
      try {
        sol.polygons.push_back(ConvexPolygon::hull_of(pts, false).vertices());
      } catch (const DegenerateHull&) {
        sol.polygons.push_back(unit_square_poly().vertices());
      }
    }
    Solution back = parse_solution(write_solution(sol));
    CHECK(back.polygons == sol.polygons);
  }
}

TEST_CASE("ring_convex accepts collinear chains and rejects reflex rings") {
  CHECK(ring_convex({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}}));
  CHECK(ring_convex({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  CHECK(ring_convex({{0, 2}, {2, 2}, {2, 0}, {0, 0}}));  // CW input
  CHECK_FALSE(ring_convex({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}));
  CHECK_FALSE(ring_convex({{0, 0}, {1, 0}}));
  CHECK_FALSE(ring_convex({{0, 0}, {1, 0}, {2, 0}}));
  CHECK_FALSE(ring_convex({{0, 0}, {1, 1}, {1, 0}, {0, 1}}));  // bowtie
}

TEST_CASE("verify on LSH covers") {
  Instance inst{lsh(), "lsh", 6};
  SUBCASE("Q1+Q2 is a full cover") {
    VerificationReport rep = verify(inst, Solution::from_convex("lsh", {lsh_q1(), lsh_q2()}));
    CHECK(rep.convexity_ok);
    CHECK(rep.containment_ok);
    CHECK(rep.coverage_ok);
    CHECK(rep.uncovered_components == 0);
    CHECK(rep.size == 2);
    CHECK(rep.all_ok());
  }
  SUBCASE("Q1 alone leaves one uncovered component") {
    VerificationReport rep = verify(inst, Solution::from_convex("lsh", {lsh_q1()}));
    CHECK(rep.convexity_ok);
    CHECK(rep.containment_ok);
    CHECK_FALSE(rep.coverage_ok);
    CHECK(rep.uncovered_components == 1);
  }
  SUBCASE("non-convex polygon fails convexity") {
    Solution sol;
    sol.instance_name = "lsh";
    sol.polygons = {{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
    VerificationReport rep = verify(inst, sol);
    CHECK_FALSE(rep.convexity_ok);
  }
  SUBCASE("polygon escaping P fails containment") {
    VerificationReport rep = verify(
        inst, Solution::from_convex(
                  "lsh", {ConvexPolygon::hull_of({{0, 0}, {2, 0}, {2, 2}, {0, 2}})}));
    CHECK(rep.convexity_ok);
    CHECK_FALSE(rep.containment_ok);
  }
}

TEST_CASE("verify on the unit square") {
  Instance inst{unit_square(), "square", 4};
  VerificationReport rep = verify(inst, Solution::from_convex("square", {unit_square_poly()}));
  CHECK(rep.all_ok());
  CHECK(rep.size == 1);
}
