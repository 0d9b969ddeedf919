#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "polycover/witness.hpp"

using namespace polycover;
using namespace polycover::fixtures;

TEST_CASE("covers: plain witnesses") {
  ConvexPolygon sq = unit_square_poly();
  CHECK(covers(sq, Witness::plain(Point(Rat(1, 2), Rat(1, 2)))));
  CHECK(covers(sq, Witness::plain(Point(0, 0))));  // boundary counts
  CHECK_FALSE(covers(sq, Witness::plain(Point(2, 2))));
}

TEST_CASE("covers: directed witnesses at a corner") {
  ConvexPolygon sq = unit_square_poly();
  CHECK(covers(sq, Witness::directed(Point(0, 0), Point(1, 1))));
  CHECK_FALSE(covers(sq, Witness::directed(Point(0, 0), Point(-1, 0))));
  // Cone boundary directions count as covered.
  CHECK(covers(sq, Witness::directed(Point(0, 0), Point(1, 0))));
  CHECK(covers(sq, Witness::directed(Point(0, 0), Point(0, 1))));
  CHECK_FALSE(covers(sq, Witness::directed(Point(0, 0), Point(-1, 1))));
}

TEST_CASE("covers: directed witness tangent to an edge") {
  ConvexPolygon sq = unit_square_poly();
  // At (0,1/2), going straight up slides along the closed boundary.
  CHECK(covers(sq, Witness::directed(Point(Rat(0), Rat(1, 2)), Point(0, 1))));
  CHECK(covers(sq, Witness::directed(Point(Rat(0), Rat(1, 2)), Point(1, 0))));
  CHECK_FALSE(covers(sq, Witness::directed(Point(Rat(0), Rat(1, 2)), Point(-1, 0))));
  // Scaled-fixture limit oracle: eps = 1/1000 along the tangent stays
  // in the closed square, matching the exact predicate.
  Point eps_pt(Rat(0), Rat(1, 2) + Rat(1, 1000));
  CHECK(point_in_convex(sq, eps_pt) != Side::Outside);
}

TEST_CASE("covers: directed witness strictly inside ignores direction") {
  ConvexPolygon sq = unit_square_poly();
  CHECK(covers(sq, Witness::directed(Point(Rat(1, 2), Rat(1, 2)), Point(-7, 3))));
}

TEST_CASE("covers is monotone under polygon growth") {
  ConvexPolygon small = ConvexPolygon::hull_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  ConvexPolygon large = ConvexPolygon::hull_of({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  std::vector<Witness> ws{
      Witness::plain(Point(Rat(1, 2), Rat(1, 2))),
      Witness::plain(Point(1, 1)),
      Witness::directed(Point(0, 0), Point(1, 1)),
      Witness::directed(Point(1, 1), Point(1, 1)),
      Witness::directed(Point(0, 1), Point(1, 0)),
  };
  for (const Witness& w : ws)
    if (covers(small, w)) CHECK(covers(large, w));
}

TEST_CASE("arrangement witnesses") {
  CHECK(arrangement_witnesses(unit_square(), {unit_square_poly()}).size() == 1);
  // Two inside faces for the LSH pair (they only share the diagonal).
  CHECK(arrangement_witnesses(lsh(), {lsh_q1(), lsh_q2()}).size() == 2);
  for (const Witness& w : arrangement_witnesses(lsh(), {lsh_q1(), lsh_q2()}).witnesses) {
    CHECK(w.kind == WitnessKind::Plain);
    CHECK(point_in_pwh(lsh(), w.p) == Side::Inside);
  }
}

TEST_CASE("vertex witnesses") {
  CHECK(vertex_witnesses(unit_square(), {unit_square_poly()}).size() == 1);
  // Both LSH faces touch vertices of P.
  CHECK(vertex_witnesses(lsh(), {lsh_q1(), lsh_q2()}).size() == 2);
  // With T and Q1, the uncovered top-left face touches (0,2),(1,1),(1,2):
  // all four inside faces touch some vertex.
  CHECK(vertex_witnesses(lsh(), {lsh_t(), lsh_q1()}).size() == 4);
}

TEST_CASE("vertex witnesses can skip vertex-free cells") {
  // A diamond strictly inside the square bounds a center cell that
  // touches no vertex of P: 2 arrangement cells inside P but only 1
  // vertex cell.
  PolygonWithHoles sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {}, "sq4");
  ConvexPolygon diamond = ConvexPolygon::hull_of({{2, 1}, {3, 2}, {2, 3}, {1, 2}});
  CHECK(arrangement_witnesses(sq, {diamond}).size() == 2);
  CHECK(vertex_witnesses(sq, {diamond}).size() == 1);
}

TEST_CASE("quick vertex witnesses: square with itself") {
  WitnessSet ws = quick_vertex_witnesses(unit_square(), {unit_square_poly()});
  CHECK(ws.size() == 4);
  for (const Witness& w : ws.witnesses) CHECK(w.kind == WitnessKind::Directed);
}

TEST_CASE("quick vertex witnesses: LSH with empty collection") {
  WitnessSet ws = quick_vertex_witnesses(lsh(), {});
  CHECK(ws.size() == 6);
  // At the reflex corner (1,1) the gap direction points into the notch
  // diagonal; at (0,0) it bisects the convex corner.
  std::map<std::pair<std::string, std::string>, Point> dirs;
  for (const Witness& w : ws.witnesses)
    dirs[{w.p.x.get_str(), w.p.y.get_str()}] = w.dir;
  CHECK(dirs[{"0", "0"}] == Point(1, 1));
  CHECK(dirs[{"1", "1"}] == Point(-1, -1));
  CHECK(dirs[{"2", "0"}] == Point(-1, 1));
}

TEST_CASE("quick vertex witnesses: LSH with {Q1,Q2} per the angular oracle") {
  // Angular sort at each vertex: (0,0) has collection directions (1,1)
  // inside its cone -> 2 gaps; (1,1) has (1,0),( -1,-1),(0,1) -> 2 gaps;
  // the other four vertices keep a single gap.
  WitnessSet ws = quick_vertex_witnesses(lsh(), {lsh_q1(), lsh_q2()});
  CHECK(ws.size() == 8);
  std::map<std::pair<std::string, std::string>, int> per_vertex;
  for (const Witness& w : ws.witnesses)
    per_vertex[{w.p.x.get_str(), w.p.y.get_str()}]++;
  CHECK(per_vertex[{"0", "0"}] == 2);
  CHECK(per_vertex[{"1", "1"}] == 2);
  CHECK(per_vertex[{"2", "0"}] == 1);
  CHECK(per_vertex[{"2", "1"}] == 1);
  CHECK(per_vertex[{"1", "2"}] == 1);
  CHECK(per_vertex[{"0", "2"}] == 1);
}

TEST_CASE("quick vertex witnesses split collection edges passing through a vertex") {
  // P has a reflex vertex at (2,1); the slab's top edge y=1 runs
  // straight through it without an endpoint there.
  PolygonWithHoles q({{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}}, {}, "reflex");
  ConvexPolygon slab = ConvexPolygon::hull_of({{0, 0}, {4, 0}, {4, 1}, {0, 1}});
  WitnessSet ws = quick_vertex_witnesses(q, {slab});
  // The reflex cone at (2,1) spans everything below the notch; the
  // edge through it adds directions (-1,0) and (1,0), so the four
  // directions (-2,3),(-1,0),(1,0),(2,3) leave three gaps.
  int at_reflex = 0;
  for (const Witness& w : ws.witnesses)
    if (w.p == Point(2, 1)) at_reflex++;
  CHECK(at_reflex == 3);
}

TEST_CASE("quick witness count is linear in incident edges") {
  PolygonWithHoles l = lsh();
  std::vector<ConvexPolygon> polys{lsh_t(), lsh_q1(), lsh_q2()};
  WitnessSet ws = quick_vertex_witnesses(l, polys);
  std::size_t incident = 0;
  for (const Point& v : l.all_vertices()) {
    for (const ConvexPolygon& c : polys)
      for (std::size_t e = 0; e < c.size(); e++) {
        Segment s = c.edge(e);
        if (s.a == v || s.b == v || (orientation(s.a, s.b, v) == Orient::Collinear &&
                                     point_in_convex(c, v) == Side::Boundary))
          incident++;
      }
  }
  CHECK(ws.size() <= incident + l.vertex_count());
}

TEST_CASE("witness dedup by point and direction") {
  WitnessSet ws;
  CHECK(ws.add(Witness::directed(Point(0, 0), Point(1, 1))));
  CHECK_FALSE(ws.add(Witness::directed(Point(0, 0), Point(1, 1))));
  CHECK(ws.add(Witness::directed(Point(0, 0), Point(1, 2))));
  CHECK(ws.add(Witness::plain(Point(0, 0))));
  CHECK(ws.size() == 3);
}

TEST_CASE("normalize_direction reduces to primitive integer vectors") {
  CHECK(normalize_direction(Rat(1, 2), Rat(1, 3)) == Point(3, 2));
  CHECK(normalize_direction(Rat(4), Rat(-6)) == Point(2, -3));
  CHECK(normalize_direction(Rat(0), Rat(5)) == Point(0, 1));
}

TEST_CASE("witness set JSON round-trip") {
  WitnessSet ws = quick_vertex_witnesses(lsh(), {lsh_q1()});
  WitnessSet back = witness_set_from_json(witness_set_to_json(ws));
  CHECK(back.origin == ws.origin);
  REQUIRE(back.size() == ws.size());
  for (std::size_t i = 0; i < ws.size(); i++) CHECK(back.witnesses[i] == ws.witnesses[i]);
}

TEST_CASE("quick witnesses match vertex witness cells on fixtures") {
  // Map each directed witness to its arrangement cell (the face owning
  // a trapezoid whose cone at the vertex contains the direction) and
  // compare with the cells the vertex witnesses hit.
  PolygonWithHoles l = lsh();
  std::vector<ConvexPolygon> polys{lsh_q1(), lsh_q2()};
  Arrangement arr = build_arrangement(l, polys);

  std::set<int> vertex_cells;
  for (const Point& v : l.all_vertices())
    for (int f : arr.faces_touching(v))
      if (arr.faces()[f].inside_p) vertex_cells.insert(f);

  std::set<int> quick_cells;
  for (const Witness& w : quick_vertex_witnesses(l, polys).witnesses) {
    for (int f : arr.faces_touching(w.p)) {
      if (!arr.faces()[f].inside_p) continue;
      for (const ConvexPolygon& trap : arr.convex_decomposition({f}))
        if (covers(trap, w)) quick_cells.insert(f);
    }
  }
  CHECK(quick_cells == vertex_cells);
}
