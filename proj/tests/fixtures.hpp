#pragma once

#include <vector>

#include "polycover/geom.hpp"
#include "polycover/model.hpp"
#include "polycover/rng.hpp"

namespace polycover::fixtures {

// L-shaped hexagon; its three V-maximal polygons are the triangle
// (0,0),(2,0),(0,2) and the quads Q1, Q2 below.
inline PolygonWithHoles lsh() {
  return PolygonWithHoles({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, {}, "lsh");
}

inline ConvexPolygon lsh_t() {
  return ConvexPolygon::hull_of({{0, 0}, {2, 0}, {1, 1}, {0, 2}});
}
inline ConvexPolygon lsh_q1() {
  return ConvexPolygon::hull_of({{0, 0}, {2, 0}, {2, 1}, {1, 1}});
}
inline ConvexPolygon lsh_q2() {
  return ConvexPolygon::hull_of({{0, 0}, {1, 1}, {1, 2}, {0, 2}});
}

// 6x6 square with a 2x2 hole in the middle.
inline PolygonWithHoles donut() {
  return PolygonWithHoles({{0, 0}, {6, 0}, {6, 6}, {0, 6}},
                          {{{2, 2}, {4, 2}, {4, 4}, {2, 4}}}, "donut");
}

// The four maximal side slabs of the donut; exactly covering, optimum 4.
inline std::vector<ConvexPolygon> donut_slabs() {
  return {ConvexPolygon::hull_of({{0, 0}, {6, 0}, {6, 2}, {0, 2}}),
          ConvexPolygon::hull_of({{0, 4}, {6, 4}, {6, 6}, {0, 6}}),
          ConvexPolygon::hull_of({{0, 0}, {2, 0}, {2, 6}, {0, 6}}),
          ConvexPolygon::hull_of({{4, 0}, {6, 0}, {6, 6}, {4, 6}})};
}

inline PolygonWithHoles unit_square() {
  return PolygonWithHoles({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {}, "square");
}

inline ConvexPolygon unit_square_poly() {
  return ConvexPolygon::hull_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// Star-shaped simple polygon with integer coordinates: points sampled
// on distinct angles around the origin with random radii, so reflex
// vertices are common. Deterministic given the seed.
inline PolygonWithHoles random_simple_polygon(std::uint64_t seed, std::size_t max_vertices) {
  Rng rng(seed);
  while (true) {
    std::size_t want = 3 + rng.below(max_vertices - 2);
    std::vector<Point> pts;
    std::vector<std::pair<double, Point>> by_angle;
    for (std::size_t i = 0; i < 3 * want && by_angle.size() < want; i++) {
      long x = static_cast<long>(rng.below(41)) - 20;
      long y = static_cast<long>(rng.below(41)) - 20;
      if (x == 0 && y == 0) continue;
      Point p(x, y);
      bool dup = false;
      for (const auto& [a, q] : by_angle) {
        // Same direction from the center makes radial order ambiguous.
        if (orientation(Point(0, 0), q, p) == Orient::Collinear &&
            sgn(Rat(q.x * p.x + q.y * p.y)) > 0) {
          dup = true;
          break;
        }
      }
      if (!dup) by_angle.emplace_back(std::atan2(double(y), double(x)), p);
    }
    if (by_angle.size() < 3) continue;
    std::sort(by_angle.begin(), by_angle.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Point> ring;
    for (auto& [a, p] : by_angle) ring.push_back(p);
    // Drop collinear chain middles so rings are in general position-ish.
    std::vector<Point> clean;
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; i++) {
      const Point& prev = ring[(i + n - 1) % n];
      const Point& next = ring[(i + 1) % n];
      if (orientation(prev, ring[i], next) == Orient::Collinear) continue;
      clean.push_back(ring[i]);
    }
    if (clean.size() < 3) continue;
    try {
      return PolygonWithHoles(clean, {}, "fuzz-" + std::to_string(seed), true);
    } catch (const InvalidPolygon&) {
      rng.next();
      continue;
    }
  }
}

}  // namespace polycover::fixtures
