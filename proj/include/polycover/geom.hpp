#pragma once

/// Exact-rational geometric kernel.
///
/// All predicates are decided with exact rational arithmetic (GMP mpq);
/// there is no floating-point path anywhere in this header's functions.
/// Containment is always with respect to closed sets: a point on a ring
/// or polygon edge is Boundary, never Outside.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycover/errors.hpp"

namespace polycover {

using Rat = mpq_class;
using Int = mpz_class;

enum class Orient { Left, Right, Collinear };
enum class Side { Inside, Boundary, Outside };

struct Point {
  Rat x, y;

  Point() : x(0), y(0) {}
  Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Lexicographic (x, then y) order; total and exact.
bool lex_less(const Point& a, const Point& b);

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

struct Segment {
  Point a, b;
  Segment() = default;
  Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {}
};

/// Sign of the cross product (q-p) x (r-p).
Orient orientation(const Point& p, const Point& q, const Point& r);

/// Cross product of direction vectors, as an exact rational.
Rat cross(const Point& o, const Point& a, const Point& b);

class ConvexPolygon {
 public:
  /// Convex hull of the given points (at least 3 non-collinear required,
  /// else DegenerateHull). Vertices come out CCW, strictly convex,
  /// starting at the lexicographically smallest vertex. When
  /// `keep_generators` is set, the deduplicated input is retained so
  /// that collinear clique members are not lost.
  static ConvexPolygon hull_of(std::vector<Point> pts, bool keep_generators = true);

  /// Wrap an already-normalized CCW strictly-convex vertex list.
  /// Only checks the invariant with assertions in debug builds; use
  /// hull_of for untrusted input.
  static ConvexPolygon from_normalized(std::vector<Point> verts);

  const std::vector<Point>& vertices() const { return verts_; }
  const std::vector<Point>& generators() const { return gens_; }
  bool has_generators() const { return !gens_.empty(); }

  std::size_t size() const { return verts_.size(); }
  Segment edge(std::size_t i) const {
    return Segment(verts_[i], verts_[(i + 1) % verts_.size()]);
  }

  /// Average of the vertices; strictly interior for a strictly convex polygon.
  Point centroid() const;

  /// Twice the (positive) enclosed area.
  Rat area2() const;

  bool operator==(const ConvexPolygon& o) const { return verts_ == o.verts_; }
  bool operator!=(const ConvexPolygon& o) const { return !(*this == o); }

 private:
  std::vector<Point> verts_;
  std::vector<Point> gens_;
};

/// Strict weak order on canonical vertex lists, for deduplication sets.
struct ConvexPolygonLess {
  bool operator()(const ConvexPolygon& a, const ConvexPolygon& b) const;
};

struct PointVecLess {
  bool operator()(const std::vector<Point>& a, const std::vector<Point>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); i++)
      if (a[i] != b[i]) return lex_less(a[i], b[i]);
    return false;
  }
};

Side point_in_convex(const ConvexPolygon& c, const Point& p);

class PolygonWithHoles {
 public:
  /// Orientation is normalized on construction: outer ring CCW, holes CW.
  /// With `validate` set, rejects degenerate rings (repeated vertices,
  /// fewer than 3 vertices, self-intersection) and holes that are not
  /// strictly inside the outer ring or that touch one another
  /// (InvalidPolygon). Internally constructed regions (uncovered
  /// components) skip validation.
  PolygonWithHoles(std::vector<Point> outer,
                   std::vector<std::vector<Point>> holes = {},
                   std::string name = "", bool validate = true);

  const std::vector<Point>& outer() const { return outer_; }
  const std::vector<std::vector<Point>>& holes() const { return holes_; }
  const std::string& name() const { return name_; }

  std::size_t vertex_count() const;

  /// All ring vertices: outer first, then holes in order.
  std::vector<Point> all_vertices() const;

  /// All ring edges, outer first, then holes in order; built once.
  const std::vector<Segment>& ring_edges() const { return edges_; }

  /// Exact bounding box (min point, max point).
  std::pair<Point, Point> bbox() const;

 private:
  std::vector<Point> outer_;
  std::vector<std::vector<Point>> holes_;
  std::vector<Segment> edges_;
  std::string name_;
};

/// Twice the signed area of a ring (positive = CCW).
Rat ring_area2(const std::vector<Point>& ring);

/// Even-odd classification of p against a single closed ring.
Side point_in_ring(const std::vector<Point>& ring, const Point& p);

/// Closed-region classification: points on any ring are Boundary,
/// points inside a hole are Outside.
Side point_in_pwh(const PolygonWithHoles& p, const Point& s);

/// True iff every point of s lies in closed P. Decided by splitting s at
/// all ring intersections and classifying the midpoint of every piece.
bool segment_in_pwh(const PolygonWithHoles& p, const Segment& s);

/// True iff C is contained in closed P. Edge containment plus an
/// interior-point test plus a ring-intrusion test (no ring edge may pass
/// through C's interior); the combination is exact.
bool convex_in_pwh(const PolygonWithHoles& p, const ConvexPolygon& c);

/// hull(pts) ⊆ closed P, tolerating degenerate hulls: a single point is
/// tested for membership, a collinear set as its extreme segment.
bool hull_in_pwh(const PolygonWithHoles& p, const std::vector<Point>& pts);

/// The inclusion-maximal segment on line(s) that contains s and is
/// contained in closed P. Precondition: s ⊆ P.
Segment extend_segment(const PolygonWithHoles& p, const Segment& s);

/// Exact intersection point of the two supporting lines; nullopt when
/// parallel or identical.
std::optional<Point> line_intersection(const Segment& l1, const Segment& l2);

template <typename T>
using PointMap = std::map<Point, T, PointLess>;

}  // namespace polycover
