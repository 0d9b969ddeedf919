#pragma once

/// Planar subdivision induced by a set of segments, restricted to the
/// bounding box of the input. Built as an exact vertical slab
/// decomposition: segments are split at all pairwise intersections,
/// each slab between consecutive event abscissas is cut into trapezoids
/// by the edges crossing it, and trapezoids are merged into faces where
/// they touch across a slab boundary through an unblocked open
/// interval. This handles faces with holes (an annulus face is a single
/// merged class) without any half-edge bookkeeping, and every face gets
/// a representative point that is strictly interior by construction.

#include <optional>
#include <vector>

#include "polycover/geom.hpp"

namespace polycover {

struct ArrFace {
  Point rep;                   // strictly inside the face
  bool inside_p = false;       // point_in_pwh(P, rep) == Inside
  std::vector<int> trapezoids; // indices into the trapezoid table
};

class Arrangement {
 public:
  static constexpr std::size_t kDefaultFaceCap = 1000000;

  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<ArrFace>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t inside_face_count() const;

  /// Ids of faces whose closure contains p.
  std::vector<int> faces_touching(const Point& p) const;

  /// Connected components of the selected faces under edge adjacency
  /// (shared boundary pieces of positive length; point contacts do not
  /// connect). `selected` is indexed by face id.
  std::vector<std::vector<int>> components(const std::vector<char>& selected) const;

  /// Boundary polygon of one edge-connected component (outer ring CCW,
  /// holes CW). Returns nullopt for degenerate weakly-simple boundaries
  /// (a boundary cycle revisiting a vertex), in which case callers fall
  /// back to convex_decomposition.
  std::optional<PolygonWithHoles> component_polygon(const std::vector<int>& faces) const;

  /// The component's trapezoids as convex quads/triangles. Always
  /// available; exact partition of the component.
  std::vector<ConvexPolygon> convex_decomposition(const std::vector<int>& faces) const;

 private:
  friend Arrangement build_arrangement(const PolygonWithHoles&,
                                       const std::vector<ConvexPolygon>&,
                                       std::size_t);

  struct Edge {
    Point a, b;  // non-vertical: a.x < b.x; vertical: a.y < b.y
    bool vertical = false;
  };
  struct Trap {
    int slab = -1;
    int stack = -1;  // position within the slab, bottom to top
    int bot = -1, top = -1;  // edge ids
    int face = -1;
  };
  struct SideRecord {  // positive-length contact across a slab boundary
    int boundary;      // index into xs_
    int left_trap, right_trap;
    Rat lo, hi;
  };

  Rat edge_y_at(int e, const Rat& x) const;
  Point trap_rep(int t) const;
  void side_pieces(int t, bool right_side,
                   const std::vector<char>& in_component,
                   std::vector<std::pair<Point, Point>>* out) const;

  std::vector<Segment> segments_;
  std::vector<Rat> xs_;  // slab boundaries, ascending
  std::vector<Edge> edges_;
  std::vector<Trap> traps_;
  std::vector<std::vector<int>> slab_traps_;
  std::vector<SideRecord> records_;
  std::vector<std::vector<int>> records_by_left_;   // trap id -> record ids
  std::vector<std::vector<int>> records_by_right_;
  std::vector<ArrFace> faces_;
  std::vector<std::pair<int, int>> face_adjacency_;
};

/// Overlay of P's boundary, all polygon boundaries, and P's bounding
/// box. Throws ArrangementTooLarge when the face count exceeds the cap.
Arrangement build_arrangement(const PolygonWithHoles& p,
                              const std::vector<ConvexPolygon>& polys,
                              std::size_t face_cap = Arrangement::kDefaultFaceCap);

}  // namespace polycover
