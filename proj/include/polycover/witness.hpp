#pragma once

/// Witness point sets and the coverage predicate. A directed witness
/// (p, dir) stands for the point p + eps*dir for infinitesimal eps > 0;
/// coverage is decided exactly through local cone membership, so no
/// numeric epsilon is ever chosen.

#include <vector>

#include "polycover/arrangement.hpp"
#include "polycover/geom.hpp"
#include "polycover/jsonio.hpp"

namespace polycover {

enum class WitnessKind { Plain, Directed };

struct Witness {
  WitnessKind kind = WitnessKind::Plain;
  Point p;
  Point dir;  // primitive integer direction; (0,0) for plain witnesses

  static Witness plain(Point q) { return {WitnessKind::Plain, std::move(q), Point(0, 0)}; }
  static Witness directed(Point q, Point d) {
    return {WitnessKind::Directed, std::move(q), std::move(d)};
  }
  bool operator==(const Witness& o) const {
    return kind == o.kind && p == o.p && dir == o.dir;
  }
};

struct WitnessLess {
  bool operator()(const Witness& a, const Witness& b) const {
    if (a.p != b.p) return lex_less(a.p, b.p);
    if (a.dir != b.dir) return lex_less(a.dir, b.dir);
    return a.kind < b.kind;
  }
};

enum class WitnessOrigin { Arrangement, Vertex, QuickVertex, Generated };

struct WitnessSet {
  std::vector<Witness> witnesses;
  WitnessOrigin origin = WitnessOrigin::Generated;

  /// Appends w unless an equal witness is present; true when added.
  bool add(const Witness& w);
  std::size_t size() const { return witnesses.size(); }
};

/// Scale a rational direction to the canonical primitive integer vector.
Point normalize_direction(const Rat& dx, const Rat& dy);

/// Plain: p in closed C. Directed: p in closed C and the ray p + eps*dir
/// stays in C for small eps (tangency along an edge counts as covered).
bool covers(const ConvexPolygon& c, const Witness& w);

/// One plain witness per inside-P face of the overlay of P and the
/// collection; covering all of them is equivalent to covering P.
WitnessSet arrangement_witnesses(const PolygonWithHoles& p,
                                 const std::vector<ConvexPolygon>& polys,
                                 std::size_t face_cap = Arrangement::kDefaultFaceCap);

/// One plain witness per inside-P face whose closure touches a vertex
/// of P, deduplicated across vertices sharing a face.
WitnessSet vertex_witnesses(const PolygonWithHoles& p,
                            const std::vector<ConvexPolygon>& polys,
                            std::size_t face_cap = Arrangement::kDefaultFaceCap);

/// Directed witnesses at every vertex of P, one per angular gap between
/// consecutive incident edge directions (from P and from collection
/// polygons, including edges passing through the vertex), without
/// building any arrangement. Zero-width gaps are skipped.
WitnessSet quick_vertex_witnesses(const PolygonWithHoles& p,
                                  const std::vector<ConvexPolygon>& polys);

Json witness_set_to_json(const WitnessSet& ws);
WitnessSet witness_set_from_json(const Json& j);

}  // namespace polycover
