#pragma once

/// Phase 1: build a collection of large convex polygons inside P, by
/// modified Bron-Kerbosch enumeration of S-maximal convex polygons
/// and/or triangulation seeding with randomized bloating.

#include <cstdint>
#include <string>
#include <vector>

#include "polycover/geom.hpp"
#include "polycover/jsonio.hpp"
#include "polycover/rng.hpp"

namespace polycover {

enum class PointSetKind { V, VS1, VS2 };

/// Candidate sources for one bloating round. V uses a fixed point list
/// supplied by the caller; S1OfC / S2OfC are recomputed from the
/// current polygon's edges.
enum class BloatSource { V, S1OfC, S2OfC };

enum class CollectionMethod { BronKerbosch, Triangulation };

struct CollectionConfig {
  CollectionMethod method = CollectionMethod::Triangulation;
  std::size_t replication = 1;  // copies per triangle (triangulation method)
  std::vector<BloatSource> rounds;  // extra bloating after the seed step
  std::uint64_t seed = 0;
  std::size_t max_polygons = 200000;
  std::int64_t time_budget_ms = 60000;
  bool recompute_candidates = true;  // refresh S1(C)/S2(C) after each accept
};

struct Collection {
  std::vector<ConvexPolygon> polygons;  // deduplicated, canonical order
  std::string method;
  std::uint64_t seed = 0;
  std::size_t replication = 1;
  std::vector<std::string> rounds;
  bool truncated = false;
};

/// Candidate point sets: V (ring vertices), V ∪ S1 (endpoints of the
/// maximal in-P extension of every edge), V ∪ S2 (in-P intersections of
/// the supporting lines of every edge pair). Deduplicated; points
/// outside closed P dropped.
std::vector<Point> point_set(const PolygonWithHoles& p, PointSetKind kind);

/// S1(C): endpoints of the maximal in-P extension of each edge of C.
std::vector<Point> s1_of_c(const PolygonWithHoles& p, const ConvexPolygon& c);

/// S2(C): S1(C) plus in-P intersections of the supporting lines of C's
/// edge pairs.
std::vector<Point> s2_of_c(const PolygonWithHoles& p, const ConvexPolygon& c);

bool visibility_adjacent(const PolygonWithHoles& p, const Point& u, const Point& v);

/// Classic Bron-Kerbosch over an adjacency matrix, no pivoting;
/// vertices scanned in input order. Every maximal clique exactly once.
std::vector<std::vector<int>> bron_kerbosch_cliques(const std::vector<std::vector<char>>& adj);

struct EnumerationLimits {
  std::size_t max_polygons = 200000;
  std::int64_t time_budget_ms = 60000;
};

struct EnumerationResult {
  std::vector<ConvexPolygon> polygons;  // deduplicated hulls, canonical order
  bool truncated = false;
};

/// All S-maximal convex polygons of P: the geometric Bron-Kerbosch
/// variant whose candidate filter is conv(R ∪ {u,v}) ⊆ P. Distinct
/// cliques may share a hull through collinear members; the result is
/// deduplicated by hull vertex list. `use_prune` controls the
/// X ∩ conv(R) ≠ ∅ cutoff, which changes performance but not output.
EnumerationResult enumerate_maximal_convex(const PolygonWithHoles& p,
                                           const std::vector<Point>& s,
                                           EnumerationLimits limits = {},
                                           bool use_prune = true);

/// Randomized growth: repeatedly try to absorb a candidate point and
/// re-hull, keeping the polygon inside P. The result is source-maximal:
/// when the loop stops, no candidate from the final recomputed set is
/// addable. `fixed_points` feeds the V source.
ConvexPolygon bloat(const PolygonWithHoles& p, ConvexPolygon c, BloatSource source,
                    Rng& rng, const std::vector<Point>& fixed_points = {},
                    bool recompute = true);

/// Exact triangulation of P with vertices drawn from P's vertices:
/// holes are merged in with bridges, the merged ring is ear-clipped,
/// and a flip pass moves the result toward constrained Delaunay.
std::vector<ConvexPolygon> triangulate(const PolygonWithHoles& p);

Collection build_collection(const PolygonWithHoles& p, const CollectionConfig& cfg);

Json collection_to_json(const Collection& col, const std::string& instance_name);
Collection collection_from_json(const Json& j);

}  // namespace polycover
