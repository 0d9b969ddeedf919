#pragma once

/// Instance/solution data model, CG:SHOP 2023 JSON formats, verifier.

#include <string>
#include <vector>

#include "polycover/geom.hpp"
#include "polycover/jsonio.hpp"

namespace polycover {

struct Instance {
  PolygonWithHoles polygon;
  std::string name;
  std::size_t n = 0;  // |outer| + sum of |hole|
};

/// Provenance of a solution or collection.
struct Meta {
  std::string method;      // collection method or solver chain
  std::string solver;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
};

/// Solution polygons are kept as raw rings so the verifier can report
/// convexity failures instead of rejecting them at parse time.
struct Solution {
  std::string instance_name;
  std::vector<std::vector<Point>> polygons;
  Meta meta;

  static Solution from_convex(std::string instance_name,
                              const std::vector<ConvexPolygon>& polys, Meta meta = {});
  std::size_t size() const { return polygons.size(); }
};

struct VerificationReport {
  bool convexity_ok = false;
  bool containment_ok = false;
  bool coverage_ok = false;
  std::size_t uncovered_components = 0;
  std::size_t size = 0;

  bool all_ok() const { return convexity_ok && containment_ok && coverage_ok; }
};

Instance parse_instance(const std::string& bytes);
std::string write_instance(const Instance& inst);

Solution parse_solution(const std::string& bytes);
std::string write_solution(const Solution& sol);

/// Region convexity of a raw ring: simple, positive area, no reflex
/// turn after orientation normalization. Collinear vertices are allowed
/// (the region is still convex); fold-backs and bowties are not.
bool ring_convex(const std::vector<Point>& ring);

/// Normalize a raw convex ring into a ConvexPolygon. Precondition:
/// ring_convex(ring).
ConvexPolygon convex_from_ring(const std::vector<Point>& ring);

/// All checks exact; failures are report fields, not errors.
VerificationReport verify(const Instance& inst, const Solution& sol);

}  // namespace polycover
