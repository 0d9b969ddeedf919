#include "polycover/model.hpp"

#include <algorithm>

#include "polycover/pipeline.hpp"

namespace polycover {

namespace {

Json json_from_int(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw ParseError("bad integer string: " + j.dump());
    return v;
  }
  if (j.is_number_float())
    throw ParseError("floating-point coordinate not allowed: " + j.dump());
  throw ParseError("expected integer, got: " + j.dump());
}

}  // namespace

Json json_from_rat(const Rat& v) {
  if (cmp(v.get_den(), 1) == 0) return json_from_int(v.get_num());
  Json j;
  j["num"] = json_from_int(v.get_num());
  j["den"] = json_from_int(v.get_den());
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den"))
      throw ParseError("rational object needs num and den: " + j.dump());
    Int num = int_from_json(j.at("num"));
    Int den = int_from_json(j.at("den"));
    if (sgn(den) == 0) throw ParseError("zero denominator");
    Rat v(num, den);
    v.canonicalize();
    return v;
  }
  return Rat(int_from_json(j));
}

Json json_from_point(const Point& p) {
  Json j;
  j["x"] = json_from_rat(p.x);
  j["y"] = json_from_rat(p.y);
  return j;
}

Point point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y"))
    throw ParseError("point needs x and y: " + j.dump());
  return Point(rat_from_json(j.at("x")), rat_from_json(j.at("y")));
}

Json json_from_ring(const std::vector<Point>& ring) {
  Json j = Json::array();
  for (const Point& p : ring) j.push_back(json_from_point(p));
  return j;
}

std::vector<Point> ring_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("ring must be an array: " + j.dump());
  std::vector<Point> ring;
  for (const Json& p : j) ring.push_back(point_from_json(p));
  return ring;
}

namespace {

Json parse_json(const std::string& bytes) {
  Json j = Json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

}  // namespace

Instance parse_instance(const std::string& bytes) {
  Json j = parse_json(bytes);
  if (!j.is_object() || !j.contains("outer_boundary"))
    throw ParseError("instance needs an outer_boundary");
  if (j.contains("type") && j.at("type").get<std::string>() != "CGSHOP2023_Instance")
    throw ParseError("not a CGSHOP2023_Instance: " + j.at("type").dump());
  std::string name = j.value("name", "");
  std::vector<Point> outer = ring_from_json(j.at("outer_boundary"));
  std::vector<std::vector<Point>> holes;
  if (j.contains("holes"))
    for (const Json& h : j.at("holes")) holes.push_back(ring_from_json(h));
  Instance inst{PolygonWithHoles(std::move(outer), std::move(holes), name, true), name, 0};
  inst.n = inst.polygon.vertex_count();
  return inst;
}

std::string write_instance(const Instance& inst) {
  Json j;
  j["type"] = "CGSHOP2023_Instance";
  j["name"] = inst.name;
  j["n"] = inst.n;
  j["outer_boundary"] = json_from_ring(inst.polygon.outer());
  Json holes = Json::array();
  for (const auto& h : inst.polygon.holes()) holes.push_back(json_from_ring(h));
  j["holes"] = holes;
  return j.dump(2);
}

Solution Solution::from_convex(std::string instance_name,
                               const std::vector<ConvexPolygon>& polys, Meta meta) {
  Solution s;
  s.instance_name = std::move(instance_name);
  for (const ConvexPolygon& c : polys) s.polygons.push_back(c.vertices());
  s.meta = std::move(meta);
  return s;
}

Solution parse_solution(const std::string& bytes) {
  Json j = parse_json(bytes);
  if (!j.is_object() || !j.contains("polygons"))
    throw ParseError("solution needs polygons");
  if (j.contains("type") && j.at("type").get<std::string>() != "CGSHOP2023_Solution")
    throw ParseError("not a CGSHOP2023_Solution: " + j.at("type").dump());
  Solution s;
  s.instance_name = j.value("instance", "");
  for (const Json& p : j.at("polygons")) s.polygons.push_back(ring_from_json(p));
  if (j.contains("meta")) {
    const Json& m = j.at("meta");
    s.meta.method = m.value("method", "");
    s.meta.solver = m.value("solver", "");
    s.meta.seed = m.value("seed", std::uint64_t(0));
    s.meta.iterations = m.value("iterations", std::size_t(0));
  }
  return s;
}

std::string write_solution(const Solution& sol) {
  Json j;
  j["type"] = "CGSHOP2023_Solution";
  j["instance"] = sol.instance_name;
  Json polys = Json::array();
  for (const auto& ring : sol.polygons) polys.push_back(json_from_ring(ring));
  j["polygons"] = polys;
  Json m;
  m["method"] = sol.meta.method;
  m["solver"] = sol.meta.solver;
  m["seed"] = sol.meta.seed;
  m["iterations"] = sol.meta.iterations;
  j["meta"] = m;
  return j.dump(2);
}

bool ring_convex(const std::vector<Point>& ring) {
  std::vector<Point> r;
  for (const Point& p : ring)
    if (r.empty() || !(r.back() == p)) r.push_back(p);
  while (r.size() > 1 && r.front() == r.back()) r.pop_back();
  if (r.size() < 3) return false;
  int area_sign = sgn(ring_area2(r));
  if (area_sign == 0) return false;
  if (area_sign < 0) std::reverse(r.begin(), r.end());
  std::size_t n = r.size();
  for (std::size_t i = 0; i < n; i++) {
    Orient o = orientation(r[i], r[(i + 1) % n], r[(i + 2) % n]);
    if (o == Orient::Right) return false;
    if (o == Orient::Collinear) {
      // Straight continuation is fine; a fold-back is not.
      Rat dot = (r[(i + 1) % n].x - r[i].x) * (r[(i + 2) % n].x - r[(i + 1) % n].x) +
                (r[(i + 1) % n].y - r[i].y) * (r[(i + 2) % n].y - r[(i + 1) % n].y);
      if (sgn(dot) <= 0) return false;
    }
  }
  // All turns left for a positive-area closed ring: convex, and the ring
  // winds exactly once, so it is simple as well.
  return true;
}

ConvexPolygon convex_from_ring(const std::vector<Point>& ring) {
  return ConvexPolygon::hull_of(ring, false);
}

VerificationReport verify(const Instance& inst, const Solution& sol) {
  VerificationReport rep;
  rep.size = sol.polygons.size();
  rep.convexity_ok = !sol.polygons.empty();
  for (const auto& ring : sol.polygons)
    if (!ring_convex(ring)) rep.convexity_ok = false;
  if (!rep.convexity_ok) return rep;

  std::vector<ConvexPolygon> polys;
  polys.reserve(sol.polygons.size());
  for (const auto& ring : sol.polygons) polys.push_back(convex_from_ring(ring));

  rep.containment_ok = true;
  for (const ConvexPolygon& c : polys)
    if (!convex_in_pwh(inst.polygon, c)) rep.containment_ok = false;

  UncoveredRegion uncovered = uncovered_region(inst.polygon, polys);
  rep.uncovered_components = uncovered.components.size();
  rep.coverage_ok = uncovered.components.empty();
  return rep;
}

}  // namespace polycover
