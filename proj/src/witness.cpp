#include "polycover/witness.hpp"

#include <algorithm>
#include <set>

namespace polycover {

bool WitnessSet::add(const Witness& w) {
  for (const Witness& x : witnesses)
    if (x == w) return false;
  witnesses.push_back(w);
  return true;
}

Point normalize_direction(const Rat& dx, const Rat& dy) {
  Int k = lcm(dx.get_den(), dy.get_den());
  Int ix = dx.get_num() * (k / dx.get_den());
  Int iy = dy.get_num() * (k / dy.get_den());
  Int g = gcd(ix, iy);
  if (sgn(g) == 0) return Point(0, 0);
  return Point(Rat(ix / g), Rat(iy / g));
}

namespace {

int cross_sign(const Point& a, const Point& b) {
  return sgn(Rat(a.x * b.y - a.y * b.x));
}

}  // namespace

bool covers(const ConvexPolygon& c, const Witness& w) {
  Side s = point_in_convex(c, w.p);
  if (w.kind == WitnessKind::Plain) return s != Side::Outside;
  if (s == Side::Outside) return false;
  if (s == Side::Inside) return true;
  const auto& v = c.vertices();
  std::size_t n = v.size();
  for (std::size_t i = 0; i < n; i++) {
    if (v[i] == w.p) {
      // Corner: dir must lie in the closed cone spanned by the two
      // incident edge directions.
      Point to_next(v[(i + 1) % n].x - w.p.x, v[(i + 1) % n].y - w.p.y);
      Point to_prev(v[(i + n - 1) % n].x - w.p.x, v[(i + n - 1) % n].y - w.p.y);
      return cross_sign(to_next, w.dir) >= 0 && cross_sign(w.dir, to_prev) >= 0;
    }
  }
  for (std::size_t i = 0; i < n; i++) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (orientation(a, b, w.p) != Orient::Collinear) continue;
    // p on this edge's interior; covered iff dir does not point right.
    Point e(b.x - a.x, b.y - a.y);
    return cross_sign(e, w.dir) >= 0;
  }
  return false;  // unreachable for s == Boundary
}

WitnessSet arrangement_witnesses(const PolygonWithHoles& p,
                                 const std::vector<ConvexPolygon>& polys,
                                 std::size_t face_cap) {
  Arrangement arr = build_arrangement(p, polys, face_cap);
  WitnessSet ws;
  ws.origin = WitnessOrigin::Arrangement;
  for (const ArrFace& f : arr.faces())
    if (f.inside_p) ws.witnesses.push_back(Witness::plain(f.rep));
  return ws;
}

WitnessSet vertex_witnesses(const PolygonWithHoles& p,
                            const std::vector<ConvexPolygon>& polys,
                            std::size_t face_cap) {
  Arrangement arr = build_arrangement(p, polys, face_cap);
  std::set<int> cells;
  for (const Point& v : p.all_vertices())
    for (int f : arr.faces_touching(v))
      if (arr.faces()[f].inside_p) cells.insert(f);
  WitnessSet ws;
  ws.origin = WitnessOrigin::Vertex;
  for (int f : cells) ws.witnesses.push_back(Witness::plain(arr.faces()[f].rep));
  return ws;
}

namespace {

// d inside the closed CCW wedge from u to w (wedge may exceed 180°).
bool in_ccw_wedge(const Point& u, const Point& w, const Point& d) {
  int cuw = cross_sign(u, w);
  if (cuw > 0) return cross_sign(u, d) >= 0 && cross_sign(d, w) >= 0;
  if (cuw < 0) return !(cross_sign(w, d) > 0 && cross_sign(d, u) > 0);
  // u, w opposite (straight vertex): the closed half-plane left of u.
  return cross_sign(u, d) >= 0;
}

// CCW angle order around the vertex starting at ref.
// 0: parallel to ref; 1: (0,pi); 2: pi; 3: (pi,2pi).
int sector_of(const Point& ref, const Point& d) {
  int c = cross_sign(ref, d);
  if (c > 0) return 1;
  if (c < 0) return 3;
  return sgn(Rat(ref.x * d.x + ref.y * d.y)) > 0 ? 0 : 2;
}

// Canonical direction strictly inside the CCW gap from g to h (g != h).
Point gap_direction(const Point& g, const Point& h) {
  int c = cross_sign(g, h);
  if (c > 0) return normalize_direction(g.x + h.x, g.y + h.y);
  if (c == 0) return normalize_direction(-g.y, g.x);  // opposite: rotate left
  return normalize_direction(-(g.x + h.x), -(g.y + h.y));  // reflex gap
}

void witnesses_at_vertex(const std::vector<Point>& ring, std::size_t i,
                         const std::vector<ConvexPolygon>& polys, WitnessSet* ws) {
  std::size_t n = ring.size();
  const Point& v = ring[i];
  Point d_start = normalize_direction(ring[(i + 1) % n].x - v.x, ring[(i + 1) % n].y - v.y);
  Point d_end = normalize_direction(ring[(i + n - 1) % n].x - v.x,
                                    ring[(i + n - 1) % n].y - v.y);

  std::vector<Point> dirs{d_start, d_end};
  for (const ConvexPolygon& c : polys) {
    for (std::size_t e = 0; e < c.size(); e++) {
      Segment s = c.edge(e);
      if (s.a == v) {
        dirs.push_back(normalize_direction(s.b.x - v.x, s.b.y - v.y));
      } else if (s.b == v) {
        dirs.push_back(normalize_direction(s.a.x - v.x, s.a.y - v.y));
      } else if (orientation(s.a, s.b, v) == Orient::Collinear) {
        // v interior to the edge: split it at v.
        bool between;
        if (cmp(s.a.x, s.b.x) != 0)
          between = (cmp(v.x, s.a.x) > 0) != (cmp(v.x, s.b.x) > 0);
        else
          between = (cmp(v.y, s.a.y) > 0) != (cmp(v.y, s.b.y) > 0);
        if (between) {
          dirs.push_back(normalize_direction(s.a.x - v.x, s.a.y - v.y));
          dirs.push_back(normalize_direction(s.b.x - v.x, s.b.y - v.y));
        }
      }
    }
  }

  // Keep directions inside P's interior cone at v, ordered CCW from the
  // cone's start; the cone bounds themselves are the first and last.
  std::vector<Point> in_cone;
  for (const Point& d : dirs)
    if (in_ccw_wedge(d_start, d_end, d)) in_cone.push_back(d);
  std::sort(in_cone.begin(), in_cone.end(), [&](const Point& a, const Point& b) {
    int sa = sector_of(d_start, a);
    int sb = sector_of(d_start, b);
    if (sa != sb) return sa < sb;
    if (sa == 1 || sa == 3) return cross_sign(a, b) > 0;
    return false;
  });
  in_cone.erase(std::unique(in_cone.begin(), in_cone.end()), in_cone.end());

  // The cone bounds are always present, so there is at least one gap.
  for (std::size_t k = 0; k + 1 < in_cone.size(); k++)
    ws->add(Witness::directed(v, gap_direction(in_cone[k], in_cone[k + 1])));
}

}  // namespace

WitnessSet quick_vertex_witnesses(const PolygonWithHoles& p,
                                  const std::vector<ConvexPolygon>& polys) {
  WitnessSet ws;
  ws.origin = WitnessOrigin::QuickVertex;
  for (std::size_t i = 0; i < p.outer().size(); i++)
    witnesses_at_vertex(p.outer(), i, polys, &ws);
  for (const auto& hole : p.holes())
    for (std::size_t i = 0; i < hole.size(); i++)
      witnesses_at_vertex(hole, i, polys, &ws);
  return ws;
}

Json witness_set_to_json(const WitnessSet& ws) {
  Json j;
  switch (ws.origin) {
    case WitnessOrigin::Arrangement: j["origin"] = "arrangement"; break;
    case WitnessOrigin::Vertex: j["origin"] = "vertex"; break;
    case WitnessOrigin::QuickVertex: j["origin"] = "quick_vertex"; break;
    case WitnessOrigin::Generated: j["origin"] = "generated"; break;
  }
  Json arr = Json::array();
  for (const Witness& w : ws.witnesses) {
    Json e;
    e["point"] = json_from_point(w.p);
    if (w.kind == WitnessKind::Directed) e["dir"] = json_from_point(w.dir);
    arr.push_back(e);
  }
  j["witnesses"] = arr;
  return j;
}

WitnessSet witness_set_from_json(const Json& j) {
  WitnessSet ws;
  std::string origin = j.value("origin", "generated");
  if (origin == "arrangement") ws.origin = WitnessOrigin::Arrangement;
  else if (origin == "vertex") ws.origin = WitnessOrigin::Vertex;
  else if (origin == "quick_vertex") ws.origin = WitnessOrigin::QuickVertex;
  else ws.origin = WitnessOrigin::Generated;
  for (const Json& e : j.at("witnesses")) {
    Point p = point_from_json(e.at("point"));
    if (e.contains("dir"))
      ws.witnesses.push_back(Witness::directed(p, point_from_json(e.at("dir"))));
    else
      ws.witnesses.push_back(Witness::plain(p));
  }
  return ws;
}

}  // namespace polycover
