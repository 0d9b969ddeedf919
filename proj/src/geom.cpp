#include "polycover/geom.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <set>

namespace polycover {

bool lex_less(const Point& a, const Point& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

namespace {

// Integer fast path: coordinate is an integer with |v| < 2^30, so the
// cross product of differences fits in int64 without overflow.
bool small_int(const Rat& v, std::int64_t* out) {
  if (mpz_cmp_ui(mpq_denref(v.get_mpq_t()), 1) != 0) return false;
  const mpz_srcptr num = mpq_numref(v.get_mpq_t());
  if (!mpz_fits_slong_p(num)) return false;
  long n = mpz_get_si(num);
  if (n >= (1L << 30) || n <= -(1L << 30)) return false;
  *out = n;
  return true;
}

// Rational fast path: |num| and den below 2^15, so the fully
// cross-multiplied 2x2 determinant stays under 2^125.
bool small_rat(const Rat& v, std::int64_t* num, std::int64_t* den) {
  const mpz_srcptr n = mpq_numref(v.get_mpq_t());
  const mpz_srcptr d = mpq_denref(v.get_mpq_t());
  if (!mpz_fits_slong_p(n) || !mpz_fits_slong_p(d)) return false;
  long nn = mpz_get_si(n), dd = mpz_get_si(d);
  if (nn >= (1L << 15) || nn <= -(1L << 15) || dd >= (1L << 15)) return false;
  *num = nn;
  *den = dd;
  return true;
}

struct Frac {
  std::int64_t n, d;  // d > 0
};

// a/b - c/d as an exact fraction of int64 (inputs < 2^15, so no overflow).
Frac sub(const Frac& a, const Frac& b) {
  return {a.n * b.d - b.n * a.d, a.d * b.d};
}

}  // namespace

Orient orientation(const Point& p, const Point& q, const Point& r) {
  std::int64_t px, py, qx, qy, rx, ry;
  if (small_int(p.x, &px) && small_int(p.y, &py) && small_int(q.x, &qx) &&
      small_int(q.y, &qy) && small_int(r.x, &rx) && small_int(r.y, &ry)) {
    std::int64_t det = (qx - px) * (ry - py) - (qy - py) * (rx - px);
    if (det > 0) return Orient::Left;
    if (det < 0) return Orient::Right;
    return Orient::Collinear;
  }
  Frac fpx, fpy, fqx, fqy, frx, fry;
  if (small_rat(p.x, &fpx.n, &fpx.d) && small_rat(p.y, &fpy.n, &fpy.d) &&
      small_rat(q.x, &fqx.n, &fqx.d) && small_rat(q.y, &fqy.n, &fqy.d) &&
      small_rat(r.x, &frx.n, &frx.d) && small_rat(r.y, &fry.n, &fry.d)) {
    Frac ax = sub(fqx, fpx), ay = sub(fqy, fpy);
    Frac bx = sub(frx, fpx), by = sub(fry, fpy);
    // sign of ax*by - ay*bx; numerators < 2^31, denominators < 2^30.
    __int128 lhs = static_cast<__int128>(ax.n) * by.n * ay.d * bx.d;
    __int128 rhs = static_cast<__int128>(ay.n) * bx.n * ax.d * by.d;
    if (lhs > rhs) return Orient::Left;
    if (lhs < rhs) return Orient::Right;
    return Orient::Collinear;
  }
  Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  int s = sgn(det);
  if (s > 0) return Orient::Left;
  if (s < 0) return Orient::Right;
  return Orient::Collinear;
}

Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

namespace {

std::vector<Point> dedup_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), PointLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Monotone chain; returns the strictly convex CCW hull, or fewer than 3
// points when the input is degenerate (all equal / all collinear, in
// which case the two extreme points are returned).
std::vector<Point> monotone_chain(std::vector<Point> pts) {
  pts = dedup_points(std::move(pts));
  std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Point> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; i++) {
    while (k >= 2 && orientation(h[k - 2], h[k - 1], pts[i]) != Orient::Left) k--;
    h[k++] = pts[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && orientation(h[k - 2], h[k - 1], pts[i]) != Orient::Left) k--;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // last point equals the first
  if (h.size() < 3) h.resize(std::min<std::size_t>(h.size(), 2));
  return h;
}

std::vector<Point> rotate_to_lex_min(std::vector<Point> v) {
  auto it = std::min_element(v.begin(), v.end(), PointLess{});
  std::rotate(v.begin(), it, v.end());
  return v;
}

}  // namespace

ConvexPolygon ConvexPolygon::hull_of(std::vector<Point> pts, bool keep_generators) {
  std::vector<Point> gens = dedup_points(pts);
  std::vector<Point> h = monotone_chain(std::move(pts));
  if (h.size() < 3)
    throw DegenerateHull("convex hull needs 3 non-collinear points, got " +
                         std::to_string(h.size()) + " extreme point(s)");
  ConvexPolygon c;
  c.verts_ = rotate_to_lex_min(std::move(h));
  if (keep_generators) c.gens_ = std::move(gens);
  return c;
}

ConvexPolygon ConvexPolygon::from_normalized(std::vector<Point> verts) {
  assert(verts.size() >= 3);
  ConvexPolygon c;
  c.verts_ = rotate_to_lex_min(std::move(verts));
  return c;
}

Point ConvexPolygon::centroid() const {
  Rat sx = 0, sy = 0;
  for (const Point& v : verts_) {
    sx += v.x;
    sy += v.y;
  }
  Rat n(static_cast<unsigned long>(verts_.size()));
  return Point(sx / n, sy / n);
}

Rat ConvexPolygon::area2() const { return ring_area2(verts_); }

bool ConvexPolygonLess::operator()(const ConvexPolygon& a, const ConvexPolygon& b) const {
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  if (va.size() != vb.size()) return va.size() < vb.size();
  for (std::size_t i = 0; i < va.size(); i++) {
    if (va[i] != vb[i]) return lex_less(va[i], vb[i]);
  }
  return false;
}

Side point_in_convex(const ConvexPolygon& c, const Point& p) {
  bool on_boundary = false;
  const auto& v = c.vertices();
  std::size_t n = v.size();
  for (std::size_t i = 0; i < n; i++) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    Orient o = orientation(a, b, p);
    if (o == Orient::Right) return Side::Outside;
    if (o == Orient::Collinear) on_boundary = true;
  }
  // Collinear with some edge and right of none: for a strictly convex
  // polygon the point lies on that edge.
  return on_boundary ? Side::Boundary : Side::Inside;
}

Rat ring_area2(const std::vector<Point>& ring) {
  Rat s = 0;
  std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; i++) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

namespace {

bool point_on_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != Orient::Collinear) return false;
  if (cmp(a.x, b.x) != 0)
    return (cmp(p.x, a.x) >= 0 && cmp(p.x, b.x) <= 0) ||
           (cmp(p.x, b.x) >= 0 && cmp(p.x, a.x) <= 0);
  return (cmp(p.y, a.y) >= 0 && cmp(p.y, b.y) <= 0) ||
         (cmp(p.y, b.y) >= 0 && cmp(p.y, a.y) <= 0);
}

// True iff open segments properly cross (single interior point each).
bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  Orient o1 = orientation(a, b, c);
  Orient o2 = orientation(a, b, d);
  Orient o3 = orientation(c, d, a);
  Orient o4 = orientation(c, d, b);
  return o1 != o2 && o3 != o4 && o1 != Orient::Collinear && o2 != Orient::Collinear &&
         o3 != Orient::Collinear && o4 != Orient::Collinear;
}

void validate_ring(const std::vector<Point>& ring, const std::string& what) {
  std::size_t n = ring.size();
  if (n < 3) throw InvalidPolygon(what + ": ring has fewer than 3 vertices");
  for (std::size_t i = 0; i < n; i++)
    for (std::size_t j = i + 1; j < n; j++)
      if (ring[i] == ring[j])
        throw InvalidPolygon(what + ": ring repeats a vertex");
  if (sgn(ring_area2(ring)) == 0)
    throw InvalidPolygon(what + ": ring has zero area");
  // Simplicity: non-adjacent edges may not intersect at all; adjacent
  // edges share exactly their common endpoint.
  for (std::size_t i = 0; i < n; i++) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; j++) {
      const Point& c = ring[j];
      const Point& d = ring[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;  // spikes are caught below
      if (proper_cross(a, b, c, d))
        throw InvalidPolygon(what + ": ring self-intersects");
      if (point_on_segment(a, b, c) || point_on_segment(a, b, d) ||
          point_on_segment(c, d, a) || point_on_segment(c, d, b))
        throw InvalidPolygon(what + ": ring touches itself");
    }
  }
  // Zero-angle spikes at a vertex: the ring folds straight back.
  for (std::size_t i = 0; i < n; i++) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    const Point& c = ring[(i + 2) % n];
    if (orientation(a, b, c) == Orient::Collinear) {
      Rat dot = (a.x - b.x) * (c.x - b.x) + (a.y - b.y) * (c.y - b.y);
      if (sgn(dot) > 0) throw InvalidPolygon(what + ": ring folds back on itself");
    }
  }
}

}  // namespace

PolygonWithHoles::PolygonWithHoles(std::vector<Point> outer,
                                   std::vector<std::vector<Point>> holes,
                                   std::string name, bool validate)
    : outer_(std::move(outer)), holes_(std::move(holes)), name_(std::move(name)) {
  if (validate) {
    validate_ring(outer_, "outer");
    for (const auto& h : holes_) validate_ring(h, "hole");
  }
  if (sgn(ring_area2(outer_)) < 0) std::reverse(outer_.begin(), outer_.end());
  for (auto& h : holes_)
    if (sgn(ring_area2(h)) > 0) std::reverse(h.begin(), h.end());
  if (validate) {
    for (std::size_t hi = 0; hi < holes_.size(); hi++) {
      for (const Point& v : holes_[hi])
        if (point_in_ring(outer_, v) != Side::Inside)
          throw InvalidPolygon("hole not strictly inside outer ring");
      for (std::size_t hj = hi + 1; hj < holes_.size(); hj++) {
        for (const Point& v : holes_[hj])
          if (point_in_ring(holes_[hi], v) != Side::Outside)
            throw InvalidPolygon("holes overlap or touch");
        for (const Point& v : holes_[hi])
          if (point_in_ring(holes_[hj], v) != Side::Outside)
            throw InvalidPolygon("holes overlap or touch");
        for (std::size_t i = 0; i < holes_[hi].size(); i++)
          for (std::size_t j = 0; j < holes_[hj].size(); j++)
            if (proper_cross(holes_[hi][i], holes_[hi][(i + 1) % holes_[hi].size()],
                             holes_[hj][j], holes_[hj][(j + 1) % holes_[hj].size()]))
              throw InvalidPolygon("holes overlap");
      }
      for (std::size_t i = 0; i < holes_[hi].size(); i++)
        for (std::size_t j = 0; j < outer_.size(); j++)
          if (proper_cross(holes_[hi][i], holes_[hi][(i + 1) % holes_[hi].size()],
                           outer_[j], outer_[(j + 1) % outer_.size()]))
            throw InvalidPolygon("hole crosses outer ring");
    }
  }
  auto add_ring = [this](const std::vector<Point>& ring) {
    for (std::size_t i = 0; i < ring.size(); i++)
      edges_.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
  };
  add_ring(outer_);
  for (const auto& h : holes_) add_ring(h);
}

std::size_t PolygonWithHoles::vertex_count() const {
  std::size_t n = outer_.size();
  for (const auto& h : holes_) n += h.size();
  return n;
}

std::vector<Point> PolygonWithHoles::all_vertices() const {
  std::vector<Point> v = outer_;
  for (const auto& h : holes_) v.insert(v.end(), h.begin(), h.end());
  return v;
}


std::pair<Point, Point> PolygonWithHoles::bbox() const {
  Point lo = outer_[0], hi = outer_[0];
  for (const Point& v : outer_) {
    if (cmp(v.x, lo.x) < 0) lo.x = v.x;
    if (cmp(v.y, lo.y) < 0) lo.y = v.y;
    if (cmp(v.x, hi.x) > 0) hi.x = v.x;
    if (cmp(v.y, hi.y) > 0) hi.y = v.y;
  }
  return {lo, hi};
}

Side point_in_ring(const std::vector<Point>& ring, const Point& p) {
  std::size_t n = ring.size();
  for (const Point& v : ring)
    if (v == p) return Side::Boundary;
  bool inside = false;
  for (std::size_t i = 0; i < n; i++) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    bool a_below = cmp(a.y, p.y) <= 0;
    bool b_below = cmp(b.y, p.y) <= 0;
    if (a_below == b_below) {
      // With vertices handled above, the only same-side edges that can
      // still contain p are horizontal ones at p's height.
      if (a_below && cmp(a.y, p.y) == 0 && cmp(b.y, p.y) == 0 &&
          point_on_segment(a, b, p))
        return Side::Boundary;
      continue;
    }
    // The edge spans p's horizontal line. For an upward edge the
    // crossing lies right of p iff p is left of the edge; for a
    // downward edge iff p is right of it.
    Orient o = orientation(a, b, p);
    if (o == Orient::Collinear) return Side::Boundary;  // p on the edge
    if (a_below) {
      if (o == Orient::Left) inside = !inside;  // upward edge
    } else {
      if (o == Orient::Right) inside = !inside;  // downward edge
    }
  }
  return inside ? Side::Inside : Side::Outside;
}

Side point_in_pwh(const PolygonWithHoles& p, const Point& s) {
  Side outer = point_in_ring(p.outer(), s);
  if (outer != Side::Inside) return outer;
  for (const auto& h : p.holes()) {
    Side hs = point_in_ring(h, s);
    if (hs == Side::Boundary) return Side::Boundary;
    if (hs == Side::Inside) return Side::Outside;
  }
  return Side::Inside;
}

namespace {

// Parameters t in [0,1] where segment s meets a ring edge, including
// collinear-overlap endpoints.
void collect_edge_params(const Segment& s, const Segment& e, std::vector<Rat>* ts) {
  Rat d1x = s.b.x - s.a.x, d1y = s.b.y - s.a.y;
  Rat d2x = e.b.x - e.a.x, d2y = e.b.y - e.a.y;
  Rat denom = d1x * d2y - d1y * d2x;
  Rat wx = e.a.x - s.a.x, wy = e.a.y - s.a.y;
  if (sgn(denom) != 0) {
    Rat t = (wx * d2y - wy * d2x) / denom;
    Rat u = (wx * d1y - wy * d1x) / denom;
    if (sgn(t) >= 0 && cmp(t, 1) <= 0 && sgn(u) >= 0 && cmp(u, 1) <= 0)
      ts->push_back(t);
    return;
  }
  if (sgn(wx * d1y - wy * d1x) != 0) return;  // parallel, not collinear
  // Collinear: project e's endpoints onto s.
  auto param_of = [&](const Point& q) -> Rat {
    if (sgn(d1x) != 0) return (q.x - s.a.x) / d1x;
    return (q.y - s.a.y) / d1y;
  };
  for (const Point* q : {&e.a, &e.b}) {
    Rat t = param_of(*q);
    if (sgn(t) >= 0 && cmp(t, 1) <= 0) ts->push_back(t);
  }
}

Point at_param(const Segment& s, const Rat& t) {
  return Point(s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y));
}

}  // namespace

bool segment_in_pwh(const PolygonWithHoles& p, const Segment& s) {
  if (s.a == s.b) return point_in_pwh(p, s.a) != Side::Outside;
  // Orientation prefilter: a proper crossing of any ring edge means s
  // leaves closed P; only edges that touch s (some collinear
  // configuration) need exact split parameters.
  const std::vector<Segment>& edges = p.ring_edges();
  std::vector<const Segment*> touching;
  for (const Segment& e : edges) {
    Orient o1 = orientation(s.a, s.b, e.a);
    Orient o2 = orientation(s.a, s.b, e.b);
    if (o1 == o2 && o1 != Orient::Collinear) continue;  // e strictly one side
    Orient o3 = orientation(e.a, e.b, s.a);
    Orient o4 = orientation(e.a, e.b, s.b);
    bool any_col = o1 == Orient::Collinear || o2 == Orient::Collinear ||
                   o3 == Orient::Collinear || o4 == Orient::Collinear;
    if (!any_col) {
      if (o1 != o2 && o3 != o4) return false;
      continue;
    }
    touching.push_back(&e);
  }
  std::vector<Rat> ts;
  ts.push_back(0);
  ts.push_back(1);
  for (const Segment* e : touching) collect_edge_params(s, *e, &ts);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); i++) {
    Rat mid = (ts[i] + ts[i + 1]) / 2;
    if (point_in_pwh(p, at_param(s, mid)) == Side::Outside) return false;
  }
  return true;
}

namespace {

// True iff some point of segment e lies strictly inside c. Clips e
// against every edge half-plane and checks the midpoint of what is left.
bool segment_enters_convex(const ConvexPolygon& c, const Segment& e) {
  // When all of c lies in one closed half-plane of line(e), e can touch
  // c's boundary at most.
  bool left = false, right = false;
  for (const Point& v : c.vertices()) {
    Orient o = orientation(e.a, e.b, v);
    if (o == Orient::Left) left = true;
    else if (o == Orient::Right) right = true;
  }
  if (!left || !right) return false;
  if (point_in_convex(c, e.a) == Side::Inside) return true;
  if (point_in_convex(c, e.b) == Side::Inside) return true;
  Rat t0 = 0, t1 = 1;
  const auto& v = c.vertices();
  std::size_t n = v.size();
  Rat dx = e.b.x - e.a.x, dy = e.b.y - e.a.y;
  for (std::size_t i = 0; i < n; i++) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    // signed(t) = cross(b-a, e(t)-a); inside half-plane when >= 0.
    Rat ex = b.x - a.x, ey = b.y - a.y;
    Rat f0 = ex * (e.a.y - a.y) - ey * (e.a.x - a.x);
    Rat df = ex * dy - ey * dx;
    if (sgn(df) == 0) {
      if (sgn(f0) < 0) return false;  // entirely outside this half-plane
      continue;
    }
    Rat tc = -f0 / df;
    if (sgn(df) > 0) {
      if (cmp(tc, t0) > 0) t0 = tc;
    } else {
      if (cmp(tc, t1) < 0) t1 = tc;
    }
    if (cmp(t0, t1) >= 0) return false;
  }
  Rat mid = (t0 + t1) / 2;
  return point_in_convex(c, at_param(e, mid)) == Side::Inside;
}

}  // namespace

bool convex_in_pwh(const PolygonWithHoles& p, const ConvexPolygon& c) {
  for (std::size_t i = 0; i < c.size(); i++)
    if (!segment_in_pwh(p, c.edge(i))) return false;
  if (point_in_pwh(p, c.centroid()) != Side::Inside) return false;
  // No ring edge may pass through C's interior; this catches holes
  // swallowed whole as well as rings slicing through C with all
  // crossing points on C's boundary.
  for (const Segment& e : p.ring_edges())
    if (segment_enters_convex(c, e)) return false;
  return true;
}

bool hull_in_pwh(const PolygonWithHoles& p, const std::vector<Point>& pts) {
  if (pts.empty()) return true;
  std::vector<Point> uniq = pts;
  std::sort(uniq.begin(), uniq.end(), PointLess{});
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() == 1) return point_in_pwh(p, uniq[0]) != Side::Outside;
  bool collinear = true;
  for (std::size_t i = 2; i < uniq.size() && collinear; i++)
    collinear = orientation(uniq[0], uniq[1], uniq[i]) == Orient::Collinear;
  if (collinear) {
    // Extreme points are the lexicographic extremes (points are sorted).
    return segment_in_pwh(p, Segment(uniq.front(), uniq.back()));
  }
  return convex_in_pwh(p, ConvexPolygon::hull_of(uniq, false));
}

Segment extend_segment(const PolygonWithHoles& p, const Segment& s) {
  Rat dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  std::vector<Rat> ts;
  ts.push_back(0);
  ts.push_back(1);
  auto param_of = [&](const Point& q) -> Rat {
    if (sgn(dx) != 0) return (q.x - s.a.x) / dx;
    return (q.y - s.a.y) / dy;
  };
  for (const Segment& e : p.ring_edges()) {
    Rat d2x = e.b.x - e.a.x, d2y = e.b.y - e.a.y;
    Rat denom = dx * d2y - dy * d2x;
    Rat wx = e.a.x - s.a.x, wy = e.a.y - s.a.y;
    if (sgn(denom) != 0) {
      Rat u = (wx * dy - wy * dx) / denom;
      if (sgn(u) >= 0 && cmp(u, 1) <= 0)
        ts.push_back((wx * d2y - wy * d2x) / denom);
    } else if (sgn(wx * dy - wy * dx) == 0) {
      ts.push_back(param_of(e.a));
      ts.push_back(param_of(e.b));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  auto inside = [&](std::size_t i) {
    Rat mid = (ts[i] + ts[i + 1]) / 2;
    return point_in_pwh(p, at_param(s, mid)) != Side::Outside;
  };
  std::size_t i1 = std::lower_bound(ts.begin(), ts.end(), Rat(1)) - ts.begin();
  std::size_t i0 = std::lower_bound(ts.begin(), ts.end(), Rat(0)) - ts.begin();
  std::size_t hi = i1;
  while (hi + 1 < ts.size() && inside(hi)) hi++;
  std::size_t lo = i0;
  while (lo > 0 && inside(lo - 1)) lo--;
  return Segment(at_param(s, ts[lo]), at_param(s, ts[hi]));
}

std::optional<Point> line_intersection(const Segment& l1, const Segment& l2) {
  Rat d1x = l1.b.x - l1.a.x, d1y = l1.b.y - l1.a.y;
  Rat d2x = l2.b.x - l2.a.x, d2y = l2.b.y - l2.a.y;
  Rat denom = d1x * d2y - d1y * d2x;
  if (sgn(denom) == 0) return std::nullopt;
  Rat wx = l2.a.x - l1.a.x, wy = l2.a.y - l1.a.y;
  Rat t = (wx * d2y - wy * d2x) / denom;
  return Point(l1.a.x + t * d1x, l1.a.y + t * d1y);
}

}  // namespace polycover
