#include "polycover/collect.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <set>

namespace polycover {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Point> dedup_in_p(const PolygonWithHoles& p, std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), PointLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.erase(std::remove_if(pts.begin(), pts.end(),
                           [&](const Point& q) {
                             return point_in_pwh(p, q) == Side::Outside;
                           }),
            pts.end());
  return pts;
}

}  // namespace

std::vector<Point> point_set(const PolygonWithHoles& p, PointSetKind kind) {
  std::vector<Point> pts = p.all_vertices();
  if (kind == PointSetKind::VS1) {
    for (const Segment& e : p.ring_edges()) {
      Segment ext = extend_segment(p, e);
      pts.push_back(ext.a);
      pts.push_back(ext.b);
    }
  } else if (kind == PointSetKind::VS2) {
    std::vector<Segment> edges = p.ring_edges();
    for (std::size_t i = 0; i < edges.size(); i++)
      for (std::size_t j = i + 1; j < edges.size(); j++)
        if (auto q = line_intersection(edges[i], edges[j])) pts.push_back(*q);
  }
  return dedup_in_p(p, std::move(pts));
}

std::vector<Point> s1_of_c(const PolygonWithHoles& p, const ConvexPolygon& c) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < c.size(); i++) {
    Segment ext = extend_segment(p, c.edge(i));
    pts.push_back(ext.a);
    pts.push_back(ext.b);
  }
  return dedup_in_p(p, std::move(pts));
}

std::vector<Point> s2_of_c(const PolygonWithHoles& p, const ConvexPolygon& c) {
  std::vector<Point> pts = s1_of_c(p, c);
  for (std::size_t i = 0; i < c.size(); i++)
    for (std::size_t j = i + 1; j < c.size(); j++)
      if (auto q = line_intersection(c.edge(i), c.edge(j))) pts.push_back(*q);
  return dedup_in_p(p, std::move(pts));
}

bool visibility_adjacent(const PolygonWithHoles& p, const Point& u, const Point& v) {
  return segment_in_pwh(p, Segment(u, v));
}

namespace {

void bk_classic(const std::vector<std::vector<char>>& adj, std::vector<int>& r,
                std::vector<int> s, std::vector<int> x,
                std::vector<std::vector<int>>* out) {
  if (s.empty() && x.empty()) {
    out->push_back(r);
    return;
  }
  std::size_t k = 0;
  while (k < s.size()) {
    int v = s[k];
    std::vector<int> s2, x2;
    for (std::size_t i = k + 1; i < s.size(); i++)
      if (adj[v][s[i]]) s2.push_back(s[i]);
    for (int u : x)
      if (adj[v][u]) x2.push_back(u);
    r.push_back(v);
    bk_classic(adj, r, std::move(s2), std::move(x2), out);
    r.pop_back();
    x.push_back(v);
    k++;
  }
}

}  // namespace

std::vector<std::vector<int>> bron_kerbosch_cliques(const std::vector<std::vector<char>>& adj) {
  std::vector<int> all(adj.size());
  for (std::size_t i = 0; i < adj.size(); i++) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  bk_classic(adj, r, std::move(all), {}, &out);
  return out;
}

namespace {

// Hull of the points as a vertex list; size 1 and 2 results stand for a
// point and a segment (degenerate "hulls" that Listing 2's recursion
// passes through before R gains area).
std::vector<Point> loose_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), PointLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  bool collinear = true;
  for (std::size_t i = 2; i < pts.size() && collinear; i++)
    collinear = orientation(pts[0], pts[1], pts[i]) == Orient::Collinear;
  if (collinear) return {pts.front(), pts.back()};
  return ConvexPolygon::hull_of(std::move(pts), false).vertices();
}

// p in conv(hull) for possibly degenerate hulls (point / segment).
bool in_loose_hull(const std::vector<Point>& hull, const Point& q) {
  if (hull.size() == 1) return hull[0] == q;
  if (hull.size() == 2) {
    if (orientation(hull[0], hull[1], q) != Orient::Collinear) return false;
    return !lex_less(q, hull[0]) && !lex_less(hull[1], q);
  }
  return point_in_convex(ConvexPolygon::from_normalized(hull), q) != Side::Outside;
}

struct Enumerator {
  const PolygonWithHoles& p;
  const std::vector<Point>& s;
  EnumerationLimits limits;
  bool use_prune;

  Enumerator(const PolygonWithHoles& poly, const std::vector<Point>& pts,
             EnumerationLimits lim, bool prune)
      : p(poly), s(pts), limits(lim), use_prune(prune) {}

  Clock::time_point t0 = Clock::now();
  std::set<std::vector<Point>, PointVecLess> seen;  // canonical hull vertex lists
  std::vector<ConvexPolygon> out;
  bool truncated = false;
  std::vector<std::vector<char>> visible;

  bool over_budget() {
    if (out.size() >= limits.max_polygons) return true;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return ms.count() > limits.time_budget_ms;
  }

  // conv(R ∪ {u, v}) ⊆ P, where hull_r is the (loose) hull of R.
  // The segment uv lies inside that hull, so the precomputed
  // visibility matrix is a sound prefilter.
  bool guard(const std::vector<Point>& hull_r, int u, int v) {
    if (!visible[u][v]) return false;
    if (hull_r.empty()) return true;
    std::vector<Point> pts = hull_r;
    pts.push_back(s[u]);
    pts.push_back(s[v]);
    return hull_in_pwh(p, pts);
  }

  void report(const std::vector<Point>& hull_r, const std::vector<int>& r_idx) {
    if (hull_r.size() < 3) return;  // degenerate maximal "polygons" are not polygons
    ConvexPolygon c = ConvexPolygon::from_normalized(hull_r);
    if (!seen.insert(c.vertices()).second) return;
    std::vector<Point> gens;
    gens.reserve(r_idx.size());
    for (int i : r_idx) gens.push_back(s[i]);
    out.push_back(ConvexPolygon::hull_of(std::move(gens), true));
  }

  void recurse(std::vector<int>& r_idx, const std::vector<Point>& hull_r,
               std::vector<int> cand, std::vector<int> excl) {
    if (truncated) return;
    if (over_budget()) {
      truncated = true;
      return;
    }
    if (cand.empty() && excl.empty()) {
      report(hull_r, r_idx);
      return;
    }
    if (use_prune && !hull_r.empty()) {
      for (int x : excl)
        if (in_loose_hull(hull_r, s[x])) return;
    }
    for (std::size_t k = 0; k < cand.size(); k++) {
      if (truncated) return;
      int v = cand[k];
      std::vector<Point> hull_v = hull_r;
      hull_v.push_back(s[v]);
      hull_v = loose_hull(std::move(hull_v));
      std::vector<int> cand2, excl2;
      for (std::size_t i = k + 1; i < cand.size(); i++)
        if (guard(hull_r, cand[i], v)) cand2.push_back(cand[i]);
      for (int u : excl)
        if (guard(hull_r, u, v)) excl2.push_back(u);
      r_idx.push_back(v);
      recurse(r_idx, hull_v, std::move(cand2), std::move(excl2));
      r_idx.pop_back();
      excl.push_back(v);
    }
  }
};

}  // namespace

EnumerationResult enumerate_maximal_convex(const PolygonWithHoles& p,
                                           const std::vector<Point>& s,
                                           EnumerationLimits limits, bool use_prune) {
  Enumerator en{p, s, limits, use_prune};
  std::size_t n = s.size();
  en.visible.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; i++)
    for (std::size_t j = i + 1; j < n; j++)
      en.visible[i][j] = en.visible[j][i] =
          visibility_adjacent(p, s[i], s[j]) ? 1 : 0;
  std::vector<int> cand(n);
  for (std::size_t i = 0; i < n; i++) cand[i] = static_cast<int>(i);
  std::vector<int> r;
  en.recurse(r, {}, std::move(cand), {});
  std::sort(en.out.begin(), en.out.end(), ConvexPolygonLess{});
  return {std::move(en.out), en.truncated};
}

ConvexPolygon bloat(const PolygonWithHoles& p, ConvexPolygon c, BloatSource source,
                    Rng& rng, const std::vector<Point>& fixed_points, bool recompute) {
  std::vector<Point> gens = c.has_generators() ? c.generators() : c.vertices();
  std::set<Point, PointLess> rejected;
  std::vector<Point> static_candidates;
  if (source == BloatSource::V) {
    static_candidates = fixed_points;
  } else if (!recompute) {
    static_candidates =
        source == BloatSource::S1OfC ? s1_of_c(p, c) : s2_of_c(p, c);
  }
  while (true) {
    std::vector<Point> candidates;
    if (source == BloatSource::V || !recompute)
      candidates = static_candidates;
    else
      candidates = source == BloatSource::S1OfC ? s1_of_c(p, c) : s2_of_c(p, c);
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                    [&](const Point& q) {
                                      return rejected.count(q) ||
                                             point_in_convex(c, q) != Side::Outside;
                                    }),
                     candidates.end());
    std::sort(candidates.begin(), candidates.end(), PointLess{});
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    rng.shuffle(candidates);
    bool accepted = false;
    for (const Point& q : candidates) {
      std::vector<Point> pts = c.vertices();
      pts.push_back(q);
      ConvexPolygon trial = ConvexPolygon::hull_of(std::move(pts), false);
      if (convex_in_pwh(p, trial)) {
        c = std::move(trial);
        gens.push_back(q);
        accepted = true;
        if (recompute && source != BloatSource::V) break;  // edges changed
      } else {
        rejected.insert(q);
      }
    }
    if (!accepted) break;
  }
  std::vector<Point> pts = gens;
  ConvexPolygon result = ConvexPolygon::hull_of(std::move(pts), true);
  return result;
}

namespace {

// d strictly inside the circumcircle of CCW triangle (a, b, c).
bool in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  Rat ax = a.x - d.x, ay = a.y - d.y;
  Rat bx = b.x - d.x, by = b.y - d.y;
  Rat cx = c.x - d.x, cy = c.y - d.y;
  Rat a2 = ax * ax + ay * ay;
  Rat b2 = bx * bx + by * by;
  Rat c2 = cx * cx + cy * cy;
  Rat det = ax * (by * c2 - b2 * cy) - ay * (bx * c2 - b2 * cx) + a2 * (bx * cy - by * cx);
  return sgn(det) > 0;
}

struct Tri {
  Point v[3];
};

using EdgeKey = std::pair<Point, Point>;
struct EdgeKeyLess {
  bool operator()(const EdgeKey& a, const EdgeKey& b) const {
    if (a.first != b.first) return lex_less(a.first, b.first);
    return lex_less(a.second, b.second);
  }
};
EdgeKey edge_key(const Point& a, const Point& b) {
  return lex_less(a, b) ? EdgeKey{a, b} : EdgeKey{b, a};
}

// Interior angle cone test at a ring occurrence: direction d lies inside
// the region wedge at vertex ring[i] (region on the left of CCW ring).
bool dir_in_wedge(const Point& to_next, const Point& to_prev, const Point& vertex,
                  const Point& dir_target) {
  Point n(to_next.x - vertex.x, to_next.y - vertex.y);
  Point m(to_prev.x - vertex.x, to_prev.y - vertex.y);
  Point d(dir_target.x - vertex.x, dir_target.y - vertex.y);
  Rat cnm = n.x * m.y - n.y * m.x;
  Rat cnd = n.x * d.y - n.y * d.x;
  Rat cdm = d.x * m.y - d.y * m.x;
  if (sgn(cnm) > 0) return sgn(cnd) > 0 && sgn(cdm) > 0;
  if (sgn(cnm) < 0) return !(sgn(cnd) < 0 && sgn(cdm) < 0);
  // Straight vertex: the wedge is the open half-plane left of n.
  Rat dot = n.x * m.x + n.y * m.y;
  if (sgn(dot) < 0) return sgn(cnd) > 0;
  return false;  // zero-angle spike; not a usable wedge
}

// Merge all holes into the outer ring with two-way bridges; the merged
// ring is weakly simple (bridge vertices appear twice) and CCW.
std::vector<Point> merge_holes(const PolygonWithHoles& p) {
  std::vector<Point> ring = p.outer();
  std::vector<std::vector<Point>> holes = p.holes();
  // Rightmost holes first, so the bridge ray never crosses a pending hole.
  std::sort(holes.begin(), holes.end(),
            [](const std::vector<Point>& a, const std::vector<Point>& b) {
              const Point& ma = *std::max_element(a.begin(), a.end(), PointLess{});
              const Point& mb = *std::max_element(b.begin(), b.end(), PointLess{});
              return lex_less(mb, ma);
            });
  for (const std::vector<Point>& hole : holes) {
    std::size_t mi = 0;
    for (std::size_t i = 1; i < hole.size(); i++)
      if (lex_less(hole[mi], hole[i])) mi = i;
    const Point& m = hole[mi];

    // Closest intersection of the ray m + t(1,0), t > 0, with the ring.
    std::optional<Rat> best_x;
    int hit_vertex = -1;
    int hit_edge = -1;
    std::size_t rn = ring.size();
    for (std::size_t i = 0; i < rn; i++) {
      const Point& a = ring[i];
      if (cmp(a.y, m.y) == 0 && cmp(a.x, m.x) > 0) {
        if (!best_x || cmp(a.x, *best_x) < 0) {
          best_x = a.x;
          hit_vertex = static_cast<int>(i);
          hit_edge = -1;
        }
      }
      const Point& b = ring[(i + 1) % rn];
      int sa = cmp(a.y, m.y), sb = cmp(b.y, m.y);
      if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) {
        Rat x = a.x + (m.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (cmp(x, m.x) > 0 && (!best_x || cmp(x, *best_x) < 0)) {
          best_x = x;
          hit_vertex = -1;
          hit_edge = static_cast<int>(i);
        }
      }
    }
    assert(best_x.has_value());

    int target = hit_vertex;
    if (target < 0) {
      // Interior edge hit: try the edge endpoint of larger x; any reflex
      // ring vertex inside the triangle (m, i, cand) blocks visibility
      // and becomes the bridge target instead (smallest angle from the
      // ray wins, nearest first on ties).
      Point ipt(*best_x, m.y);
      const Point& a = ring[hit_edge];
      const Point& b = ring[(hit_edge + 1) % rn];
      int cand = cmp(a.x, b.x) >= 0 ? hit_edge : (hit_edge + 1) % static_cast<int>(rn);
      ConvexPolygon tri;
      bool tri_ok = true;
      try {
        tri = ConvexPolygon::hull_of({m, ipt, ring[cand]}, false);
      } catch (const DegenerateHull&) {
        tri_ok = false;  // cand lies on the ray: direct hit
      }
      target = cand;
      if (tri_ok) {
        std::optional<Rat> best_tan;  // |dy| / dx relative to m
        std::optional<Rat> best_d2;
        for (std::size_t i = 0; i < rn; i++) {
          const Point& prev = ring[(i + rn - 1) % rn];
          const Point& cur = ring[i];
          const Point& next = ring[(i + 1) % rn];
          if (orientation(prev, cur, next) != Orient::Right &&
              !(cur == ring[cand]))
            continue;  // only reflex vertices can block
          if (cur == m) continue;
          if (point_in_convex(tri, cur) == Side::Outside) continue;
          Rat dx = cur.x - m.x;
          if (sgn(dx) <= 0) continue;
          Rat dy = abs(Rat(cur.y - m.y));
          Rat tan = dy / dx;
          Rat d2 = dx * dx + dy * dy;
          if (!best_tan || cmp(tan, *best_tan) < 0 ||
              (cmp(tan, *best_tan) == 0 && cmp(d2, *best_d2) < 0)) {
            best_tan = tan;
            best_d2 = d2;
            target = static_cast<int>(i);
          }
        }
      }
    }

    // The target value may occur several times after earlier splices;
    // pick an occurrence whose interior wedge sees m.
    std::vector<int> occurrences;
    for (std::size_t i = 0; i < rn; i++)
      if (ring[i] == ring[target]) occurrences.push_back(static_cast<int>(i));
    if (occurrences.size() > 1) {
      for (int i : occurrences) {
        const Point& prev = ring[(i + rn - 1) % rn];
        const Point& next = ring[(i + 1) % rn];
        if (dir_in_wedge(next, prev, ring[i], m)) {
          target = i;
          break;
        }
      }
    }

    std::vector<Point> merged;
    merged.reserve(rn + hole.size() + 2);
    for (int i = 0; i <= target; i++) merged.push_back(ring[i]);
    for (std::size_t k = 0; k <= hole.size(); k++)
      merged.push_back(hole[(mi + k) % hole.size()]);
    for (std::size_t i = target; i < rn; i++) merged.push_back(ring[i]);
    ring = std::move(merged);
  }
  return ring;
}

std::vector<Tri> ear_clip(std::vector<Point> ring) {
  std::vector<Tri> tris;
  std::size_t n = ring.size();
  std::vector<int> next(n), prev(n);
  for (std::size_t i = 0; i < n; i++) {
    next[i] = static_cast<int>((i + 1) % n);
    prev[i] = static_cast<int>((i + n - 1) % n);
  }
  std::size_t remaining = n;
  int cur = 0;
  int since_clip = 0;
  while (remaining > 3) {
    const Point& a = ring[prev[cur]];
    const Point& b = ring[cur];
    const Point& c = ring[next[cur]];
    bool ear = orientation(a, b, c) == Orient::Left;
    if (ear) {
      ConvexPolygon tri = ConvexPolygon::hull_of({a, b, c}, false);
      for (int i = next[next[cur]]; i != prev[cur]; i = next[i]) {
        const Point& q = ring[i];
        if (q == a || q == b || q == c) continue;
        if (point_in_convex(tri, q) != Side::Outside) {
          ear = false;
          break;
        }
      }
    }
    if (ear) {
      tris.push_back({{a, b, c}});
      next[prev[cur]] = next[cur];
      prev[next[cur]] = prev[cur];
      cur = next[cur];
      remaining--;
      since_clip = 0;
    } else {
      cur = next[cur];
      if (++since_clip > static_cast<int>(remaining))
        throw std::logic_error("ear clipping found no ear");
    }
  }
  int i0 = cur, i1 = next[cur], i2 = next[next[cur]];
  if (orientation(ring[i0], ring[i1], ring[i2]) != Orient::Collinear)
    tris.push_back({{ring[i0], ring[i1], ring[i2]}});
  return tris;
}

void delaunay_flip_pass(std::vector<Tri>* tris, const std::set<EdgeKey, EdgeKeyLess>& constrained) {
  std::size_t flips = 0;
  std::size_t cap = 4 * tris->size() * tris->size() + 16;
  bool changed = true;
  while (changed && flips < cap) {
    changed = false;
    std::map<EdgeKey, std::vector<std::pair<int, int>>, EdgeKeyLess> by_edge;
    for (std::size_t t = 0; t < tris->size(); t++)
      for (int e = 0; e < 3; e++)
        by_edge[edge_key((*tris)[t].v[e], (*tris)[t].v[(e + 1) % 3])].emplace_back(
            static_cast<int>(t), e);
    for (const auto& [key, users] : by_edge) {
      if (users.size() != 2 || constrained.count(key)) continue;
      auto [t1, e1] = users[0];
      auto [t2, e2] = users[1];
      const Point a = (*tris)[t1].v[e1];
      const Point b = (*tris)[t1].v[(e1 + 1) % 3];
      const Point c = (*tris)[t1].v[(e1 + 2) % 3];
      const Point d = (*tris)[t2].v[(e2 + 2) % 3];
      if (!in_circumcircle(a, b, c, d)) continue;
      if (orientation(a, d, c) != Orient::Left || orientation(d, b, c) != Orient::Left)
        continue;  // flip would leave the quad
      (*tris)[t1] = {{a, d, c}};
      (*tris)[t2] = {{d, b, c}};
      changed = true;
      flips++;
      break;  // adjacency is stale; rebuild
    }
  }
}

}  // namespace

std::vector<ConvexPolygon> triangulate(const PolygonWithHoles& p) {
  std::vector<Point> ring = p.holes().empty() ? p.outer() : merge_holes(p);
  std::vector<Tri> tris = ear_clip(std::move(ring));
  std::set<EdgeKey, EdgeKeyLess> constrained;
  for (const Segment& e : p.ring_edges()) constrained.insert(edge_key(e.a, e.b));
  delaunay_flip_pass(&tris, constrained);
  std::vector<ConvexPolygon> out;
  out.reserve(tris.size());
  for (const Tri& t : tris)
    out.push_back(ConvexPolygon::hull_of({t.v[0], t.v[1], t.v[2]}, false));
  return out;
}

namespace {

std::string source_name(BloatSource s) {
  switch (s) {
    case BloatSource::V: return "v";
    case BloatSource::S1OfC: return "s1c";
    case BloatSource::S2OfC: return "s2c";
  }
  return "?";
}

BloatSource source_from_name(const std::string& s) {
  if (s == "v") return BloatSource::V;
  if (s == "s1c") return BloatSource::S1OfC;
  if (s == "s2c") return BloatSource::S2OfC;
  throw ParseError("unknown bloat source: " + s);
}

}  // namespace

Collection build_collection(const PolygonWithHoles& p, const CollectionConfig& cfg) {
  Collection col;
  col.seed = cfg.seed;
  col.replication = cfg.replication;
  for (BloatSource s : cfg.rounds) col.rounds.push_back(source_name(s));

  std::vector<Point> v_points = point_set(p, PointSetKind::V);
  std::set<std::vector<Point>, PointVecLess> seen;
  std::vector<ConvexPolygon> result;
  auto add = [&](ConvexPolygon c) {
    if (seen.insert(c.vertices()).second) result.push_back(std::move(c));
  };

  if (cfg.method == CollectionMethod::BronKerbosch) {
    col.method = "bk";
    EnumerationResult en = enumerate_maximal_convex(
        p, v_points, {cfg.max_polygons, cfg.time_budget_ms});
    col.truncated = en.truncated;
    for (std::size_t i = 0; i < en.polygons.size(); i++) {
      ConvexPolygon c = en.polygons[i];
      Rng rng = Rng::derive(cfg.seed, i, 0);
      for (BloatSource s : cfg.rounds)
        c = bloat(p, std::move(c), s, rng, v_points, cfg.recompute_candidates);
      add(std::move(c));
    }
  } else {
    col.method = "triangulation";
    std::vector<ConvexPolygon> tris = triangulate(p);
    for (std::size_t t = 0; t < tris.size(); t++) {
      for (std::size_t rep = 0; rep < cfg.replication; rep++) {
        Rng rng = Rng::derive(cfg.seed, t, rep);
        ConvexPolygon c = bloat(p, tris[t], BloatSource::V, rng, v_points);
        for (BloatSource s : cfg.rounds)
          c = bloat(p, std::move(c), s, rng, v_points, cfg.recompute_candidates);
        add(std::move(c));
      }
    }
  }
  std::sort(result.begin(), result.end(), ConvexPolygonLess{});
  col.polygons = std::move(result);
  return col;
}

Json collection_to_json(const Collection& col, const std::string& instance_name) {
  Json j;
  j["type"] = "CGSHOP2023_Solution";
  j["instance"] = instance_name;
  Json polys = Json::array();
  for (const ConvexPolygon& c : col.polygons) polys.push_back(json_from_ring(c.vertices()));
  j["polygons"] = polys;
  Json prov;
  prov["method"] = col.method;
  prov["seed"] = col.seed;
  prov["replication"] = col.replication;
  prov["rounds"] = col.rounds;
  prov["truncated"] = col.truncated;
  j["provenance"] = prov;
  return j;
}

Collection collection_from_json(const Json& j) {
  Collection col;
  if (!j.is_object() || !j.contains("polygons"))
    throw ParseError("collection needs polygons");
  for (const Json& ring : j.at("polygons")) {
    std::vector<Point> pts = ring_from_json(ring);
    col.polygons.push_back(ConvexPolygon::hull_of(std::move(pts), true));
  }
  if (j.contains("provenance")) {
    const Json& prov = j.at("provenance");
    col.method = prov.value("method", "");
    col.seed = prov.value("seed", std::uint64_t(0));
    col.replication = prov.value("replication", std::size_t(1));
    if (prov.contains("rounds"))
      for (const Json& r : prov.at("rounds")) {
        std::string name = r.get<std::string>();
        source_from_name(name);  // validate
        col.rounds.push_back(name);
      }
    col.truncated = prov.value("truncated", false);
  }
  std::sort(col.polygons.begin(), col.polygons.end(), ConvexPolygonLess{});
  col.polygons.erase(std::unique(col.polygons.begin(), col.polygons.end()),
                     col.polygons.end());
  return col;
}

}  // namespace polycover
