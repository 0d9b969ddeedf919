#include "polycover/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace polycover {

namespace {

struct Dsu {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

// Split points contributed by the pair (s1, s2) are appended to both
// lists: the proper/touching intersection point, or for collinear
// overlaps the endpoints of one segment lying on the other.
void pair_split_points(const Segment& s1, const Segment& s2,
                       std::vector<Point>* p1, std::vector<Point>* p2) {
  Rat d1x = s1.b.x - s1.a.x, d1y = s1.b.y - s1.a.y;
  Rat d2x = s2.b.x - s2.a.x, d2y = s2.b.y - s2.a.y;
  Rat denom = d1x * d2y - d1y * d2x;
  Rat wx = s2.a.x - s1.a.x, wy = s2.a.y - s1.a.y;
  if (sgn(denom) != 0) {
    Rat t = (wx * d2y - wy * d2x) / denom;
    Rat u = (wx * d1y - wy * d1x) / denom;
    if (sgn(t) >= 0 && cmp(t, 1) <= 0 && sgn(u) >= 0 && cmp(u, 1) <= 0) {
      Point pt(s1.a.x + t * d1x, s1.a.y + t * d1y);
      p1->push_back(pt);
      p2->push_back(pt);
    }
    return;
  }
  if (sgn(wx * d1y - wy * d1x) != 0) return;  // parallel, distinct lines
  auto on = [](const Segment& s, const Point& q) {
    if (cmp(s.a.x, s.b.x) != 0)
      return (cmp(q.x, s.a.x) >= 0 && cmp(q.x, s.b.x) <= 0) ||
             (cmp(q.x, s.b.x) >= 0 && cmp(q.x, s.a.x) <= 0);
    return (cmp(q.y, s.a.y) >= 0 && cmp(q.y, s.b.y) <= 0) ||
           (cmp(q.y, s.b.y) >= 0 && cmp(q.y, s.a.y) <= 0);
  };
  if (on(s1, s2.a)) p1->push_back(s2.a);
  if (on(s1, s2.b)) p1->push_back(s2.b);
  if (on(s2, s1.a)) p2->push_back(s1.a);
  if (on(s2, s1.b)) p2->push_back(s1.b);
}

struct Interval {
  Rat lo, hi;
};

// True iff the open interval (lo, hi) is not fully covered by the
// merged, sorted, closed intervals in `blocked`.
bool has_open_passage(const Rat& lo, const Rat& hi, const std::vector<Interval>& blocked) {
  Rat cursor = lo;
  for (const Interval& b : blocked) {
    if (cmp(b.hi, cursor) <= 0) continue;
    if (cmp(b.lo, hi) >= 0) break;
    if (cmp(b.lo, cursor) > 0) return true;
    if (cmp(b.hi, cursor) > 0) cursor = b.hi;
    if (cmp(cursor, hi) >= 0) return false;
  }
  return cmp(cursor, hi) < 0;
}

}  // namespace

Rat Arrangement::edge_y_at(int e, const Rat& x) const {
  const Edge& ed = edges_[e];
  assert(!ed.vertical);
  return ed.a.y + (x - ed.a.x) * (ed.b.y - ed.a.y) / (ed.b.x - ed.a.x);
}

Point Arrangement::trap_rep(int t) const {
  const Trap& tr = traps_[t];
  Rat xm = (xs_[tr.slab] + xs_[tr.slab + 1]) / 2;
  Rat ym = (edge_y_at(tr.bot, xm) + edge_y_at(tr.top, xm)) / 2;
  return Point(xm, ym);
}

std::size_t Arrangement::inside_face_count() const {
  std::size_t n = 0;
  for (const ArrFace& f : faces_)
    if (f.inside_p) n++;
  return n;
}

Arrangement build_arrangement(const PolygonWithHoles& p,
                              const std::vector<ConvexPolygon>& polys,
                              std::size_t face_cap) {
  Arrangement arr;

  std::vector<Segment> segs = p.ring_edges();
  for (const ConvexPolygon& c : polys)
    for (std::size_t i = 0; i < c.size(); i++) segs.push_back(c.edge(i));
  // Bounding box over everything (polygons are normally inside P, but a
  // verifier may pass polygons that are not).
  Point lo = segs[0].a, hi = segs[0].a;
  for (const Segment& s : segs) {
    for (const Point* q : {&s.a, &s.b}) {
      if (cmp(q->x, lo.x) < 0) lo.x = q->x;
      if (cmp(q->y, lo.y) < 0) lo.y = q->y;
      if (cmp(q->x, hi.x) > 0) hi.x = q->x;
      if (cmp(q->y, hi.y) > 0) hi.y = q->y;
    }
  }
  Point bl = lo, br(hi.x, lo.y), tr = hi, tl(lo.x, hi.y);
  segs.emplace_back(bl, br);
  segs.emplace_back(br, tr);
  segs.emplace_back(tr, tl);
  segs.emplace_back(tl, bl);
  segs.erase(std::remove_if(segs.begin(), segs.end(),
                            [](const Segment& s) { return s.a == s.b; }),
             segs.end());
  arr.segments_ = segs;

  // Split every segment at every point shared with another segment.
  std::size_t n = segs.size();
  std::vector<std::vector<Point>> cuts(n);
  for (std::size_t i = 0; i < n; i++) {
    cuts[i].push_back(segs[i].a);
    cuts[i].push_back(segs[i].b);
  }
  for (std::size_t i = 0; i < n; i++)
    for (std::size_t j = i + 1; j < n; j++)
      pair_split_points(segs[i], segs[j], &cuts[i], &cuts[j]);

  PointMap<int> vid;
  std::vector<Point> verts;
  auto id_of = [&](const Point& q) {
    auto [it, fresh] = vid.try_emplace(q, static_cast<int>(verts.size()));
    if (fresh) verts.push_back(q);
    return it->second;
  };
  std::set<std::pair<int, int>> edge_pairs;
  for (std::size_t i = 0; i < n; i++) {
    auto& c = cuts[i];
    bool by_x = cmp(segs[i].a.x, segs[i].b.x) != 0;
    std::sort(c.begin(), c.end(), [&](const Point& a, const Point& b) {
      return by_x ? cmp(a.x, b.x) < 0 : cmp(a.y, b.y) < 0;
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t k = 0; k + 1 < c.size(); k++) {
      int a = id_of(c[k]), b = id_of(c[k + 1]);
      edge_pairs.emplace(std::min(a, b), std::max(a, b));
    }
  }

  // Classify split edges; bucket vertical ones per abscissa.
  std::vector<Rat> all_x;
  all_x.reserve(verts.size());
  for (const Point& v : verts) all_x.push_back(v.x);
  std::sort(all_x.begin(), all_x.end());
  all_x.erase(std::unique(all_x.begin(), all_x.end()), all_x.end());
  arr.xs_ = all_x;
  auto x_index = [&](const Rat& x) {
    return static_cast<int>(std::lower_bound(all_x.begin(), all_x.end(), x) -
                            all_x.begin());
  };

  std::vector<std::vector<int>> starts(all_x.size());
  std::vector<std::vector<Interval>> vert_blocked(all_x.size());
  for (const auto& [ia, ib] : edge_pairs) {
    Point a = verts[ia], b = verts[ib];
    Arrangement::Edge e;
    if (cmp(a.x, b.x) == 0) {
      e.vertical = true;
      if (cmp(a.y, b.y) > 0) std::swap(a, b);
      e.a = a;
      e.b = b;
      vert_blocked[x_index(a.x)].push_back({a.y, b.y});
      arr.edges_.push_back(e);
      continue;
    }
    if (cmp(a.x, b.x) > 0) std::swap(a, b);
    e.a = a;
    e.b = b;
    int eid = static_cast<int>(arr.edges_.size());
    arr.edges_.push_back(e);
    starts[x_index(a.x)].push_back(eid);
  }
  for (auto& bl2 : vert_blocked) {
    std::sort(bl2.begin(), bl2.end(),
              [](const Interval& a, const Interval& b) { return cmp(a.lo, b.lo) < 0; });
    std::vector<Interval> merged;
    for (const Interval& iv : bl2) {
      if (!merged.empty() && cmp(iv.lo, merged.back().hi) <= 0) {
        if (cmp(iv.hi, merged.back().hi) > 0) merged.back().hi = iv.hi;
      } else {
        merged.push_back(iv);
      }
    }
    bl2 = std::move(merged);
  }

  // Sweep left to right, maintaining the bottom-to-top order of edges
  // crossing the current slab. Split edges only meet at endpoints, so
  // the order never changes inside a slab.
  Dsu dsu;
  std::size_t num_boundaries = all_x.size();
  if (num_boundaries >= 2) arr.slab_traps_.resize(num_boundaries - 1);
  std::vector<int> active;
  std::map<int, Rat> ycache;
  auto y_at = [&](int e, const Rat& x) {
    auto it = ycache.find(e);
    if (it != ycache.end()) return it->second;
    Rat y = arr.edge_y_at(e, x);
    ycache.emplace(e, y);
    return y;
  };

  for (std::size_t b = 0; b < num_boundaries; b++) {
    const Rat& xb = all_x[b];
    ycache.clear();

    std::vector<Rat> left_y;
    if (b > 0) {
      left_y.reserve(active.size());
      for (int e : active) left_y.push_back(y_at(e, xb));
    }
    std::vector<int> left_traps = b > 0 ? arr.slab_traps_[b - 1] : std::vector<int>{};

    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](int e) { return cmp(arr.edges_[e].b.x, xb) == 0; }),
                 active.end());
    for (int e : starts[b]) {
      const Rat ya = arr.edges_[e].a.y;  // starts here: y is the endpoint
      auto slope_less = [&](int e1, int e2) {
        const auto& s1 = arr.edges_[e1];
        const auto& s2 = arr.edges_[e2];
        Rat l = (s1.b.y - s1.a.y) * (s2.b.x - s2.a.x);
        Rat r = (s2.b.y - s2.a.y) * (s1.b.x - s1.a.x);
        return cmp(l, r) < 0;
      };
      auto pos = std::lower_bound(active.begin(), active.end(), e, [&](int f, int g) {
        Rat yf = f == e ? ya : y_at(f, xb);
        Rat yg = g == e ? ya : y_at(g, xb);
        int c = cmp(yf, yg);
        if (c != 0) return c < 0;
        return slope_less(f, g);
      });
      active.insert(pos, e);
    }

    std::vector<Rat> right_y;
    if (b + 1 < num_boundaries) {
      right_y.reserve(active.size());
      for (int e : active) right_y.push_back(y_at(e, xb));
      auto& st = arr.slab_traps_[b];
      for (std::size_t k = 0; k + 1 < active.size(); k++) {
        Arrangement::Trap t;
        t.slab = static_cast<int>(b);
        t.stack = static_cast<int>(k);
        t.bot = active[k];
        t.top = active[k + 1];
        int id = static_cast<int>(arr.traps_.size());
        arr.traps_.push_back(t);
        st.push_back(id);
        dsu.make();
      }
      if (arr.traps_.size() > 8 * face_cap)
        throw ArrangementTooLarge("arrangement trapezoid count exceeds cap",
                                  arr.traps_.size());
    }

    // Contacts between slab b-1 and slab b across this boundary.
    if (b > 0 && b + 1 < num_boundaries) {
      const auto& blocked = vert_blocked[b];
      const auto& rt = arr.slab_traps_[b];
      std::size_t k = 0, j = 0;
      while (k < left_traps.size() && j < rt.size()) {
        const Rat& llo = left_y[k];
        const Rat& lhi = left_y[k + 1];
        const Rat& rlo = right_y[j];
        const Rat& rhi = right_y[j + 1];
        const Rat& olo = cmp(llo, rlo) >= 0 ? llo : rlo;
        const Rat& ohi = cmp(lhi, rhi) <= 0 ? lhi : rhi;
        if (cmp(olo, ohi) < 0) {
          Arrangement::SideRecord rec;
          rec.boundary = static_cast<int>(b);
          rec.left_trap = left_traps[k];
          rec.right_trap = rt[j];
          rec.lo = olo;
          rec.hi = ohi;
          arr.records_.push_back(rec);
          if (has_open_passage(olo, ohi, blocked)) dsu.join(left_traps[k], rt[j]);
        }
        if (cmp(lhi, rhi) <= 0)
          k++;
        else
          j++;
      }
    }
  }

  // Faces from the merged trapezoid classes.
  std::map<int, int> root_to_face;
  arr.records_by_left_.resize(arr.traps_.size());
  arr.records_by_right_.resize(arr.traps_.size());
  for (std::size_t r = 0; r < arr.records_.size(); r++) {
    arr.records_by_left_[arr.records_[r].left_trap].push_back(static_cast<int>(r));
    arr.records_by_right_[arr.records_[r].right_trap].push_back(static_cast<int>(r));
  }
  for (std::size_t t = 0; t < arr.traps_.size(); t++) {
    int root = dsu.find(static_cast<int>(t));
    auto [it, fresh] = root_to_face.try_emplace(root, static_cast<int>(arr.faces_.size()));
    if (fresh) {
      arr.faces_.emplace_back();
      if (arr.faces_.size() > face_cap)
        throw ArrangementTooLarge("arrangement face count exceeds cap",
                                  arr.faces_.size());
    }
    arr.traps_[t].face = it->second;
    arr.faces_[it->second].trapezoids.push_back(static_cast<int>(t));
  }
  for (ArrFace& f : arr.faces_) {
    f.rep = arr.trap_rep(f.trapezoids.front());
    f.inside_p = point_in_pwh(p, f.rep) == Side::Inside;
  }

  std::set<std::pair<int, int>> adj;
  auto add_adj = [&](int fa, int fb) {
    if (fa == fb) return;
    adj.emplace(std::min(fa, fb), std::max(fa, fb));
  };
  for (const auto& st : arr.slab_traps_)
    for (std::size_t k = 0; k + 1 < st.size(); k++)
      add_adj(arr.traps_[st[k]].face, arr.traps_[st[k + 1]].face);
  for (const auto& rec : arr.records_)
    add_adj(arr.traps_[rec.left_trap].face, arr.traps_[rec.right_trap].face);
  arr.face_adjacency_.assign(adj.begin(), adj.end());

  return arr;
}

std::vector<int> Arrangement::faces_touching(const Point& q) const {
  std::vector<int> slabs;
  auto it = std::lower_bound(xs_.begin(), xs_.end(), q.x);
  if (it != xs_.end() && *it == q.x) {
    std::size_t b = it - xs_.begin();
    if (b > 0) slabs.push_back(static_cast<int>(b - 1));
    if (b + 1 < xs_.size()) slabs.push_back(static_cast<int>(b));
  } else {
    if (it == xs_.begin() || it == xs_.end()) return {};
    slabs.push_back(static_cast<int>(it - xs_.begin() - 1));
  }
  std::vector<int> out;
  for (int s : slabs) {
    for (int t : slab_traps_[s]) {
      Rat yb = edge_y_at(traps_[t].bot, q.x);
      if (cmp(q.y, yb) < 0) continue;
      Rat yt = edge_y_at(traps_[t].top, q.x);
      if (cmp(q.y, yt) > 0) continue;
      out.push_back(traps_[t].face);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> Arrangement::components(const std::vector<char>& selected) const {
  std::vector<std::vector<int>> nbr(faces_.size());
  for (const auto& [a, b] : face_adjacency_) {
    if (a < static_cast<int>(selected.size()) && b < static_cast<int>(selected.size()) &&
        selected[a] && selected[b]) {
      nbr[a].push_back(b);
      nbr[b].push_back(a);
    }
  }
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(faces_.size(), 0);
  for (std::size_t f = 0; f < faces_.size(); f++) {
    if (!selected[f] || seen[f]) continue;
    std::vector<int> comp, stack{static_cast<int>(f)};
    seen[f] = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      comp.push_back(cur);
      for (int nx : nbr[cur])
        if (!seen[nx]) {
          seen[nx] = 1;
          stack.push_back(nx);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

void Arrangement::side_pieces(int t, bool right_side,
                              const std::vector<char>& in_component,
                              std::vector<std::pair<Point, Point>>* out) const {
  const Trap& tr = traps_[t];
  const Rat& xb = xs_[tr.slab + (right_side ? 1 : 0)];
  Rat lo = edge_y_at(tr.bot, xb);
  Rat hi = edge_y_at(tr.top, xb);
  if (cmp(lo, hi) >= 0) return;
  std::vector<Interval> covered;
  const auto& recs = right_side ? records_by_left_[t] : records_by_right_[t];
  for (int r : recs) {
    const SideRecord& rec = records_[r];
    int other = right_side ? rec.right_trap : rec.left_trap;
    if (in_component[traps_[other].face]) covered.push_back({rec.lo, rec.hi});
  }
  std::sort(covered.begin(), covered.end(),
            [](const Interval& a, const Interval& b) { return cmp(a.lo, b.lo) < 0; });
  Rat cursor = lo;
  auto emit = [&](const Rat& a, const Rat& b) {
    if (cmp(a, b) >= 0) return;
    if (right_side)
      out->emplace_back(Point(xb, a), Point(xb, b));  // region to the west: upward
    else
      out->emplace_back(Point(xb, b), Point(xb, a));  // region to the east: downward
  };
  for (const Interval& c : covered) {
    if (cmp(c.lo, cursor) > 0) emit(cursor, c.lo);
    if (cmp(c.hi, cursor) > 0) cursor = c.hi;
  }
  emit(cursor, hi);
}

namespace {

struct Dir {
  Rat x, y;
};

// 1 = same direction as ref, 2 = CCW half, 3 = opposite, 4 = CW half.
int sector_from(const Dir& ref, const Dir& d) {
  Rat cr = ref.x * d.y - ref.y * d.x;
  int c = sgn(cr);
  if (c > 0) return 2;
  if (c < 0) return 4;
  Rat dot = ref.x * d.x + ref.y * d.y;
  return sgn(dot) > 0 ? 1 : 3;
}

// True iff rotating CCW from ref, a comes strictly after b (a has the
// larger CCW angle). Used to pick the CW-most continuation.
bool ccw_after(const Dir& ref, const Dir& a, const Dir& b) {
  int sa = sector_from(ref, a);
  int sb = sector_from(ref, b);
  if (sa != sb) {
    // A piece doubling back exactly along the incoming direction
    // (sector 1) is never a valid continuation; rank it last.
    int ra = sa == 1 ? 0 : sa;
    int rb = sb == 1 ? 0 : sb;
    return ra > rb;
  }
  return sgn(b.x * a.y - b.y * a.x) > 0;  // a CCW of b within the half-plane
}

}  // namespace

std::optional<PolygonWithHoles> Arrangement::component_polygon(
    const std::vector<int>& comp_faces) const {
  std::vector<char> in_comp(faces_.size(), 0);
  for (int f : comp_faces) in_comp[f] = 1;

  std::vector<std::pair<Point, Point>> pieces;
  for (int f : comp_faces) {
    for (int t : faces_[f].trapezoids) {
      const Trap& tr = traps_[t];
      const Rat& xl = xs_[tr.slab];
      const Rat& xr = xs_[tr.slab + 1];
      const auto& st = slab_traps_[tr.slab];
      bool bot_ext = tr.stack == 0 || !in_comp[traps_[st[tr.stack - 1]].face];
      if (bot_ext)
        pieces.emplace_back(Point(xl, edge_y_at(tr.bot, xl)),
                            Point(xr, edge_y_at(tr.bot, xr)));
      bool top_ext = tr.stack + 1 >= static_cast<int>(st.size()) ||
                     !in_comp[traps_[st[tr.stack + 1]].face];
      if (top_ext)
        pieces.emplace_back(Point(xr, edge_y_at(tr.top, xr)),
                            Point(xl, edge_y_at(tr.top, xl)));
      side_pieces(t, true, in_comp, &pieces);
      side_pieces(t, false, in_comp, &pieces);
    }
  }

  PointMap<std::vector<int>> outgoing;
  for (std::size_t i = 0; i < pieces.size(); i++)
    outgoing[pieces[i].first].push_back(static_cast<int>(i));

  std::vector<char> used(pieces.size(), 0);
  std::vector<std::vector<Point>> cycles;
  for (std::size_t start = 0; start < pieces.size(); start++) {
    if (used[start]) continue;
    std::vector<Point> cycle;
    int cur = static_cast<int>(start);
    while (true) {
      used[cur] = 1;
      cycle.push_back(pieces[cur].first);
      const Point& v = pieces[cur].second;
      Dir d_in{pieces[cur].second.x - pieces[cur].first.x,
               pieces[cur].second.y - pieces[cur].first.y};
      Dir ref{-d_in.x, -d_in.y};
      auto it = outgoing.find(v);
      if (it == outgoing.end()) return std::nullopt;  // dangling piece
      int best = -1;
      for (int cand : it->second) {
        if (used[cand] && cand != static_cast<int>(start)) continue;
        if (best == -1) {
          best = cand;
          continue;
        }
        Dir da{pieces[cand].second.x - v.x, pieces[cand].second.y - v.y};
        Dir db{pieces[best].second.x - v.x, pieces[best].second.y - v.y};
        if (ccw_after(ref, da, db)) best = cand;
      }
      if (best == -1) return std::nullopt;
      if (best == static_cast<int>(start)) break;
      cur = best;
    }
    cycles.push_back(std::move(cycle));
  }

  // Drop collinear chain vertices introduced by slab subdivision.
  for (auto& cy : cycles) {
    std::vector<Point> out;
    std::size_t m = cy.size();
    for (std::size_t i = 0; i < m; i++) {
      const Point& prev = cy[(i + m - 1) % m];
      const Point& cur = cy[i];
      const Point& next = cy[(i + 1) % m];
      if (orientation(prev, cur, next) == Orient::Collinear) {
        Rat dot = (cur.x - prev.x) * (next.x - cur.x) + (cur.y - prev.y) * (next.y - cur.y);
        if (sgn(dot) > 0) continue;  // straight continuation
      }
      out.push_back(cur);
    }
    if (out.size() < 3) return std::nullopt;
    cy = std::move(out);
  }

  // Weakly-simple boundaries (pinch points) are not representable as
  // simple rings; let the caller use the trapezoid decomposition.
  PointMap<int> seen;
  for (const auto& cy : cycles)
    for (const Point& v : cy)
      if (++seen[v] > 1) return std::nullopt;

  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;
  for (auto& cy : cycles) {
    if (sgn(ring_area2(cy)) > 0) {
      if (!outer.empty()) return std::nullopt;  // not a single component
      outer = std::move(cy);
    } else {
      holes.push_back(std::move(cy));
    }
  }
  if (outer.empty()) return std::nullopt;
  return PolygonWithHoles(std::move(outer), std::move(holes), "", false);
}

std::vector<ConvexPolygon> Arrangement::convex_decomposition(
    const std::vector<int>& comp_faces) const {
  std::vector<ConvexPolygon> out;
  for (int f : comp_faces) {
    for (int t : faces_[f].trapezoids) {
      const Trap& tr = traps_[t];
      const Rat& xl = xs_[tr.slab];
      const Rat& xr = xs_[tr.slab + 1];
      std::vector<Point> corners{
          Point(xl, edge_y_at(tr.bot, xl)), Point(xr, edge_y_at(tr.bot, xr)),
          Point(xr, edge_y_at(tr.top, xr)), Point(xl, edge_y_at(tr.top, xl))};
      out.push_back(ConvexPolygon::hull_of(std::move(corners), false));
    }
  }
  return out;
}

}  // namespace polycover
