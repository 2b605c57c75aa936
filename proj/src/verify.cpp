#include "lsvr/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lsvr {

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::ShapeRotationMismatch: return "ShapeRotationMismatch";
    case ViolationKind::LShapeOverlap: return "LShapeOverlap";
    case ViolationKind::MissingVisibility: return "MissingVisibility";
    case ViolationKind::SpuriousVisibility: return "SpuriousVisibility";
    case ViolationKind::DirectionViolation: return "DirectionViolation";
    case ViolationKind::EmbeddingOrderViolation: return "EmbeddingOrderViolation";
  }
  return "?";
}

namespace {

// A vertical eps-thick sightline between bars a and b (y(a) < y(b)) that
// intersects no third bar's interior. Exact candidate-point scan.
bool sightline_exists(const std::vector<Bar>& bars, int a, int b, const Rat& eps) {
  const Bar& ba = bars[a];
  const Bar& bb = bars[b];
  Rat lo = Rat::max(ba.x0, bb.x0);
  Rat hi = Rat::min(ba.x1, bb.x1) - eps;
  if (hi < lo) return false;
  Rat ylo = ba.y, yhi = bb.y;
  std::vector<std::pair<Rat, Rat>> blocked;  // open intervals for strip left x
  for (int c = 0; c < (int)bars.size(); ++c) {
    if (c == a || c == b) continue;
    if (!(ylo < bars[c].y && bars[c].y < yhi)) continue;
    blocked.push_back({bars[c].x0 - eps, bars[c].x1});
  }
  std::vector<Rat> candidates{lo, hi};
  for (auto& [l, r] : blocked) candidates.push_back(r);
  for (const Rat& q : candidates) {
    if (q < lo || hi < q) continue;
    bool ok = true;
    for (auto& [l, r] : blocked)
      if (l < q && q < r) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

struct Seg {  // axis-aligned closed segment
  bool horizontal;
  Rat fixed, lo, hi;
};

bool segs_intersect(const Seg& s1, const Seg& s2) {
  auto overlap = [](const Rat& a0, const Rat& a1, const Rat& b0, const Rat& b1) {
    return !(a1 < b0 || b1 < a0);
  };
  if (s1.horizontal == s2.horizontal) {
    if (s1.fixed != s2.fixed) return false;
    return overlap(s1.lo, s1.hi, s2.lo, s2.hi);
  }
  const Seg& h = s1.horizontal ? s1 : s2;
  const Seg& v = s1.horizontal ? s2 : s1;
  return h.lo <= v.fixed && v.fixed <= h.hi && v.lo <= h.fixed && h.fixed <= v.hi;
}

struct ColorGeometry {
  // Bars indexed by vertex id of the color's graph.
  std::vector<Bar> bars;
  std::vector<char> have;
};

std::string pair_ent(const std::string& a, const std::string& b) {
  return a + "," + b;
}

// Checks one color: direction, visibility pairs == edge set, drawn segments.
// Coordinates are pre-transposed so sightlines are always vertical.
void check_color(ValidationReport& rep, const PlaneStGraph& g,
                 const std::vector<Bar>& bars,
                 const std::vector<SegmentRect>& segs, const Rat& eps,
                 const std::vector<Bar>& other_bars, const char* color) {
  const int n = g.vertex_count();
  std::set<std::pair<int, int>> eset;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    eset.insert({ed.tail, ed.head});
    if (!(bars[ed.tail].y < bars[ed.head].y))
      rep.violations.push_back(
          {ViolationKind::DirectionViolation,
           pair_ent(g.name(ed.tail), g.name(ed.head)),
           std::string(color) + " bar order does not follow the edge"});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !(bars[a].y < bars[b].y)) continue;
      bool vis = sightline_exists(bars, a, b, eps);
      bool edge = eset.count({a, b}) || eset.count({b, a});
      if (vis && !edge)
        rep.violations.push_back({ViolationKind::SpuriousVisibility,
                                  pair_ent(g.name(a), g.name(b)),
                                  std::string(color) + " sightline without edge"});
      if (!vis && edge)
        rep.violations.push_back({ViolationKind::MissingVisibility,
                                  pair_ent(g.name(a), g.name(b)),
                                  std::string(color) + " edge without sightline"});
    }
  }
  // Drawn segments: touch exactly the endpoint bars, cross no bar of either
  // color.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const SegmentRect& s = segs[e];
    const Edge& ed = g.edge(e);
    const Bar& tb = bars[ed.tail];
    const Bar& hb = bars[ed.head];
    Rat ylo = Rat::min(s.y0, s.y1), yhi = Rat::max(s.y0, s.y1);
    bool anchored = s.y0 == tb.y && s.y1 == hb.y && tb.x0 <= s.x0 &&
                    s.x1 <= tb.x1 && hb.x0 <= s.x0 && s.x1 <= hb.x1;
    if (!anchored)
      rep.violations.push_back({ViolationKind::MissingVisibility,
                                pair_ent(g.name(ed.tail), g.name(ed.head)),
                                std::string(color) + " drawn segment detached"});
    for (int c = 0; c < n; ++c) {
      if (c == ed.tail || c == ed.head) continue;
      if (ylo < bars[c].y && bars[c].y < yhi && !(bars[c].x1 < s.x0) &&
          !(s.x1 < bars[c].x0))
        rep.violations.push_back({ViolationKind::SpuriousVisibility,
                                  pair_ent(g.name(ed.tail), g.name(ed.head)),
                                  std::string(color) + " segment crosses bar of " +
                                      g.name(c)});
    }
    for (const Bar& ob : other_bars) {
      // Other color's bars arrive transposed: vertical lines in this frame.
      if (s.x0 <= ob.y && ob.y <= s.x1 && !(ob.x1 < ylo) && !(yhi < ob.x0))
        rep.violations.push_back({ViolationKind::SpuriousVisibility,
                                  pair_ent(g.name(ed.tail), g.name(ed.head)),
                                  std::string(color) +
                                      " segment crosses a bar of the other color"});
    }
  }
  // Embedding order: outgoing segments left to right and incoming segments
  // left to right must both match the rotation blocks.
  for (VertexId v = 0; v < n; ++v) {
    auto recovered = [&](const std::vector<EdgeId>& block) {
      std::vector<std::pair<Rat, EdgeId>> order;
      for (EdgeId e : block) order.push_back({segs[e].x0, e});
      std::sort(order.begin(), order.end(),
                [](const auto& p, const auto& q) { return p.first < q.first; });
      std::vector<EdgeId> ids;
      for (auto& [x, e] : order) ids.push_back(e);
      return ids;
    };
    if (recovered(g.out_edges(v)) != g.out_edges(v) ||
        recovered(g.in_edges(v)) != g.in_edges(v))
      rep.violations.push_back({ViolationKind::EmbeddingOrderViolation,
                                g.name(v),
                                std::string(color) + " segment order != rotation"});
  }
}

}  // namespace

ValidationReport validate_bar_drawing(const BarDrawing& b, const PlaneStGraph& g) {
  ValidationReport rep;
  check_color(rep, g, b.bars, b.segments, b.eps, {}, "red");
  return rep;
}

ValidationReport validate_drawing(const LsvrDrawing& d, const InstancePair& inst,
                                  const PhiAssignment& phi) {
  ValidationReport rep;
  const int k = inst.shared_count();
  // 1) Corner orientation per rotation.
  for (int i = 0; i < k; ++i) {
    const LShape& sh = d.shapes[i];
    bool ok = sh.hbar_x0 < sh.hbar_x1 && sh.vbar_y0 < sh.vbar_y1 &&
              sh.rot == phi[i] && sh.hbar_y == sh.corner_y &&
              sh.vbar_x == sh.corner_x;
    if (ok) {
      Coord hx = f_r_is_left(sh.rot) ? sh.hbar_x0 : sh.hbar_x1;
      Coord vy = f_b_is_right(sh.rot) ? sh.vbar_y0 : sh.vbar_y1;
      ok = hx == sh.corner_x && vy == sh.corner_y;
    }
    if (!ok)
      rep.violations.push_back({ViolationKind::ShapeRotationMismatch,
                                inst.shared[i],
                                "bars do not meet at the corner for " +
                                    std::string(rot_name(phi[i]))});
  }
  // 2) Pairwise L-shape (and pole bar) disjointness.
  {
    struct Owned { Seg s; int owner; };
    std::vector<Owned> all;
    for (int i = 0; i < k; ++i) {
      const LShape& sh = d.shapes[i];
      all.push_back({{true, Rat(sh.hbar_y), Rat(sh.hbar_x0), Rat(sh.hbar_x1)}, i});
      all.push_back({{false, Rat(sh.vbar_x), Rat(sh.vbar_y0), Rat(sh.vbar_y1)}, i});
    }
    auto add_pole = [&](const PoleBar& p, int id) {
      all.push_back({{p.horizontal, Rat(p.fixed), Rat(p.lo), Rat(p.hi)}, id});
    };
    add_pole(d.pole_sr, k + 0);
    add_pole(d.pole_tr, k + 1);
    add_pole(d.pole_sb, k + 2);
    add_pole(d.pole_tb, k + 3);
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = i + 1; j < all.size(); ++j) {
        if (all[i].owner == all[j].owner) continue;
        if (segs_intersect(all[i].s, all[j].s)) {
          auto nm = [&](int o) {
            return o < k ? inst.shared[o] : d.pole_names[o - k];
          };
          rep.violations.push_back({ViolationKind::LShapeOverlap,
                                    pair_ent(nm(all[i].owner), nm(all[j].owner)),
                                    "bars intersect"});
        }
      }
    }
  }
  // 3)+(4) Per-color visibility, direction, drawn segments, embedding order.
  Rat eps_scaled(2 * (d.big_n + 1));  // eps * scale
  auto red_bars = [&] {
    std::vector<Bar> bars(inst.red.vertex_count());
    for (int i = 0; i < k; ++i) {
      const LShape& sh = d.shapes[i];
      bars[inst.red_vertex[i]] =
          Bar{Rat(sh.hbar_y), Rat(sh.hbar_x0), Rat(sh.hbar_x1)};
    }
    bars[inst.red.source()] = Bar{Rat(d.pole_sr.fixed), Rat(d.pole_sr.lo), Rat(d.pole_sr.hi)};
    bars[inst.red.sink()] = Bar{Rat(d.pole_tr.fixed), Rat(d.pole_tr.lo), Rat(d.pole_tr.hi)};
    return bars;
  }();
  auto blue_bars = [&] {  // transposed: x becomes the bar line
    std::vector<Bar> bars(inst.blue.vertex_count());
    for (int i = 0; i < k; ++i) {
      const LShape& sh = d.shapes[i];
      bars[inst.blue_vertex[i]] =
          Bar{Rat(sh.vbar_x), Rat(sh.vbar_y0), Rat(sh.vbar_y1)};
    }
    bars[inst.blue.source()] = Bar{Rat(d.pole_sb.fixed), Rat(d.pole_sb.lo), Rat(d.pole_sb.hi)};
    bars[inst.blue.sink()] = Bar{Rat(d.pole_tb.fixed), Rat(d.pole_tb.lo), Rat(d.pole_tb.hi)};
    return bars;
  }();
  std::vector<SegmentRect> red_segs(inst.red.edge_count());
  for (EdgeId e = 0; e < inst.red.edge_count(); ++e) {
    const DrawnSegment& s = d.red_segments[e];
    red_segs[e] = SegmentRect{e, Rat(s.x0), Rat(s.x1), Rat(s.y0), Rat(s.y1)};
  }
  std::vector<SegmentRect> blue_segs(inst.blue.edge_count());
  for (EdgeId e = 0; e < inst.blue.edge_count(); ++e) {
    // Transpose so the sightline machinery applies unchanged.
    const DrawnSegment& s = d.blue_segments[e];
    blue_segs[e] = SegmentRect{e, Rat(s.y0), Rat(s.y1), Rat(s.x0), Rat(s.x1)};
  }
  check_color(rep, inst.red, red_bars, red_segs, eps_scaled, blue_bars, "red");
  check_color(rep, inst.blue, blue_bars, blue_segs, eps_scaled, red_bars, "blue");
  return rep;
}

std::vector<PhiAssignment> enumerate_phi(const InstancePair& inst) {
  const int k = inst.shared_count();
  if (k > 12) throw TooLargeError("enumerate_phi limited to 12 shared vertices");
  std::vector<PhiAssignment> accepted;
  const Rot rots[4] = {Rot::R1, Rot::R2, Rot::R3, Rot::R4};
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    PhiAssignment phi;
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) { phi.rot.push_back(rots[c % 4]); c /= 4; }
    if (test_transversal(inst, phi).accepted) accepted.push_back(phi);
  }
  return accepted;
}

std::vector<TraversingPath> enumerate_traversing_paths(const InstancePair& inst,
                                                       const DualGraph& dual_r,
                                                       const PhiAssignment& phi,
                                                       EdgeId blue_edge) {
  if (dual_r.node_count() > 13)
    throw TooLargeError("enumerate_traversing_paths limited to 12 dual faces");
  BlueRelations rel = BlueRelations::compute(inst.blue);
  VertexId u = inst.blue.edge(blue_edge).tail;
  VertexId v = inst.blue.edge(blue_edge).head;
  auto endpoint_node = [&](VertexId bv) {
    if (bv == inst.blue.source()) return dual_r.source_node();
    if (bv == inst.blue.sink()) return dual_r.sink_node();
    int s = inst.shared_of_blue[bv];
    return phi_face_red(inst, dual_r, s, phi[s]);
  };
  int start = endpoint_node(u), goal = endpoint_node(v);

  auto satisfies_rules = [&](const TraversingPath& p) {
    for (int i = 0; i < (int)p.crossed.size(); ++i) {
      int f = p.nodes[i];
      const auto& rpv = dual_r.right_path_vertices(f);
      const auto& rpe = dual_r.right_path_edges(f);
      int j = -1;
      for (int q = 0; q < (int)rpe.size(); ++q)
        if (rpe[q] == p.crossed[i]) { j = q; break; }
      if (j < 0) return false;
      for (int q = 0; q < (int)rpv.size(); ++q) {
        int sw = inst.shared_of_red[rpv[q]];
        if (sw < 0) continue;
        CutLabel lab = cut_label(inst, rel, phi, sw, blue_edge);
        if (lab == CutLabel::Conflict) return false;
        if (lab == CutLabel::Above && q > j) return false;
        if (lab == CutLabel::Below && q < j + 1) return false;
      }
    }
    return true;
  };

  std::vector<TraversingPath> found;
  TraversingPath cur;
  cur.blue_edge = blue_edge;
  cur.nodes.push_back(start);
  std::vector<char> on_path(dual_r.node_count(), 0);
  on_path[start] = 1;
  std::vector<std::vector<EdgeId>> out_by_node(dual_r.node_count());
  for (EdgeId e = 0; e < inst.red.edge_count(); ++e)
    out_by_node[dual_r.edge(e).tail].push_back(e);
  auto dfs = [&](auto&& self, int node) -> void {
    if (node == goal) {
      if (satisfies_rules(cur)) found.push_back(cur);
      return;  // the dual is acyclic: no simple path continues past the goal
    }
    for (EdgeId e : out_by_node[node]) {
      int next = dual_r.edge(e).head;
      if (on_path[next]) continue;
      on_path[next] = 1;
      cur.crossed.push_back(e);
      cur.nodes.push_back(next);
      self(self, next);
      cur.nodes.pop_back();
      cur.crossed.pop_back();
      on_path[next] = 0;
    }
  };
  dfs(dfs, start);
  return found;
}

namespace {

struct PSeg {
  Coord x0, y0, x1, y1;
  int poly;
  bool red;
};

int sign128(__int128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

int orient(Coord ax, Coord ay, Coord bx, Coord by, Coord cx, Coord cy) {
  return sign128((__int128)(bx - ax) * (cy - ay) - (__int128)(by - ay) * (cx - ax));
}

bool on_segment(Coord ax, Coord ay, Coord bx, Coord by, Coord px, Coord py) {
  return orient(ax, ay, bx, by, px, py) == 0 && std::min(ax, bx) <= px &&
         px <= std::max(ax, bx) && std::min(ay, by) <= py && py <= std::max(ay, by);
}

// 0: disjoint, 1: touch at a shared endpoint of both, 2: anything else.
int seg_relation(const PSeg& a, const PSeg& b) {
  int o1 = orient(a.x0, a.y0, a.x1, a.y1, b.x0, b.y0);
  int o2 = orient(a.x0, a.y0, a.x1, a.y1, b.x1, b.y1);
  int o3 = orient(b.x0, b.y0, b.x1, b.y1, a.x0, a.y0);
  int o4 = orient(b.x0, b.y0, b.x1, b.y1, a.x1, a.y1);
  bool inter = (o1 != o2 && o3 != o4 && o1 && o2 && o3 && o4);
  if (inter) return 2;
  bool any_touch = false;
  auto endpoint_of = [&](Coord px, Coord py, const PSeg& s) {
    return (px == s.x0 && py == s.y0) || (px == s.x1 && py == s.y1);
  };
  for (auto [px, py] : {std::pair(b.x0, b.y0), std::pair(b.x1, b.y1)}) {
    if (on_segment(a.x0, a.y0, a.x1, a.y1, px, py)) {
      if (!endpoint_of(px, py, a)) return 2;
      any_touch = true;
    }
  }
  for (auto [px, py] : {std::pair(a.x0, a.y0), std::pair(a.x1, a.y1)}) {
    if (on_segment(b.x0, b.y0, b.x1, b.y1, px, py)) {
      if (!endpoint_of(px, py, b)) return 2;
      any_touch = true;
    }
  }
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: forbid overlap beyond a single shared endpoint.
    int touches = 0;
    for (auto [px, py] : {std::pair(b.x0, b.y0), std::pair(b.x1, b.y1)})
      if (on_segment(a.x0, a.y0, a.x1, a.y1, px, py)) ++touches;
    for (auto [px, py] : {std::pair(a.x0, a.y0), std::pair(a.x1, a.y1)})
      if (on_segment(b.x0, b.y0, b.x1, b.y1, px, py)) ++touches;
    if (touches > 2) return 2;
  }
  return any_touch ? 1 : 0;
}

}  // namespace

SreReport check_sre(const PolylineDrawing& p) {
  SreReport rep;
  std::vector<PSeg> segs;
  for (int i = 0; i < (int)p.polylines.size(); ++i) {
    const Polyline& pl = p.polylines[i];
    int bends = (int)pl.points.size() - 2;
    rep.max_bends = std::max(rep.max_bends, bends);
    if (bends > 2) {
      rep.pass = false;
      rep.problems.push_back("polyline with more than two bends");
    }
    for (size_t j = 0; j + 1 < pl.points.size(); ++j)
      segs.push_back({pl.points[j].first, pl.points[j].second,
                      pl.points[j + 1].first, pl.points[j + 1].second, i, pl.red});
  }
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].poly == segs[j].poly) continue;
      int rel = seg_relation(segs[i], segs[j]);
      if (rel == 0) continue;
      if (rel == 1) {
        // Shared endpoint: fine when the polylines share a vertex point.
        continue;
      }
      if (segs[i].red == segs[j].red) {
        rep.pass = false;
        rep.problems.push_back("same-color crossing");
        continue;
      }
      bool i_axis = segs[i].x0 == segs[i].x1 || segs[i].y0 == segs[i].y1;
      bool j_axis = segs[j].x0 == segs[j].x1 || segs[j].y0 == segs[j].y1;
      bool perp = i_axis && j_axis &&
                  ((segs[i].x0 == segs[i].x1) != (segs[j].x0 == segs[j].x1));
      if (!perp) {
        rep.pass = false;
        rep.problems.push_back("crossing not at a right angle");
      } else {
        ++rep.crossings;
      }
    }
  }
  return rep;
}

}  // namespace lsvr
