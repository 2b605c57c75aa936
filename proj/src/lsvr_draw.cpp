#include "lsvr/lsvr_draw.hpp"

#include <algorithm>

namespace lsvr {

Rat choose_delta(const std::vector<int>& n_r, const std::vector<int>& n_b,
                 const std::vector<int>& n_r_star,
                 const std::vector<int>& n_b_star, Rat eps) {
  std::int64_t n = 1;
  for (auto* v : {&n_r, &n_b, &n_r_star, &n_b_star})
    for (int x : *v) n = std::max<std::int64_t>(n, x);
  return Rat::min(eps / Rat(2), Rat(1, 2 * (n + 1) * (n + 1)));
}

LsvrDrawing draw_lsvr(const InstancePair& inst, const PhiAssignment& phi,
                      const Verdict* verdict) {
  if ((int)phi.rot.size() != inst.shared_count())
    throw GraphError(GraphErrorKind::SemanticError,
                     "rotation assignment is not total on the shared vertices");
  const PlaneStGraph& red = inst.red;
  const PlaneStGraph& blue = inst.blue;
  DualGraph dual_r = DualGraph::build(red, DualConvention::LeftToRight);
  DualGraph dual_b = DualGraph::build(blue, DualConvention::RightToLeft);
  std::vector<int> n_r = red.topological_numbering();
  std::vector<int> n_b = blue.topological_numbering();
  const std::vector<int>& x_r = dual_r.numbering();
  const std::vector<int>& x_b = dual_b.numbering();

  Coord N = 1;
  for (auto* v : {&n_r, &n_b}) for (int q : *v) N = std::max<Coord>(N, q);
  for (auto* v : {&x_r, &x_b}) for (int q : *v) N = std::max<Coord>(N, q);

  LsvrDrawing d;
  d.big_n = N;
  d.scale = 4 * (N + 1) * (N + 1);
  d.eps = Rat(1, 2 * (N + 1));
  d.delta = choose_delta(n_r, n_b, x_r, x_b, d.eps);
  d.tested = verdict && verdict->accepted;
  d.shared_names = inst.shared;
  d.pole_names = {red.name(red.source()), red.name(red.sink()),
                  blue.name(blue.source()), blue.name(blue.sink())};

  const Coord S = d.scale;
  const Coord EPS_S = 2 * (N + 1);   // S * eps
  const Coord TRIM = 4 * (N + 1);    // S * 2eps
  const Coord ZLO = 2 * N + 1;       // segment strip offset within a face lane
  const Coord ZHI = ZLO + EPS_S;

  // Composite y-coordinates, scaled: base face number * S plus 2*numbering
  // (2 == S*delta). Poles sit at the extremes.
  std::vector<Coord> yr(red.vertex_count());   // by red vertex id
  std::vector<Coord> yb(blue.vertex_count());  // by blue vertex id
  for (int i = 0; i < inst.shared_count(); ++i) {
    VertexId rv = inst.red_vertex[i];
    VertexId bv = inst.blue_vertex[i];
    int fr = phi_face_red(inst, dual_r, i, phi[i]);
    int fb = phi_face_blue(inst, dual_b, i, phi[i]);
    yr[rv] = (Coord)x_b[fb] * S + 2 * n_r[rv];
    yb[bv] = (Coord)x_r[fr] * S + 2 * n_b[bv];
  }
  yr[red.source()] = 0;
  yr[red.sink()] = (N + 1) * S;
  yb[blue.source()] = 0;
  yb[blue.sink()] = (N + 1) * S;

  d.shapes.resize(inst.shared_count());
  for (int i = 0; i < inst.shared_count(); ++i) {
    VertexId rv = inst.red_vertex[i];
    VertexId bv = inst.blue_vertex[i];
    Rot rot = phi[i];
    LShape& sh = d.shapes[i];
    sh.rot = rot;
    sh.corner_x = yb[bv];
    sh.corner_y = yr[rv];
    Coord shift_b = 2 * n_b[bv];
    Coord shift_r = 2 * n_r[rv];
    Coord xl = (Coord)x_r[dual_r.tail_node(red.left_face_of_vertex(rv))] * S;
    Coord xr_ = (Coord)x_r[dual_r.head_node(red.right_face_of_vertex(rv))] * S;
    sh.hbar_y = yr[rv];
    sh.hbar_x0 = xl + shift_b;
    sh.hbar_x1 = f_r_is_left(rot) ? xr_ - TRIM : xr_ + shift_b;
    Coord ylo = (Coord)x_b[dual_b.tail_node(blue.right_face_of_vertex(bv))] * S;
    Coord yhi = (Coord)x_b[dual_b.head_node(blue.left_face_of_vertex(bv))] * S;
    sh.vbar_x = yb[bv];
    sh.vbar_y0 = ylo + shift_r;
    sh.vbar_y1 = f_b_is_right(rot) ? yhi - TRIM : yhi + shift_r;
  }

  auto pole_span = [&](const DualGraph& dg, const std::vector<int>& x) {
    return std::pair<Coord, Coord>{(Coord)x[dg.source_node()] * S,
                                   (Coord)x[dg.sink_node()] * S - TRIM};
  };
  auto [rx0, rx1] = pole_span(dual_r, x_r);
  d.pole_sr = PoleBar{true, 0, rx0, rx1};
  d.pole_tr = PoleBar{true, (N + 1) * S, rx0, rx1};
  auto [by0, by1] = pole_span(dual_b, x_b);
  d.pole_sb = PoleBar{false, 0, by0, by1};
  d.pole_tb = PoleBar{false, (N + 1) * S, by0, by1};

  auto ref_of = [&](const PlaneStGraph& g, const std::vector<int>& shared_of,
                    VertexId v) {
    if (v == g.source()) return kRefSourcePole;
    if (v == g.sink()) return kRefSinkPole;
    return shared_of[v];
  };
  d.red_segments.resize(red.edge_count());
  for (EdgeId e = 0; e < red.edge_count(); ++e) {
    const Edge& ed = red.edge(e);
    Coord lane = (Coord)x_r[dual_r.edge(e).tail] * S;
    d.red_segments[e] = DrawnSegment{
        e, ref_of(red, inst.shared_of_red, ed.tail),
        ref_of(red, inst.shared_of_red, ed.head),
        lane + ZLO, lane + ZHI, yr[ed.tail], yr[ed.head]};
  }
  d.blue_segments.resize(blue.edge_count());
  for (EdgeId e = 0; e < blue.edge_count(); ++e) {
    const Edge& ed = blue.edge(e);
    Coord lane = (Coord)x_b[dual_b.edge(e).tail] * S;
    d.blue_segments[e] = DrawnSegment{
        e, ref_of(blue, inst.shared_of_blue, ed.tail),
        ref_of(blue, inst.shared_of_blue, ed.head),
        yb[ed.tail], yb[ed.head], lane + ZLO, lane + ZHI};
  }
  return d;
}

namespace {

void push_simplified(std::vector<std::pair<Coord, Coord>>& pts,
                     std::pair<Coord, Coord> p) {
  if (!pts.empty() && pts.back() == p) return;
  if (pts.size() >= 2) {
    auto& a = pts[pts.size() - 2];
    auto& b = pts.back();
    __int128 cross = (__int128)(b.first - a.first) * (p.second - a.second) -
                     (__int128)(b.second - a.second) * (p.first - a.first);
    if (cross == 0) {
      b = p;  // collinear: extend
      return;
    }
  }
  pts.push_back(p);
}

}  // namespace

PolylineDrawing to_sre(const LsvrDrawing& d) {
  PolylineDrawing p;
  p.scale = 4 * d.scale;
  p.shared_names = d.shared_names;
  p.pole_names = d.pole_names;
  const Coord N = d.big_n;
  const Coord S = d.scale;
  p.vertex_points.resize(d.shapes.size());
  for (size_t i = 0; i < d.shapes.size(); ++i)
    p.vertex_points[i] = {4 * d.shapes[i].corner_x, 4 * d.shapes[i].corner_y};
  p.pole_points[0] = {4 * S, 0};                        // s_r
  p.pole_points[1] = {4 * S, 4 * (N + 1) * S};          // t_r
  p.pole_points[2] = {0, 4 * S};                        // s_b
  p.pole_points[3] = {4 * (N + 1) * S, 4 * S};          // t_b

  auto point_of = [&](int ref, bool red_color) -> std::pair<Coord, Coord> {
    if (ref >= 0) return p.vertex_points[ref];
    int base = red_color ? 0 : 2;
    return p.pole_points[ref == kRefSourcePole ? base : base + 1];
  };

  auto convert = [&](const DrawnSegment& s, bool red_color) {
    Polyline line;
    line.edge = s.edge;
    line.red = red_color;
    auto a = point_of(s.tail_ref, red_color);
    auto b = point_of(s.head_ref, red_color);
    std::vector<std::pair<Coord, Coord>> pts;
    push_simplified(pts, a);
    if (red_color) {
      Coord spine = 2 * (s.x0 + s.x1);  // 4 * lane center
      push_simplified(pts, {spine, a.second + 1});
      push_simplified(pts, {spine, b.second - 1});
    } else {
      Coord spine = 2 * (s.y0 + s.y1);
      push_simplified(pts, {a.first + 1, spine});
      push_simplified(pts, {b.first - 1, spine});
    }
    push_simplified(pts, b);
    line.points = std::move(pts);
    return line;
  };
  for (const auto& s : d.red_segments) p.polylines.push_back(convert(s, true));
  for (const auto& s : d.blue_segments) p.polylines.push_back(convert(s, false));
  return p;
}

}  // namespace lsvr
