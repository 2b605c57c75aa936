#include "lsvr/transversal.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lsvr {

const char* verdict_reason_name(Verdict::Reason r) {
  switch (r) {
    case Verdict::Reason::None: return "None";
    case Verdict::Reason::NoTraversingPath: return "NoTraversingPath";
    case Verdict::Reason::LabelConflict: return "LabelConflict";
    case Verdict::Reason::AmbiguousCut: return "AmbiguousCut";
    case Verdict::Reason::BlueBlueCrossing: return "BlueBlueCrossing";
    case Verdict::Reason::NonContiguousIntersection: return "NonContiguousIntersection";
  }
  return "?";
}

BlueRelations BlueRelations::compute(const PlaneStGraph& blue) {
  const int n = blue.vertex_count();
  BlueRelations r;
  r.desc.assign(n, std::vector<char>(n, 0));
  r.anc.assign(n, std::vector<char>(n, 0));
  r.left.assign(n, std::vector<char>(n, 0));
  r.right.assign(n, std::vector<char>(n, 0));
  for (VertexId x = 0; x < n; ++x) {
    r.desc[x] = blue.descendants(x);
    r.anc[x] = blue.ancestors(x);
    if (x == blue.source() || x == blue.sink()) continue;
    auto reg = blue.reachability_sets(x);
    for (VertexId w : reg.left) r.left[x][w] = 1;
    for (VertexId w : reg.right) r.right[x][w] = 1;
  }
  return r;
}

int phi_face_red(const InstancePair& inst, const DualGraph& dual_r,
                 int shared_idx, Rot rot) {
  VertexId rv = inst.red_vertex[shared_idx];
  if (f_r_is_left(rot))
    return dual_r.tail_node(inst.red.left_face_of_vertex(rv));
  return dual_r.head_node(inst.red.right_face_of_vertex(rv));
}

int phi_face_blue(const InstancePair& inst, const DualGraph& dual_b,
                  int shared_idx, Rot rot) {
  VertexId bv = inst.blue_vertex[shared_idx];
  if (f_b_is_right(rot))
    return dual_b.tail_node(inst.blue.right_face_of_vertex(bv));
  return dual_b.head_node(inst.blue.left_face_of_vertex(bv));
}

namespace {

// Start node of a blue edge's route in the red dual; blue poles attach to the
// split outer regions.
int route_endpoint_node(const InstancePair& inst, const DualGraph& dual_r,
                        const PhiAssignment& phi, VertexId blue_v) {
  if (blue_v == inst.blue.source()) return dual_r.source_node();
  if (blue_v == inst.blue.sink()) return dual_r.sink_node();
  int s = inst.shared_of_blue[blue_v];
  return phi_face_red(inst, dual_r, s, phi[s]);
}

enum class Vote { None, Above, Below, Reject };

void add_vote(Vote& acc, Vote v) {
  if (v == Vote::None) return;
  if (acc == Vote::None) { acc = v; return; }
  if (acc != v) acc = Vote::Reject;
}

// Side of the subtree containing w within u's outgoing fan, relative to e.
Vote subtree_side(const PlaneStGraph& blue, const BlueRelations& rel,
                  VertexId u, VertexId w, EdgeId e) {
  bool left_seen = false, right_seen = false, before = true;
  for (EdgeId out : blue.out_edges(u)) {
    if (out == e) { before = false; continue; }
    VertexId h = blue.edge(out).head;
    if (h == w || rel.desc[h][w]) (before ? left_seen : right_seen) = true;
  }
  if (left_seen && right_seen) return Vote::Reject;
  if (left_seen) return Vote::Below;   // fan to the left of e: e passes below w
  if (right_seen) return Vote::Above;  // fan to the right: e passes above w
  return Vote::None;
}

}  // namespace

CutLabel cut_label(const InstancePair& inst, const BlueRelations& rel,
                   const PhiAssignment& phi, int shared_w, EdgeId blue_edge) {
  const PlaneStGraph& blue = inst.blue;
  VertexId u = blue.edge(blue_edge).tail;
  VertexId v = blue.edge(blue_edge).head;
  VertexId bw = inst.blue_vertex[shared_w];
  Rot rw = phi[shared_w];

  // The edge's own endpoints: the exit side at the origin and the passing
  // side at the destination are fixed by the rotation.
  if (bw == u) {
    if (rw == Rot::R1) return CutLabel::Above;
    if (rw == Rot::R4) return CutLabel::Below;
    return CutLabel::Free;
  }
  if (bw == v) {
    if (rw == Rot::R2) return CutLabel::Above;
    if (rw == Rot::R3) return CutLabel::Below;
    return CutLabel::Free;
  }

  Vote acc = Vote::None;
  bool cmp_u = rel.anc[u][bw] || rel.desc[u][bw] || bw == u;
  bool cmp_v = rel.anc[v][bw] || rel.desc[v][bw] || bw == v;
  // Side relative to any source-sink path through u and v: left means the
  // edge passes below w, right means above.
  if (!cmp_u) {
    if (rel.left[u][bw]) add_vote(acc, Vote::Below);
    if (rel.right[u][bw]) add_vote(acc, Vote::Above);
  }
  if (!cmp_v) {
    if (rel.left[v][bw]) add_vote(acc, Vote::Below);
    if (rel.right[v][bw]) add_vote(acc, Vote::Above);
  }
  if (rel.anc[u][bw]) {
    // w can reach u, so its attachment face is the traversed one.
    if (rw == Rot::R1) add_vote(acc, Vote::Above);
    else if (rw == Rot::R4) add_vote(acc, Vote::Below);
    else add_vote(acc, Vote::Reject);
  }
  if (rel.desc[v][bw]) {
    if (rw == Rot::R2) add_vote(acc, Vote::Above);
    else if (rw == Rot::R3) add_vote(acc, Vote::Below);
    else add_vote(acc, Vote::Reject);
  }
  if (acc == Vote::None && rel.desc[u][bw] && rel.anc[v][bw])
    add_vote(acc, subtree_side(blue, rel, u, bw, blue_edge));

  switch (acc) {
    case Vote::Above: return CutLabel::Above;
    case Vote::Below: return CutLabel::Below;
    case Vote::None: return CutLabel::Free;
    case Vote::Reject: return CutLabel::Conflict;
  }
  return CutLabel::Free;
}

PathResult traversing_path(const InstancePair& inst, const DualGraph& dual_r,
                           const BlueRelations& rel, const PhiAssignment& phi,
                           EdgeId blue_edge) {
  PathResult res;
  res.path.blue_edge = blue_edge;
  VertexId u = inst.blue.edge(blue_edge).tail;
  VertexId v = inst.blue.edge(blue_edge).head;
  int f = route_endpoint_node(inst, dual_r, phi, u);
  int goal = route_endpoint_node(inst, dual_r, phi, v);
  res.path.nodes.push_back(f);
  int guard = dual_r.node_count() + 1;
  while (f != goal) {
    if (--guard < 0)
      throw GraphError(GraphErrorKind::SemanticError, "traversing path loops");
    const auto& rpv = dual_r.right_path_vertices(f);
    const auto& rpe = dual_r.right_path_edges(f);
    if (rpe.empty()) {
      res.reason = Verdict::Reason::NoTraversingPath;
      res.face = f;
      res.detail = "outer region reached";
      return res;
    }
    std::string seq;
    int last_above = -1, first_below = (int)rpv.size();
    for (int i = 0; i < (int)rpv.size(); ++i) {
      VertexId rw = rpv[i];
      int sw = inst.shared_of_red[rw];
      CutLabel lab = CutLabel::Free;
      if (sw >= 0) lab = cut_label(inst, rel, phi, sw, blue_edge);
      if (lab == CutLabel::Conflict) {
        res.reason = Verdict::Reason::LabelConflict;
        res.face = f;
        res.vertex = rw;
        return res;
      }
      seq += lab == CutLabel::Above ? 'A' : lab == CutLabel::Below ? 'B' : '.';
      if (lab == CutLabel::Above) last_above = i;
      if (lab == CutLabel::Below && i < first_below) first_below = i;
    }
    // Cut edge j lies between vertices j and j+1; every Above label must be
    // at or before j, every Below label after it.
    int lo = std::max(last_above, 0);
    int hi = std::min(first_below - 1, (int)rpe.size() - 1);
    if (first_below <= last_above || hi < lo) {
      res.reason = Verdict::Reason::NoTraversingPath;
      res.face = f;
      res.detail = "label sequence " + seq;
      return res;
    }
    if (hi > lo) {
      res.reason = Verdict::Reason::AmbiguousCut;
      res.face = f;
      res.detail = "label sequence " + seq;
      return res;
    }
    EdgeId cut = rpe[lo];
    res.path.crossed.push_back(cut);
    f = dual_r.edge(cut).head;
    res.path.nodes.push_back(f);
  }
  res.ok = true;
  return res;
}

namespace {

struct Legs {
  int entry = -1, exit = -1;  // slot positions at a node
};

Legs legs_at(const InstancePair& inst, const DualGraph& dual_r,
             const TraversingPath& p, int node, int idx) {
  Legs l;
  const PlaneStGraph& blue = inst.blue;
  VertexId u = blue.edge(p.blue_edge).tail;
  VertexId v = blue.edge(p.blue_edge).head;
  auto attach_slot = [&](VertexId bv) {
    if (bv == blue.source() || bv == blue.sink()) return dual_r.wrap_slot(node);
    int s = inst.shared_of_blue[bv];
    return dual_r.vertex_slot(node, inst.red_vertex[s]);
  };
  l.entry = idx == 0 ? attach_slot(u) : dual_r.dart_slot(node, p.crossed[idx - 1]);
  l.exit = idx == (int)p.nodes.size() - 1
               ? attach_slot(v)
               : dual_r.dart_slot(node, p.crossed[idx]);
  return l;
}

bool interleaves(int a1, int a2, int b1, int b2, int mod) {
  if (a1 == a2 || a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 || b1 == b2)
    return false;
  auto inside = [&](int x) {  // x in cyclic open interval (a1, a2)
    int da = (a2 - a1 + mod) % mod;
    int dx = (x - a1 + mod) % mod;
    return dx > 0 && dx < da;
  };
  return inside(b1) != inside(b2);
}

}  // namespace

bool paths_cross(const InstancePair& inst, const DualGraph& dual_r,
                 const TraversingPath& a, const TraversingPath& b) {
  std::vector<std::pair<int, int>> common;  // (index in a, index in b)
  {
    std::vector<int> pos_b(dual_r.node_count(), -1);
    for (int i = 0; i < (int)b.nodes.size(); ++i) pos_b[b.nodes[i]] = i;
    for (int i = 0; i < (int)a.nodes.size(); ++i)
      if (pos_b[a.nodes[i]] >= 0) common.push_back({i, pos_b[a.nodes[i]]});
  }
  if (common.empty()) return false;
  for (int k = 1; k < (int)common.size(); ++k) {
    if (common[k].first != common[k - 1].first + 1 ||
        common[k].second != common[k - 1].second + 1)
      throw GraphError(GraphErrorKind::SemanticError,
                       "traversing paths intersect in more than one subpath");
  }
  // Per-face chord test.
  for (auto [ia, ib] : common) {
    int node = a.nodes[ia];
    Legs la = legs_at(inst, dual_r, a, node, ia);
    Legs lb = legs_at(inst, dual_r, b, node, ib);
    if (interleaves(la.entry, la.exit, lb.entry, lb.exit, dual_r.slot_count(node)))
      return true;
  }
  // Runs of shared dual edges: parallel stretches can still force a crossing
  // when the ends attach on swapped sides.
  int k = 0;
  while (k + 1 < (int)common.size()) {
    auto [ia, ib] = common[k];
    bool shared_edge = ia < (int)a.crossed.size() && ib < (int)b.crossed.size() &&
                       a.crossed[ia] == b.crossed[ib];
    if (!shared_edge) { ++k; continue; }
    int start = k;
    while (k + 1 < (int)common.size()) {
      auto [ja, jb] = common[k];
      if (ja < (int)a.crossed.size() && jb < (int)b.crossed.size() &&
          a.crossed[ja] == b.crossed[jb])
        ++k;
      else
        break;
    }
    int end = k;  // common[start..end] joined by shared edges
    int c0 = a.nodes[common[start].first];
    int cq = a.nodes[common[end].first];
    Legs ea = legs_at(inst, dual_r, a, c0, common[start].first);
    Legs eb = legs_at(inst, dual_r, b, c0, common[start].second);
    Legs xa = legs_at(inst, dual_r, a, cq, common[end].first);
    Legs xb = legs_at(inst, dual_r, b, cq, common[end].second);
    if (ea.entry == eb.entry || xa.exit == xb.exit) continue;
    int ref0 = dual_r.dart_slot(c0, a.crossed[common[start].first]);
    int refq = dual_r.dart_slot(cq, a.crossed[common[end].first - 1]);
    int l0 = dual_r.slot_count(c0), lq = dual_r.slot_count(cq);
    bool flag0 = (ref0 - ea.entry + l0) % l0 < (ref0 - eb.entry + l0) % l0;
    bool flagq = (refq - xa.exit + lq) % lq < (refq - xb.exit + lq) % lq;
    if (flag0 == flagq) return true;
  }
  return false;
}

Verdict test_transversal(const InstancePair& inst, const PhiAssignment& phi) {
  Verdict verdict;
  if (inst.shared_count() == 0)
    throw GraphError(GraphErrorKind::SemanticError, "no shared vertices");
  if ((int)phi.rot.size() != inst.shared_count())
    throw GraphError(GraphErrorKind::SemanticError,
                     "rotation assignment is not total on the shared vertices");
  DualGraph dual_r = DualGraph::build(inst.red, DualConvention::LeftToRight);
  BlueRelations rel = BlueRelations::compute(inst.blue);

  std::vector<TraversingPath> paths;
  for (EdgeId e = 0; e < inst.blue.edge_count(); ++e) {
    PathResult pr = traversing_path(inst, dual_r, rel, phi, e);
    if (!pr.ok) {
      verdict.reason = pr.reason;
      verdict.edge_a = e;
      verdict.face = pr.face;
      verdict.vertex = pr.vertex;
      verdict.detail = pr.detail;
      return verdict;
    }
    paths.push_back(std::move(pr.path));
  }
  for (EdgeId e1 = 0; e1 < (int)paths.size(); ++e1) {
    for (EdgeId e2 = e1 + 1; e2 < (int)paths.size(); ++e2) {
      bool cross;
      try {
        cross = paths_cross(inst, dual_r, paths[e1], paths[e2]);
      } catch (const GraphError&) {
        verdict.reason = Verdict::Reason::NonContiguousIntersection;
        verdict.edge_a = e1;
        verdict.edge_b = e2;
        return verdict;
      }
      if (cross) {
        verdict.reason = Verdict::Reason::BlueBlueCrossing;
        verdict.edge_a = e1;
        verdict.edge_b = e2;
        return verdict;
      }
    }
  }
  verdict.accepted = true;
  verdict.witness = std::move(paths);
  return verdict;
}

}  // namespace lsvr
