#include "lsvr/core_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace lsvr {

const char* graph_error_kind_name(GraphErrorKind k) {
  switch (k) {
    case GraphErrorKind::CyclicGraph: return "CyclicGraph";
    case GraphErrorKind::MultipleSourcesOrSinks: return "MultipleSourcesOrSinks";
    case GraphErrorKind::NonPlanarRotation: return "NonPlanarRotation";
    case GraphErrorKind::NonConsecutiveInOutEdges: return "NonConsecutiveInOutEdges";
    case GraphErrorKind::SourceSinkNotOnOuterFace: return "SourceSinkNotOnOuterFace";
    case GraphErrorKind::InvalidRotation: return "InvalidRotation";
    case GraphErrorKind::InvalidNumbering: return "InvalidNumbering";
    case GraphErrorKind::SemanticError: return "SemanticError";
  }
  return "UnknownError";
}

namespace {

void check_rotations_cover_edges(const std::vector<Edge>& edges,
                                 const std::vector<std::vector<EdgeId>>& rot,
                                 int n) {
  std::vector<std::multiset<EdgeId>> incident(n);
  for (EdgeId e = 0; e < (int)edges.size(); ++e) {
    if (edges[e].tail == edges[e].head)
      throw GraphError(GraphErrorKind::InvalidRotation, "self loop on vertex");
    incident[edges[e].tail].insert(e);
    incident[edges[e].head].insert(e);
  }
  for (VertexId v = 0; v < n; ++v) {
    std::multiset<EdgeId> listed(rot[v].begin(), rot[v].end());
    if (listed != incident[v])
      throw GraphError(GraphErrorKind::InvalidRotation,
                       "rotation list does not match incident edges at vertex");
  }
}

}  // namespace

PlaneStGraph PlaneStGraph::validate(const RawGraph& raw) {
  PlaneStGraph g;
  g.names_ = raw.names;
  const int n = (int)raw.names.size();
  if (n < 2)
    throw GraphError(GraphErrorKind::SemanticError,
                     "graph needs at least source and sink");
  for (auto& [t, h] : raw.edges) {
    if (t < 0 || t >= n || h < 0 || h >= n)
      throw GraphError(GraphErrorKind::SemanticError, "edge endpoint out of range");
    g.edges_.push_back(Edge{t, h, false});
  }
  g.rotations_ = raw.rotations;
  g.rotations_.resize(n);
  check_rotations_cover_edges(g.edges_, g.rotations_, n);

  // Degrees -> unique source and sink.
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (auto& e : g.edges_) { ++outdeg[e.tail]; ++indeg[e.head]; }
  VertexId s = -1, t = -1;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0) {
      if (s != -1)
        throw GraphError(GraphErrorKind::MultipleSourcesOrSinks,
                         "more than one source");
      s = v;
    }
    if (outdeg[v] == 0) {
      if (t != -1)
        throw GraphError(GraphErrorKind::MultipleSourcesOrSinks,
                         "more than one sink");
      t = v;
    }
  }
  if (s == -1 || t == -1)
    throw GraphError(GraphErrorKind::CyclicGraph, "no source or no sink");
  if (raw.source >= 0 && raw.source != s)
    throw GraphError(GraphErrorKind::MultipleSourcesOrSinks,
                     "declared source has incoming edges or is not unique");
  if (raw.sink >= 0 && raw.sink != t)
    throw GraphError(GraphErrorKind::MultipleSourcesOrSinks,
                     "declared sink has outgoing edges or is not unique");
  g.source_ = s;
  g.sink_ = t;

  // Acyclicity (Kahn).
  {
    std::vector<int> deg = indeg;
    std::deque<VertexId> q;
    for (VertexId v = 0; v < n; ++v)
      if (deg[v] == 0) q.push_back(v);
    std::vector<std::vector<VertexId>> succ(n);
    for (auto& e : g.edges_) succ[e.tail].push_back(e.head);
    int seen = 0;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop_front();
      ++seen;
      for (VertexId w : succ[v])
        if (--deg[w] == 0) q.push_back(w);
    }
    if (seen != n) throw GraphError(GraphErrorKind::CyclicGraph, "cycle detected");
  }

  // Ensure the (s,t) edge exists; insert it as the leftmost edge at both
  // poles so it lies on the outer boundary.
  bool have_st = false;
  for (auto& e : g.edges_)
    if (e.tail == s && e.head == t) have_st = true;
  if (!have_st) {
    EdgeId e = (EdgeId)g.edges_.size();
    g.edges_.push_back(Edge{s, t, true});
    g.rotations_[s].insert(g.rotations_[s].begin(), e);
    g.rotations_[t].push_back(e);
  }

  const int m = (int)g.edges_.size();

  // In/out blocks must be consecutive in every rotation.
  g.out_order_.assign(n, {});
  g.in_order_.assign(n, {});
  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = g.rotations_[v];
    int deg = (int)rot.size();
    if (deg == 0)
      throw GraphError(GraphErrorKind::SemanticError, "isolated vertex");
    auto outgoing = [&](int i) { return g.edges_[rot[i]].tail == v; };
    int switches = 0;
    for (int i = 0; i < deg; ++i)
      if (outgoing(i) != outgoing((i + 1) % deg)) ++switches;
    if (switches > 2)
      throw GraphError(GraphErrorKind::NonConsecutiveInOutEdges,
                       "in/out edges not consecutive at " + g.names_[v]);
    // Out-block starts at the outgoing edge whose predecessor is incoming;
    // at the source it starts at the list front (pinned convention).
    int start = -1;
    if (v == s) {
      start = 0;
    } else {
      for (int i = 0; i < deg; ++i)
        if (outgoing(i) && !outgoing((i + deg - 1) % deg)) { start = i; break; }
    }
    if (start >= 0) {
      for (int i = 0; i < deg; ++i) {
        int k = (start + i) % deg;
        if (!outgoing(k)) break;
        g.out_order_[v].push_back(rot[k]);
      }
    }
    // In-block in clockwise order runs rightmost to leftmost; record it
    // leftmost-first for symmetric use.
    int istart = -1;
    if (v == t) {
      istart = 0;
    } else {
      for (int i = 0; i < deg; ++i)
        if (!outgoing(i) && outgoing((i + deg - 1) % deg)) { istart = i; break; }
    }
    if (istart >= 0) {
      std::vector<EdgeId> cw_in;
      for (int i = 0; i < deg; ++i) {
        int k = (istart + i) % deg;
        if (outgoing(k)) break;
        cw_in.push_back(rot[k]);
      }
      g.in_order_[v].assign(cw_in.rbegin(), cw_in.rend());
    }
  }

  // Face tracing: the face lies on the left of each dart; the next dart
  // leaves through the clockwise successor of the reversed dart.
  std::vector<std::vector<int>> pos(n);  // per vertex: rotation index by edge
  for (VertexId v = 0; v < n; ++v) {
    pos[v].assign(m, -1);
    for (int i = 0; i < (int)g.rotations_[v].size(); ++i)
      pos[v][g.rotations_[v][i]] = i;
  }
  auto next_dart = [&](int d) {
    EdgeId e = dart_edge(d);
    VertexId v = dart_is_rev(d) ? g.edges_[e].tail : g.edges_[e].head;
    const auto& rot = g.rotations_[v];
    int i = pos[v][e];
    EdgeId f = rot[(i + 1) % rot.size()];
    return g.edges_[f].tail == v ? dart_fwd(f) : dart_rev(f);
  };

  g.face_of_dart_.assign(2 * m, -1);
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (g.face_of_dart_[d0] != -1) continue;
    FaceId f = (FaceId)g.faces_.size();
    Face face;
    int d = d0;
    do {
      g.face_of_dart_[d] = f;
      face.walk.push_back(d);
      d = next_dart(d);
    } while (d != d0);
    g.faces_.push_back(std::move(face));
  }

  // Euler check over the rotation-induced face set.
  if (n - m + (int)g.faces_.size() != 2)
    throw GraphError(GraphErrorKind::NonPlanarRotation,
                     "rotation system is not a planar embedding (V-E+F != 2)");

  // Each face boundary must decompose into one forward and one reverse run.
  for (auto& face : g.faces_) {
    int len = (int)face.walk.size();
    int flips = 0;
    for (int i = 0; i < len; ++i)
      if (dart_is_rev(face.walk[i]) != dart_is_rev(face.walk[(i + 1) % len]))
        ++flips;
    if ((len > 1 && flips != 2) || (len == 1))
      throw GraphError(GraphErrorKind::NonConsecutiveInOutEdges,
                       "face is not bounded by two directed paths");
    // Rotate the walk to start with the first forward dart.
    int start = 0;
    for (int i = 0; i < len; ++i) {
      if (!dart_is_rev(face.walk[i]) &&
          dart_is_rev(face.walk[(i + len - 1) % len])) {
        start = i;
        break;
      }
    }
    std::rotate(face.walk.begin(), face.walk.begin() + start, face.walk.end());
    for (int d : face.walk) {
      EdgeId e = dart_edge(d);
      if (!dart_is_rev(d)) {
        face.right_edges.push_back(e);
      } else {
        face.left_edges.push_back(e);
      }
    }
    std::reverse(face.left_edges.begin(), face.left_edges.end());
    face.low = g.edges_[face.right_edges.front()].tail;
    face.high = g.edges_[face.right_edges.back()].head;
    face.right_vertices.push_back(face.low);
    for (EdgeId e : face.right_edges) face.right_vertices.push_back(g.edges_[e].head);
    face.left_vertices.push_back(face.low);
    for (EdgeId e : face.left_edges) face.left_vertices.push_back(g.edges_[e].head);
    if (face.left_vertices.back() != face.high)
      throw GraphError(GraphErrorKind::NonConsecutiveInOutEdges,
                       "face boundary paths do not share endpoints");
  }

  // Outer face: the corner between the last and first rotation entries at s.
  {
    EdgeId f0 = g.rotations_[s].front();
    g.outer_ = g.face_of_dart_[dart_fwd(f0)];
    g.faces_[g.outer_].outer = true;
    EdgeId t0 = g.rotations_[t].front();
    int dt = g.edges_[t0].tail == t ? dart_fwd(t0) : dart_rev(t0);
    if (g.face_of_dart_[dt] != g.outer_)
      throw GraphError(GraphErrorKind::SourceSinkNotOnOuterFace,
                       "source and sink corners disagree on the outer face");
    if (g.faces_[g.outer_].low != s || g.faces_[g.outer_].high != t)
      throw GraphError(GraphErrorKind::SourceSinkNotOnOuterFace,
                       "outer face is not bounded by source-to-sink paths");
  }

  // Vertex left/right faces via the corner darts.
  g.left_face_v_.assign(n, -1);
  g.right_face_v_.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (v == s || v == t) {
      g.left_face_v_[v] = g.outer_;
      g.right_face_v_[v] = g.outer_;
      continue;
    }
    EdgeId lo = g.out_order_[v].front();  // leftmost outgoing
    g.left_face_v_[v] = g.face_of_dart_[dart_fwd(lo)];
    EdgeId ri = g.in_order_[v].back();  // rightmost incoming
    g.right_face_v_[v] = g.face_of_dart_[dart_rev(ri)];
  }

  return g;
}

std::optional<VertexId> PlaneStGraph::vertex_by_name(const std::string& n) const {
  for (VertexId v = 0; v < (int)names_.size(); ++v)
    if (names_[v] == n) return v;
  return std::nullopt;
}

bool PlaneStGraph::reaches(VertexId u, VertexId v) const {
  auto d = descendants(u);
  return d[v] != 0;
}

std::vector<char> PlaneStGraph::descendants(VertexId v) const {
  std::vector<char> seen(vertex_count(), 0);
  std::deque<VertexId> q{v};
  std::vector<std::vector<VertexId>> succ(vertex_count());
  for (auto& e : edges_) succ[e.tail].push_back(e.head);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (VertexId w : succ[x])
      if (!seen[w]) { seen[w] = 1; q.push_back(w); }
  }
  seen[v] = 0;
  return seen;
}

std::vector<char> PlaneStGraph::ancestors(VertexId v) const {
  std::vector<char> seen(vertex_count(), 0);
  std::deque<VertexId> q{v};
  std::vector<std::vector<VertexId>> pred(vertex_count());
  for (auto& e : edges_) pred[e.head].push_back(e.tail);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (VertexId w : pred[x])
      if (!seen[w]) { seen[w] = 1; q.push_back(w); }
  }
  seen[v] = 0;
  return seen;
}

int PlaneStGraph::dual_node_right_of_edge(EdgeId e) const {
  FaceId f = right_face(e);
  return f == outer_ ? face_count() : f;
}

std::vector<int> PlaneStGraph::dual_out_nodes(int node) const {
  std::vector<int> out;
  if (node == face_count()) return out;  // t* has no outgoing
  for (EdgeId e : faces_[node].right_edges) out.push_back(dual_node_right_of_edge(e));
  return out;
}

bool PlaneStGraph::dual_reaches(int a, int b) const {
  if (a == b) return true;
  std::vector<char> seen(face_count() + 1, 0);
  std::deque<int> q{a};
  seen[a] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : dual_out_nodes(x)) {
      if (y == b) return true;
      if (!seen[y]) { seen[y] = 1; q.push_back(y); }
    }
  }
  return false;
}

PlaneStGraph::PairClass PlaneStGraph::classify_pair(VertexId u, VertexId v) const {
  if (u == v) throw GraphError(GraphErrorKind::SemanticError, "classify_pair: u == v");
  auto path_between = [&](VertexId a, VertexId b) -> std::vector<int> {
    // BFS storing parents; returns vertex chain a..b or empty.
    std::vector<int> par(vertex_count(), -2);
    std::vector<std::vector<VertexId>> succ(vertex_count());
    for (auto& e : edges_) succ[e.tail].push_back(e.head);
    std::deque<VertexId> q{a};
    par[a] = -1;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      for (VertexId w : succ[x])
        if (par[w] == -2) { par[w] = x; q.push_back(w); }
    }
    if (par[b] == -2) return {};
    std::vector<int> chain;
    for (int x = b; x != -1; x = par[x]) chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };
  auto dual_path = [&](int a, int b) -> std::vector<int> {
    std::vector<int> par(face_count() + 1, -2);
    std::deque<int> q{a};
    par[a] = -1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : dual_out_nodes(x))
        if (par[y] == -2) { par[y] = x; q.push_back(y); }
    }
    if (par[b] == -2) return {};
    std::vector<int> chain;
    for (int x = b; x != -1; x = par[x]) chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  if (auto p = path_between(u, v); !p.empty())
    return PairClass{PairCase::PathUV, p};
  if (auto p = path_between(v, u); !p.empty())
    return PairClass{PairCase::PathVU, p};
  auto node_left = [&](VertexId x) { return (int)left_face_v_[x]; };
  auto node_right = [&](VertexId x) {
    FaceId f = right_face_v_[x];
    return f == outer_ ? face_count() : (int)f;
  };
  if (auto p = dual_path(node_right(u), node_left(v)); !p.empty() ||
      node_right(u) == node_left(v)) {
    if (p.empty()) p = {node_right(u)};
    return PairClass{PairCase::DualUV, p};
  }
  if (auto p = dual_path(node_right(v), node_left(u)); !p.empty() ||
      node_right(v) == node_left(u)) {
    if (p.empty()) p = {node_right(v)};
    return PairClass{PairCase::DualVU, p};
  }
  throw GraphError(GraphErrorKind::SemanticError,
                   "classify_pair: no case holds; embedding is inconsistent");
}

PlaneStGraph::Regions PlaneStGraph::reachability_sets(VertexId v) const {
  if (v == source_ || v == sink_)
    throw GraphError(GraphErrorKind::SemanticError,
                     "reachability_sets: v must be internal");
  Regions r;
  auto anc = ancestors(v);
  auto desc = descendants(v);
  // Reverse dual BFS from left(v): faces that can reach it.
  int nl = left_face_v_[v];
  int nr = right_face_v_[v] == outer_ ? face_count() : right_face_v_[v];
  std::vector<std::vector<int>> rev(face_count() + 1);
  for (EdgeId e = 0; e < edge_count(); ++e)
    rev[dual_node_right_of_edge(e)].push_back(left_face(e));
  std::vector<char> can_reach_left(face_count() + 1, 0);
  {
    std::deque<int> q{nl};
    can_reach_left[nl] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : rev[x])
        if (!can_reach_left[y]) { can_reach_left[y] = 1; q.push_back(y); }
    }
  }
  std::vector<char> from_right(face_count() + 1, 0);
  {
    std::deque<int> q{nr};
    from_right[nr] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : dual_out_nodes(x))
        if (!from_right[y]) { from_right[y] = 1; q.push_back(y); }
    }
  }
  for (VertexId w = 0; w < vertex_count(); ++w) {
    if (w == v) continue;
    if (anc[w]) { r.below.push_back(w); continue; }
    if (desc[w]) { r.above.push_back(w); continue; }
    int wr = right_face_v_[w] == outer_ ? face_count() : right_face_v_[w];
    int wl = left_face_v_[w];
    bool in_left = can_reach_left[wr] != 0;
    bool in_right = from_right[wl] != 0;
    if (in_left == in_right)
      throw GraphError(GraphErrorKind::SemanticError,
                       "reachability_sets: L/R classification ambiguous");
    if (in_left) r.left.push_back(w); else r.right.push_back(w);
  }
  return r;
}

std::vector<int> topological_numbering_ordered(
    const std::vector<std::vector<int>>& adj, int source) {
  const int n = (int)adj.size();
  std::vector<int> pre(n, -1);
  // Leftmost DFS preorder.
  {
    int counter = 0;
    std::vector<std::pair<int, size_t>> stack{{source, 0}};
    pre[source] = counter++;
    while (!stack.empty()) {
      auto& [x, i] = stack.back();
      if (i == adj[x].size()) { stack.pop_back(); continue; }
      int y = adj[x][i++];
      if (pre[y] == -1) {
        pre[y] = counter++;
        stack.push_back({y, 0});
      }
    }
  }
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y : adj[x]) ++indeg[y];
  std::set<std::pair<int, int>> ready;  // (preorder, node)
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) {
      if (pre[x] == -1)
        throw GraphError(GraphErrorKind::SemanticError,
                         "numbering: node unreachable from source");
      ready.insert({pre[x], x});
    }
  std::vector<int> number(n, 0);
  int next = 1;
  while (!ready.empty()) {
    auto [p, x] = *ready.begin();
    ready.erase(ready.begin());
    number[x] = next++;
    for (int y : adj[x])
      if (--indeg[y] == 0) ready.insert({pre[y], y});
  }
  if (next != n + 1)
    throw GraphError(GraphErrorKind::CyclicGraph, "numbering: cycle detected");
  return number;
}

std::vector<int> PlaneStGraph::topological_numbering() const {
  std::vector<std::vector<int>> adj(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v)
    for (EdgeId e : out_order_[v]) adj[v].push_back(edges_[e].head);
  return topological_numbering_ordered(adj, source_);
}

}  // namespace lsvr
