#include "lsvr/dual.hpp"

#include <stdexcept>

namespace lsvr {

DualGraph DualGraph::build(const PlaneStGraph& g, DualConvention c) {
  DualGraph d;
  d.conv_ = c;
  d.n_faces_ = g.face_count();
  d.outer_ = g.outer_face();
  const int nodes = d.n_faces_ + 1;
  d.edges_.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    FaceId lf = g.left_face(e), rf = g.right_face(e);
    FaceId tail_face = c == DualConvention::LeftToRight ? lf : rf;
    FaceId head_face = c == DualConvention::LeftToRight ? rf : lf;
    d.edges_[e] = DualEdge{e, d.tail_node(tail_face), d.head_node(head_face)};
  }
  // Ordered out-lists: the boundary edges with this node in tail role, in
  // path order from low to high.
  d.out_.assign(nodes, {});
  for (FaceId f = 0; f < d.n_faces_; ++f) {
    const Face& face = g.face(f);
    const auto& boundary = c == DualConvention::LeftToRight
                               ? face.right_edges
                               : face.left_edges;
    for (EdgeId e : boundary) d.out_[f].push_back(e);
  }
  std::vector<std::vector<int>> adj(nodes);
  for (int f = 0; f < nodes; ++f)
    for (EdgeId e : d.out_[f]) adj[f].push_back(d.edges_[e].head);
  d.numbering_ = topological_numbering_ordered(adj, d.source_node());

  // Routing slots (meaningful for LeftToRight; harmless otherwise).
  d.rp_vertices_.assign(nodes, {});
  d.rp_edges_.assign(nodes, {});
  d.slot_count_.assign(nodes, 0);
  d.dart_pos_.assign(nodes, {});
  d.vertex_pos_.assign(nodes, {});
  d.wrap_pos_.assign(nodes, -1);
  for (FaceId f = 0; f < d.n_faces_; ++f) {
    const Face& face = g.face(f);
    if (f == d.outer_) continue;
    d.rp_vertices_[f] = face.right_vertices;
    d.rp_edges_[f] = face.right_edges;
    int len = (int)face.walk.size();
    d.slot_count_[f] = 2 * len;
    for (int i = 0; i < len; ++i) {
      int dart = face.walk[i];
      d.dart_pos_[f][dart_edge(dart)] = 2 * i;
      VertexId at = dart_is_rev(dart) ? g.edge(dart_edge(dart)).tail
                                      : g.edge(dart_edge(dart)).head;
      d.vertex_pos_[f][at] = 2 * i + 1;
    }
  }
  {
    // Source-side outer portion: wrap slot, then the outer face's right path.
    const Face& of = g.face(d.outer_);
    int sn = d.source_node();
    d.rp_vertices_[sn] = of.right_vertices;
    d.rp_edges_[sn] = of.right_edges;
    int k = (int)of.right_edges.size();
    d.slot_count_[sn] = 2 * k + 2;
    d.wrap_pos_[sn] = 0;
    d.vertex_pos_[sn][of.low] = 1;
    for (int j = 0; j < k; ++j) {
      EdgeId e = of.right_edges[j];
      d.dart_pos_[sn][e] = 2 * j + 2;
      d.vertex_pos_[sn][g.edge(e).head] = 2 * j + 3;
    }
    // Sink-side outer portion: wrap slot, then the left path walked from high
    // down to low.
    int tn = d.sink_node();
    int p = (int)of.left_edges.size();
    d.slot_count_[tn] = 2 * p + 2;
    d.wrap_pos_[tn] = 0;
    d.vertex_pos_[tn][of.high] = 1;
    for (int j = 0; j < p; ++j) {
      EdgeId e = of.left_edges[p - 1 - j];  // high -> low
      d.dart_pos_[tn][e] = 2 * j + 2;
      d.vertex_pos_[tn][g.edge(e).tail] = 2 * j + 3;
    }
  }
  return d;
}

int DualGraph::dart_slot(int node, EdgeId e) const {
  auto it = dart_pos_[node].find(e);
  if (it == dart_pos_[node].end())
    throw std::logic_error("dual: edge does not bound node");
  return it->second;
}

int DualGraph::vertex_slot(int node, VertexId v) const {
  auto it = vertex_pos_[node].find(v);
  if (it == vertex_pos_[node].end())
    throw std::logic_error("dual: vertex not on node boundary");
  return it->second;
}

int DualGraph::wrap_slot(int node) const {
  if (wrap_pos_[node] < 0)
    throw std::logic_error("dual: node has no pole wrap slot");
  return wrap_pos_[node];
}

}  // namespace lsvr
