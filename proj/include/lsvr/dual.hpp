#pragma once

#include <map>
#include <vector>

#include "lsvr/core_graph.hpp"

namespace lsvr {

enum class DualConvention { LeftToRight, RightToLeft };

// Directed dual multigraph of a plane st-graph with the standard outer-face
// split. Node ids: faces keep their ids, with the outer face id playing the
// tail-side outer region (s* under LeftToRight); node face_count() plays the
// head-side outer region (t* under LeftToRight).
class DualGraph {
 public:
  struct DualEdge {
    EdgeId primal;
    int tail, head;
  };

  static DualGraph build(const PlaneStGraph& g, DualConvention c);

  DualConvention convention() const { return conv_; }
  int node_count() const { return n_faces_ + 1; }
  int source_node() const { return outer_; }
  int sink_node() const { return n_faces_; }
  const DualEdge& edge(EdgeId primal) const { return edges_[primal]; }
  const std::vector<DualEdge>& edges() const { return edges_; }
  const std::vector<EdgeId>& out_edges(int node) const { return out_[node]; }

  // Node for a face referenced in tail role / head role.
  int tail_node(FaceId f) const { return f; }
  int head_node(FaceId f) const { return f == outer_ ? n_faces_ : f; }

  // Topological numbering of the dual nodes, 1..node_count(), deterministic.
  const std::vector<int>& numbering() const { return numbering_; }

  // Routing support (LeftToRight only): the right-path boundary of each node
  // and cyclic slot positions of darts, vertices, and the pole wrap slot.
  const std::vector<VertexId>& right_path_vertices(int node) const {
    return rp_vertices_[node];
  }
  const std::vector<EdgeId>& right_path_edges(int node) const {
    return rp_edges_[node];
  }
  int slot_count(int node) const { return slot_count_[node]; }
  int dart_slot(int node, EdgeId e) const;
  int vertex_slot(int node, VertexId v) const;
  int wrap_slot(int node) const;  // s_b at source node, t_b at sink node

 private:
  DualConvention conv_ = DualConvention::LeftToRight;
  int n_faces_ = 0;
  FaceId outer_ = -1;
  std::vector<DualEdge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<int> numbering_;
  std::vector<std::vector<VertexId>> rp_vertices_;
  std::vector<std::vector<EdgeId>> rp_edges_;
  std::vector<int> slot_count_;
  std::vector<std::map<EdgeId, int>> dart_pos_;
  std::vector<std::map<VertexId, int>> vertex_pos_;
  std::vector<int> wrap_pos_;
};

}  // namespace lsvr
