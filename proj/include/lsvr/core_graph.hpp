#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsvr {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

enum class GraphErrorKind {
  CyclicGraph,
  MultipleSourcesOrSinks,
  NonPlanarRotation,
  NonConsecutiveInOutEdges,
  SourceSinkNotOnOuterFace,
  InvalidRotation,
  InvalidNumbering,
  SemanticError,
};

struct GraphError : std::runtime_error {
  GraphErrorKind kind;
  GraphError(GraphErrorKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
};

const char* graph_error_kind_name(GraphErrorKind k);

struct Edge {
  VertexId tail = -1;
  VertexId head = -1;
  bool synthetic = false;  // (s,t) added during validation
};

// Input shape prior to validation. Rotations are clockwise lists of edge
// indices. The rotation list at the source starts with its leftmost outgoing
// edge (the one on the outer boundary); the list at the sink ends with its
// leftmost incoming edge. This anchors which face is the outer face.
struct RawGraph {
  std::vector<std::string> names;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::vector<EdgeId>> rotations;
  VertexId source = -1;  // -1: detect from degrees
  VertexId sink = -1;
};

// Dart encoding: 2*e for tail->head, 2*e+1 for head->tail.
inline int dart_fwd(EdgeId e) { return 2 * e; }
inline int dart_rev(EdgeId e) { return 2 * e + 1; }
inline EdgeId dart_edge(int d) { return d / 2; }
inline bool dart_is_rev(int d) { return d & 1; }
inline int dart_reverse(int d) { return d ^ 1; }

struct Face {
  std::vector<int> walk;  // darts with this face on their left
  // Both boundary paths run from low to high.
  std::vector<VertexId> right_vertices;  // low, ..., high
  std::vector<EdgeId> right_edges;       // edges e with left_face(e) == this
  std::vector<VertexId> left_vertices;
  std::vector<EdgeId> left_edges;  // edges e with right_face(e) == this
  VertexId low = -1, high = -1;
  bool outer = false;
};

class PlaneStGraph {
 public:
  // Validates all plane st-graph invariants; adds the (s,t) edge on the outer
  // face if missing. Throws GraphError.
  static PlaneStGraph validate(const RawGraph& raw);

  int vertex_count() const { return (int)rotations_.size(); }
  int edge_count() const { return (int)edges_.size(); }
  int face_count() const { return (int)faces_.size(); }
  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }
  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> vertex_by_name(const std::string& n) const;
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& rotation(VertexId v) const { return rotations_[v]; }

  FaceId outer_face() const { return outer_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  FaceId left_face(EdgeId e) const { return face_of_dart_[dart_fwd(e)]; }
  FaceId right_face(EdgeId e) const { return face_of_dart_[dart_rev(e)]; }
  FaceId face_of_dart(int d) const { return face_of_dart_[d]; }
  // For s and t both lookups return the outer face; the dual resolves roles.
  FaceId left_face_of_vertex(VertexId v) const { return left_face_v_[v]; }
  FaceId right_face_of_vertex(VertexId v) const { return right_face_v_[v]; }

  // Outgoing edges in left-to-right order (clockwise out-block).
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_order_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_order_[v]; }

  bool reaches(VertexId u, VertexId v) const;  // directed path u -> v
  std::vector<char> descendants(VertexId v) const;
  std::vector<char> ancestors(VertexId v) const;

  // Split-dual reachability (D-right): node ids are face ids, with the outer
  // face acting as s*; node t* is face_count(). See dual.hpp for the full
  // structure.
  int dual_node_right_of_edge(EdgeId e) const;
  int dual_node_left_of_edge(EdgeId e) const { return left_face(e); }
  bool dual_reaches(int node_a, int node_b) const;

  enum class PairCase { PathUV, PathVU, DualUV, DualVU };
  struct PairClass {
    PairCase c;
    // PathUV/PathVU: vertex chain; DualUV/DualVU: dual node chain.
    std::vector<int> witness;
  };
  // Lemma-1 style four-way classification of a vertex pair.
  PairClass classify_pair(VertexId u, VertexId v) const;

  struct Regions {
    std::vector<VertexId> below, above, left, right;  // B, T, L, R
  };
  Regions reachability_sets(VertexId v) const;

  // Deterministic topological numbering, values 1..V. Ties among available
  // sources break by leftmost-first DFS preorder.
  std::vector<int> topological_numbering() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> rotations_;
  std::vector<std::vector<EdgeId>> out_order_, in_order_;
  VertexId source_ = -1, sink_ = -1;
  std::vector<Face> faces_;
  std::vector<FaceId> face_of_dart_;
  std::vector<FaceId> left_face_v_, right_face_v_;
  FaceId outer_ = -1;

  std::vector<int> dual_out_nodes(int node) const;
};

// Deterministic numbering of an arbitrary DAG with ordered adjacency and a
// unique source: iterative source removal, ties broken by the preorder of a
// DFS from the source that scans out-edges in list order.
std::vector<int> topological_numbering_ordered(
    const std::vector<std::vector<int>>& adj, int source);

}  // namespace lsvr
