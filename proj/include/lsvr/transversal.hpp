#pragma once

#include <string>
#include <vector>

#include "lsvr/dual.hpp"
#include "lsvr/instances.hpp"
#include "lsvr/phi.hpp"

namespace lsvr {

enum class CutLabel { Above, Below, Free, Conflict };

// Blue-graph relation tables, one row per blue vertex.
struct BlueRelations {
  std::vector<std::vector<char>> desc, anc, left, right;
  static BlueRelations compute(const PlaneStGraph& blue);
};

// Route of one blue edge through the red dual: nodes.size() == crossed.size()+1.
struct TraversingPath {
  EdgeId blue_edge = -1;
  std::vector<int> nodes;
  std::vector<EdgeId> crossed;
};

struct Verdict {
  enum class Reason {
    None,
    NoTraversingPath,
    LabelConflict,
    AmbiguousCut,
    BlueBlueCrossing,
    NonContiguousIntersection,
  };
  bool accepted = false;
  std::vector<TraversingPath> witness;  // by blue edge id when accepted
  Reason reason = Reason::None;
  EdgeId edge_a = -1, edge_b = -1;  // blue edges involved in the failure
  int face = -1;
  VertexId vertex = -1;  // red vertex id for LabelConflict
  std::string detail;

  bool internal_inconsistency() const {
    return reason == Reason::AmbiguousCut ||
           reason == Reason::NonContiguousIntersection;
  }
};

const char* verdict_reason_name(Verdict::Reason r);

// Dual node through which the other color attaches to shared vertex u,
// resolved against the outer split of the given dual.
int phi_face_red(const InstancePair& inst, const DualGraph& dual_r,
                 int shared_idx, Rot rot);
int phi_face_blue(const InstancePair& inst, const DualGraph& dual_b,
                  int shared_idx, Rot rot);

// Cut rule application for one vertex on the right path of a traversed face.
CutLabel cut_label(const InstancePair& inst, const BlueRelations& rel,
                   const PhiAssignment& phi, int shared_w, EdgeId blue_edge);

struct PathResult {
  bool ok = false;
  TraversingPath path;
  Verdict::Reason reason = Verdict::Reason::None;
  int face = -1;
  VertexId vertex = -1;
  std::string detail;
};

PathResult traversing_path(const InstancePair& inst, const DualGraph& dual_r,
                           const BlueRelations& rel, const PhiAssignment& phi,
                           EdgeId blue_edge);

// Whether routing the two blue edges through their paths forces a crossing.
// Throws GraphError(SemanticError) on a non-contiguous intersection.
bool paths_cross(const InstancePair& inst, const DualGraph& dual_r,
                 const TraversingPath& a, const TraversingPath& b);

Verdict test_transversal(const InstancePair& inst, const PhiAssignment& phi);

}  // namespace lsvr
