#pragma once

#include <string>
#include <vector>

#include "lsvr/lsvr_draw.hpp"
#include "lsvr/transversal.hpp"
#include "lsvr/visibility.hpp"

namespace lsvr {

enum class ViolationKind {
  ShapeRotationMismatch,
  LShapeOverlap,
  MissingVisibility,
  SpuriousVisibility,
  DirectionViolation,
  EmbeddingOrderViolation,
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string entities;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

struct TooLargeError : std::runtime_error {
  explicit TooLargeError(const std::string& m) : std::runtime_error(m) {}
};

// Full geometric validation of an L-shape drawing: corner orientation per
// rotation, pairwise L-shape disjointness, visibility pairs of each color
// equal to that color's edge set with the right direction, drawn segments
// touching exactly their endpoint bars, and embedding order recovery.
ValidationReport validate_drawing(const LsvrDrawing& d, const InstancePair& inst,
                                  const PhiAssignment& phi);

// Single-color validation of a classic bar visibility drawing.
ValidationReport validate_bar_drawing(const BarDrawing& b, const PlaneStGraph& g);

// Exhaustive rotation-assignment oracle; guarded to <= 12 shared vertices.
std::vector<PhiAssignment> enumerate_phi(const InstancePair& inst);

// All simple dual edge-paths between the attachment faces of a blue edge that
// satisfy the cut rules; guarded to <= 12 dual faces.
std::vector<TraversingPath> enumerate_traversing_paths(const InstancePair& inst,
                                                       const DualGraph& dual_r,
                                                       const PhiAssignment& phi,
                                                       EdgeId blue_edge);

struct SreReport {
  bool pass = true;
  int crossings = 0;
  int max_bends = 0;
  std::vector<std::string> problems;
};

// Scans a polyline drawing: every proper crossing must be between a red and a
// blue axis-parallel segment (hence at a right angle), and no polyline may
// have more than two bends.
SreReport check_sre(const PolylineDrawing& p);

}  // namespace lsvr
