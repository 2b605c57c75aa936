#pragma once

#include <vector>

#include "lsvr/core_graph.hpp"
#include "lsvr/dual.hpp"
#include "lsvr/rational.hpp"

namespace lsvr {

struct Bar {
  Rat y, x0, x1;
};

// Visibility segment drawn as a closed axis-aligned rectangle of width eps.
struct SegmentRect {
  EdgeId edge = -1;
  Rat x0, x1, y0, y1;
};

struct BarDrawing {
  std::vector<Bar> bars;  // by vertex id
  std::vector<SegmentRect> segments;  // by edge id
  Rat eps;
};

// Tamassia-Tollis bar visibility representation. X numbers the nodes of the
// LeftToRight dual (vertices span [X(left), X(right)-eps], segments sit at
// the left face's coordinate); Y may be rational-valued but must strictly
// increase along edges.
BarDrawing tt_bar_visibility(const PlaneStGraph& g, const DualGraph& dual,
                             const std::vector<int>& x,
                             const std::vector<Rat>& y, Rat eps);

}  // namespace lsvr
