#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsvr/instances.hpp"
#include "lsvr/rational.hpp"
#include "lsvr/transversal.hpp"
#include "lsvr/visibility.hpp"

namespace lsvr {

using Coord = std::int64_t;

// Endpoint reference used by drawing segments: a shared vertex index, or one
// of the poles of the segment's own color.
constexpr int kRefSourcePole = -1;
constexpr int kRefSinkPole = -2;

struct LShape {
  Rot rot;
  Coord corner_x, corner_y;
  Coord hbar_y, hbar_x0, hbar_x1;  // horizontal bar
  Coord vbar_x, vbar_y0, vbar_y1;  // vertical bar
};

struct PoleBar {
  bool horizontal;
  Coord fixed;   // y for horizontal, x for vertical
  Coord lo, hi;  // extent along the bar
};

struct DrawnSegment {
  EdgeId edge = -1;
  int tail_ref = 0, head_ref = 0;
  // Closed rectangle; for red segments x is the thin dimension, for blue y.
  Coord x0, x1, y0, y1;
};

// Exact drawing on the integer grid with unit 1/scale.
struct LsvrDrawing {
  Coord scale = 1;  // S
  Coord big_n = 0;  // N, the largest numbering value
  Rat eps, delta;
  bool tested = false;
  std::vector<std::string> shared_names;
  std::vector<std::string> pole_names;  // s_r, t_r, s_b, t_b
  std::vector<LShape> shapes;           // by shared index
  PoleBar pole_sr, pole_tr, pole_sb, pole_tb;
  std::vector<DrawnSegment> red_segments;   // by red edge id
  std::vector<DrawnSegment> blue_segments;  // by blue edge id
};

// Pinned delta: min(eps/2, 1/(2(N+1)^2)) where N is the largest value among
// the four numberings.
Rat choose_delta(const std::vector<int>& n_r, const std::vector<int>& n_b,
                 const std::vector<int>& n_r_star,
                 const std::vector<int>& n_b_star, Rat eps);

// The drawing pipeline: duals, numberings, two bar visibility
// representations with composite coordinates, corner-exact bar ends, and the
// four boundary bars. `verdict` may be null; the output is then tagged
// untested.
LsvrDrawing draw_lsvr(const InstancePair& inst, const PhiAssignment& phi,
                      const Verdict* verdict);

struct Polyline {
  EdgeId edge = -1;
  bool red = true;
  std::vector<std::pair<Coord, Coord>> points;
};

struct PolylineDrawing {
  Coord scale = 1;  // 4*S
  std::vector<std::string> shared_names;
  std::vector<std::string> pole_names;
  std::vector<std::pair<Coord, Coord>> vertex_points;  // by shared index
  std::pair<Coord, Coord> pole_points[4];              // s_r, t_r, s_b, t_b
  std::vector<Polyline> polylines;                     // red then blue
};

// Two-bend right-angle-crossing rendering: each visibility segment becomes a
// corner-to-corner polyline with bends on the former segment's spine.
PolylineDrawing to_sre(const LsvrDrawing& d);

}  // namespace lsvr
