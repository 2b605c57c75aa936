#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lsvr {

// The four L-shape rotations. R1 has its corner bottom-left (horizontal bar
// to the right, vertical bar up), the rest follow counterclockwise by corner:
// R2 bottom-right, R3 top-right, R4 top-left.
enum class Rot { R1, R2, R3, R4 };

// Face table: which side the other color attaches through.
inline bool f_r_is_left(Rot r) { return r == Rot::R1 || r == Rot::R4; }
inline bool f_b_is_right(Rot r) { return r == Rot::R1 || r == Rot::R2; }

inline const char* rot_name(Rot r) {
  switch (r) {
    case Rot::R1: return "R1";
    case Rot::R2: return "R2";
    case Rot::R3: return "R3";
    case Rot::R4: return "R4";
  }
  return "?";
}

std::optional<Rot> rot_from_name(const std::string& s);

// Rotation per shared vertex, indexed by shared-vertex index.
struct PhiAssignment {
  std::vector<Rot> rot;
  Rot operator[](int shared_idx) const { return rot[shared_idx]; }
  int size() const { return (int)rot.size(); }
};

}  // namespace lsvr
