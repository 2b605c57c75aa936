#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsvr/core_graph.hpp"
#include "lsvr/phi.hpp"

namespace lsvr {

// Two plane st-graphs over a shared vertex set with four distinct poles.
struct InstancePair {
  PlaneStGraph red, blue;
  std::vector<std::string> shared;   // shared vertex names, file order
  std::vector<VertexId> red_vertex;  // shared index -> vertex id in red
  std::vector<VertexId> blue_vertex;
  std::vector<int> shared_of_red;  // vertex id -> shared index, -1 for poles
  std::vector<int> shared_of_blue;
  std::optional<PhiAssignment> phi;
  std::map<std::string, std::string> meta;

  // Checks the shared-set invariants and builds the index maps.
  static InstancePair make(PlaneStGraph red, PlaneStGraph blue,
                           std::optional<PhiAssignment> phi = std::nullopt,
                           std::map<std::string, std::string> meta = {});

  int shared_count() const { return (int)shared.size(); }
};

// The wheel W_n plus a matching, oriented and augmented as in the
// construction that admits an all-R1 drawing. `partial` selects surviving
// matching edges (1-based indices into e_1..e_{n/2}); empty means complete.
InstancePair gen_wheel_matching(int n, const std::vector<int>& partial = {});

// A pinned pair (series-parallel red, single obstructing blue edge) that is
// rejected for every possible rotation assignment.
InstancePair negative_fixture();
// Same pair with the obstructing edge rerouted through the poles; admits
// some assignment.
InstancePair negative_fixture_without_obstruction();

// Random pair of embedded series-parallel st-graphs with optional face
// chords, plus a uniform random assignment. Deterministic in seed.
InstancePair gen_random_pair(int n, std::uint64_t seed);

}  // namespace lsvr
