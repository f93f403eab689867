#pragma once

#include <vector>

#include "altlink/diagram.hpp"
#include "altlink/tangle.hpp"

namespace altlink {

/// Reattaches the external edges of a full proper 4- or 6-tangle shifted one
/// place along the edge face. Vertex ids persist; only dart slots move.
Diagram turn_tangle(const Diagram& d, const Tangle& t);

struct MoveResult {
  Diagram diagram;
  int components_before = 0;
  int components_after = 0;
  GroupClass class_before;  // of the operated (sub)group; T only
  GroupClass class_after;   // of the same crossings in the result; T only
};

MoveResult apply_T(const Diagram& d, const Group& g);
MoveResult apply_OTS(const Diagram& d, const OtsTriangle& t);
/// Vertex-set forms used when replaying recorded moves.
MoveResult apply_T(const Diagram& d, const std::vector<Vertex>& crossings);
MoveResult apply_OTS(const Diagram& d, std::array<Vertex, 3> vertices);

/// Merges the two crossings of a 2-(sub)group into one crossing.
Diagram collapse_two_group(const Diagram& d, const Group& g);

/// Contracts each block (a chain of crossings) to one crossing. Blocks must
/// partition the vertices. vertex_map[v] receives the new crossing of v.
Diagram quotient(const Diagram& d, const std::vector<std::vector<Vertex>>& blocks,
                 std::vector<Vertex>* vertex_map = nullptr);

struct Condensation {
  Diagram result;
  std::vector<int> round_counts;  // vertex count after each round
};

/// Collapses all groups at once, round after round, until no 2-group remains.
Condensation condense_rounds(const Diagram& d);
Diagram condense(const Diagram& d);

}  // namespace altlink
