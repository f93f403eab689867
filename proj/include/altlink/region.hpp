#pragma once

#include <array>
#include <optional>
#include <vector>

#include "altlink/diagram.hpp"

namespace altlink {

/// A simple boundary cycle together with everything on one side of it.
///
/// walk lists the departure dart at each boundary vertex; the region lies on
/// the counterclockwise side, i.e. at each boundary vertex it owns the darts
/// strictly between the departure dart and the arrival dart going ccw.
struct Region {
  std::vector<Dart> walk;
  std::vector<Vertex> boundary;
  std::vector<Vertex> base_vertices;  // boundary vertices of region degree 2
  std::vector<Vertex> interior;       // sorted
  std::vector<Dart> darts;            // sorted; every dart of the region subgraph

  int vertex_count() const { return static_cast<int>(boundary.size() + interior.size()); }
  bool is_two_group() const { return boundary.size() == 2 && interior.empty(); }
  bool trivial() const { return boundary.size() == 1; }
  bool contains(Vertex v) const;
};

/// Builds the region cut out by a closed walk, or nullopt when the walk is not
/// a simple cycle, a boundary vertex has region degree other than 2 or 3, or
/// the side is not closed off by the cycle.
std::optional<Region> region_from_walk(const Diagram& d, const std::vector<Dart>& walk);
std::vector<Dart> reversed_walk(const std::vector<Dart>& walk);

/// Two base vertices, the rest of the boundary degree 3, interior degree 4.
bool is_two_region(const Diagram& d, const Region& r);
/// One base vertex.
bool is_minimal_loop(const Diagram& d, const Region& r);

/// Candidates from tracing two strands out of every corner up to their first
/// common crossing; both sides of each closed curve are tried. Sorted by
/// vertex count, then boundary length.
std::vector<Region> find_two_regions(const Diagram& d);
/// Repeatedly descends to a contained candidate until none is properly
/// contained.
Region minimize_two_region(const Diagram& d, const Region& r);
/// Follows the component circuit out of v to its first self-return.
Region find_minimal_loop(const Diagram& d, Vertex v);

struct RegionOtsResult {
  Diagram diagram;
  Region region;
  int ots_case = 0;  // 1, 2 or 3: number of triangle edges on the boundary plus one
};

/// Applies ots to a triangle face inside the region and carries the region
/// across. Throws TriangleTouchesTwoGroup, NotOtsTriangle or
/// TriangleNotInRegion.
RegionOtsResult region_ots(const Diagram& d, const Region& r, std::array<Vertex, 3> triangle);
int region_ots_case(const Diagram& d, const Region& r, std::array<Vertex, 3> triangle);

}  // namespace altlink
