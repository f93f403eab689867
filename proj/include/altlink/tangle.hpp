#pragma once

#include <array>
#include <optional>
#include <vector>

#include "altlink/diagram.hpp"

namespace altlink {

/// Connected vertex set whose external darts all lie on one face of the
/// induced subgraph. external_darts are the darts inside the tangle whose mates
/// leave it, in the cyclic order met along that face.
struct Tangle {
  std::vector<Vertex> vertices;
  std::vector<Dart> external_darts;
  int m() const { return static_cast<int>(external_darts.size()); }
};

/// Throws NotFullProper if the set is empty, disconnected, the whole diagram,
/// or its external darts are spread over several faces.
Tangle make_tangle(const Diagram& d, const std::vector<Vertex>& vertices);

/// Maximal chain of crossings joined consecutively by bigon faces.
struct Group {
  std::vector<Vertex> crossings;
  bool cyclic = false;   // the chain closes up and covers the whole diagram
  bool maximal = true;   // false for subgroups
  int size() const { return static_cast<int>(crossings.size()); }
};

enum class Sign { Positive, Negative, NotApplicable };
enum class Parity { Even, Odd };

struct GroupClass {
  CrossingKind kind = CrossingKind::Component;
  Sign sign = Sign::NotApplicable;
  Parity parity = Parity::Odd;
};

/// Groups ordered by their smallest crossing; each chain starts at the end
/// with the smaller id (cyclic chains start at their smallest crossing).
std::vector<Group> find_groups(const Diagram& d);
GroupClass classify_group(const Diagram& d, const Group& g);
GroupClass classify_group(const Diagram& d, const ComponentMap& cm, const Group& g);
Group subgroup(const Group& g, int start, int len);
/// The four external darts of a non-cyclic (sub)group, in face order.
std::vector<Dart> group_end_darts(const Diagram& d, const Group& g);

/// True when the vertices, taken in the given order, are consecutive
/// crossings of a 2-braid (each adjacent pair bounds a bigon face).
bool is_chain(const Diagram& d, const std::vector<Vertex>& crossings);
/// Orders an unordered vertex set as a chain, or returns nullopt.
std::optional<std::vector<Vertex>> order_as_chain(const Diagram& d, const std::vector<Vertex>& vertices);

bool has_two_group(const Diagram& d);
/// Number of edges joining u and w.
int multiplicity(const Diagram& d, Vertex u, Vertex w);

struct OtsTriangle {
  std::array<Vertex, 3> vertices{};    // sorted
  std::array<Dart, 3> face_darts{};    // the degree-3 face walk
  std::vector<Dart> external_darts;    // six, in face order of the tangle
};

std::vector<OtsTriangle> find_ots_triangles(const Diagram& d);
/// Looks up the ots-triangle on exactly these three vertices.
std::optional<OtsTriangle> ots_triangle_on(const Diagram& d, std::array<Vertex, 3> vertices);

}  // namespace altlink
