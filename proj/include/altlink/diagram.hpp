#pragma once

// 4-regular plane multigraphs stored as rotation systems.
//
// Every edge owns two darts, 2e and 2e+1; each vertex lists its four darts in
// counterclockwise order. Over/under information is never stored: a connected
// 4-regular plane shadow determines its alternating diagram up to mirror image.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "altlink/error.hpp"

namespace altlink {

using Dart = int;
using Vertex = int;

constexpr Dart mate(Dart d) noexcept { return d ^ 1; }

class Diagram {
 public:
  using Rotation = std::array<Dart, 4>;

  Diagram() = default;

  /// Builds a diagram from per-vertex dart lists (counterclockwise). Throws
  /// Error with DuplicateDart, UnpairedDart, WrongDegree, Disconnected or
  /// NonPlanar when the first structural invariant fails.
  static Diagram build(const std::vector<std::vector<Dart>>& rotations);
  static Diagram build(const std::vector<Rotation>& rotations);

  int num_vertices() const noexcept { return static_cast<int>(rotations_.size()); }
  int num_darts() const noexcept { return 4 * num_vertices(); }
  int num_edges() const noexcept { return 2 * num_vertices(); }

  const Rotation& rotation(Vertex v) const { return rotations_.at(static_cast<size_t>(v)); }
  const std::vector<Rotation>& rotations() const noexcept { return rotations_; }

  Vertex vertex_of(Dart d) const { return vertex_of_.at(static_cast<size_t>(d)); }
  int position_of(Dart d) const { return position_of_[static_cast<size_t>(d)]; }
  Dart dart_at(Vertex v, int pos) const { return rotations_[static_cast<size_t>(v)][static_cast<size_t>(pos & 3)]; }

  Dart next_ccw(Dart d) const { return dart_at(vertex_of(d), position_of(d) + 1); }
  Dart next_cw(Dart d) const { return dart_at(vertex_of(d), position_of(d) + 3); }
  /// Straight-through continuation: the dart two positions away.
  Dart opposite(Dart d) const { return dart_at(vertex_of(d), position_of(d) + 2); }
  /// Face permutation; its orbits are the face walks.
  Dart face_next(Dart d) const { return next_ccw(mate(d)); }

  bool has_loop() const;
  /// Reverses every rotation (mirror image of the shadow).
  Diagram mirrored() const;
  /// Relabels vertices and edges; vertex_perm[v] is the new id of v and
  /// edge_perm[e] the new id of edge e (flip[e] swaps the two darts of e).
  Diagram relabeled(std::span<const int> vertex_perm, std::span<const int> edge_perm,
                    std::span<const bool> flip) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  void index();

  std::vector<Rotation> rotations_;
  std::vector<Vertex> vertex_of_;
  std::vector<int> position_of_;
};

struct ValidationReport {
  bool four_regular = false;
  bool connected = false;
  bool planar = false;
  bool reduced = false;
  bool prime = false;

  bool ok() const noexcept { return four_regular && connected && planar && reduced && prime; }
};

ValidationReport validate(const Diagram& d);

struct ComponentMap {
  std::vector<int> component_of;  // per dart
  std::vector<bool> outgoing;     // traversal leaves the dart's vertex through it
  int count = 0;
};

ComponentMap strand_components(const Diagram& d);

enum class CrossingKind { Link, Component };

CrossingKind crossing_kind(const Diagram& d, Vertex v);
CrossingKind crossing_kind(const Diagram& d, const ComponentMap& cm, Vertex v);

std::vector<std::vector<Dart>> faces(const Diagram& d);
int face_count(const Diagram& d);

Diagram torus_shadow(int n);
/// Single vertex with two loops: the condensation of every torus shadow.
Diagram g0();

/// True when no edge set of size < k disconnects the diagram.
bool edge_connectivity_at_least(const Diagram& d, int k);

}  // namespace altlink
