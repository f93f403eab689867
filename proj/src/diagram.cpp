#include "altlink/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace altlink {

namespace {

bool is_connected(const std::vector<Diagram::Rotation>& rot, const std::vector<Vertex>& vertex_of) {
  const size_t n = rot.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart d : rot[static_cast<size_t>(v)]) {
      Vertex w = vertex_of[static_cast<size_t>(mate(d))];
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

void Diagram::index() {
  vertex_of_.assign(rotations_.size() * 4, -1);
  position_of_.assign(rotations_.size() * 4, -1);
  for (size_t v = 0; v < rotations_.size(); ++v) {
    for (int p = 0; p < 4; ++p) {
      auto d = static_cast<size_t>(rotations_[v][static_cast<size_t>(p)]);
      vertex_of_[d] = static_cast<Vertex>(v);
      position_of_[d] = p;
    }
  }
}

Diagram Diagram::build(const std::vector<std::vector<Dart>>& rotations) {
  std::vector<Rotation> fixed;
  fixed.reserve(rotations.size());
  for (size_t v = 0; v < rotations.size(); ++v) {
    if (rotations[v].size() != 4) {
      throw Error(ErrorCode::WrongDegree,
                  "vertex " + std::to_string(v) + " has " + std::to_string(rotations[v].size()) + " darts");
    }
    fixed.push_back({rotations[v][0], rotations[v][1], rotations[v][2], rotations[v][3]});
  }
  return build(fixed);
}

Diagram Diagram::build(const std::vector<Rotation>& rotations) {
  if (rotations.empty()) throw Error(ErrorCode::BadSize, "diagram has no vertices");
  const int total = static_cast<int>(rotations.size()) * 4;
  std::vector<int> seen(static_cast<size_t>(total), 0);
  for (const auto& r : rotations) {
    for (Dart d : r) {
      if (d < 0 || d >= total) {
        throw Error(ErrorCode::UnpairedDart, "dart " + std::to_string(d) + " out of range [0," +
                                                 std::to_string(total) + ")");
      }
      if (seen[static_cast<size_t>(d)]++) throw Error(ErrorCode::DuplicateDart, "dart " + std::to_string(d) + " listed twice");
    }
  }
  // Every id in range appears exactly once, so each dart's mate is present.
  Diagram g;
  g.rotations_ = rotations;
  g.index();
  if (!is_connected(g.rotations_, g.vertex_of_)) throw Error(ErrorCode::Disconnected, "diagram is not connected");
  const int f = face_count(g);
  const int euler = g.num_vertices() - g.num_edges() + f;
  if (euler != 2) {
    throw Error(ErrorCode::NonPlanar, "V - E + F = " + std::to_string(euler));
  }
  return g;
}

bool Diagram::has_loop() const {
  for (Dart d = 0; d < num_darts(); d += 2) {
    if (vertex_of(d) == vertex_of(d + 1)) return true;
  }
  return false;
}

Diagram Diagram::mirrored() const {
  Diagram g;
  g.rotations_.reserve(rotations_.size());
  for (const auto& r : rotations_) g.rotations_.push_back({r[0], r[3], r[2], r[1]});
  g.index();
  return g;
}

Diagram Diagram::relabeled(std::span<const int> vertex_perm, std::span<const int> edge_perm,
                           std::span<const bool> flip) const {
  Diagram g;
  g.rotations_.assign(rotations_.size(), Rotation{});
  for (size_t v = 0; v < rotations_.size(); ++v) {
    Rotation r{};
    for (size_t p = 0; p < 4; ++p) {
      Dart d = rotations_[v][p];
      auto e = static_cast<size_t>(d >> 1);
      int side = (d & 1) ^ (flip[e] ? 1 : 0);
      r[p] = 2 * edge_perm[e] + side;
    }
    g.rotations_[static_cast<size_t>(vertex_perm[v])] = r;
  }
  g.index();
  return g;
}

int face_count(const Diagram& d) {
  std::vector<bool> seen(static_cast<size_t>(d.num_darts()), false);
  int f = 0;
  for (Dart s = 0; s < d.num_darts(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    ++f;
    for (Dart x = s; !seen[static_cast<size_t>(x)]; x = d.face_next(x)) seen[static_cast<size_t>(x)] = true;
  }
  return f;
}

std::vector<std::vector<Dart>> faces(const Diagram& d) {
  std::vector<bool> seen(static_cast<size_t>(d.num_darts()), false);
  std::vector<std::vector<Dart>> out;
  for (Dart s = 0; s < d.num_darts(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<Dart> walk;
    for (Dart x = s; !seen[static_cast<size_t>(x)]; x = d.face_next(x)) {
      seen[static_cast<size_t>(x)] = true;
      walk.push_back(x);
    }
    out.push_back(std::move(walk));
  }
  return out;
}

namespace {

// Connectivity with up to two edges removed.
bool connected_without(const Diagram& d, int e1, int e2) {
  const int n = d.num_vertices();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart x : d.rotation(v)) {
      int e = x >> 1;
      if (e == e1 || e == e2) continue;
      Vertex w = d.vertex_of(mate(x));
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

bool edge_connectivity_at_least(const Diagram& d, int k) {
  if (d.num_vertices() == 0) return false;
  if (k >= 1 && !connected_without(d, -1, -1)) return false;
  const int edges = d.num_edges();
  if (k >= 2) {
    for (int e = 0; e < edges; ++e) {
      if (!connected_without(d, e, -1)) return false;
    }
  }
  if (k >= 3) {
    for (int e1 = 0; e1 < edges; ++e1) {
      for (int e2 = e1 + 1; e2 < edges; ++e2) {
        if (!connected_without(d, e1, e2)) return false;
      }
    }
  }
  return true;
}

ValidationReport validate(const Diagram& d) {
  ValidationReport r;
  if (d.num_vertices() == 0) return r;
  r.four_regular = true;  // Rotation is a fixed-size quadruple.
  r.connected = edge_connectivity_at_least(d, 1);
  r.planar = d.num_vertices() - d.num_edges() + face_count(d) == 2;
  r.reduced = !d.has_loop();
  r.prime = r.connected && edge_connectivity_at_least(d, 3);
  return r;
}

ComponentMap strand_components(const Diagram& d) {
  ComponentMap cm;
  cm.component_of.assign(static_cast<size_t>(d.num_darts()), -1);
  cm.outgoing.assign(static_cast<size_t>(d.num_darts()), false);
  for (Dart start = 0; start < d.num_darts(); ++start) {
    if (cm.component_of[static_cast<size_t>(start)] >= 0) continue;
    const int c = cm.count++;
    Dart x = start;
    do {
      cm.component_of[static_cast<size_t>(x)] = c;
      cm.outgoing[static_cast<size_t>(x)] = true;
      Dart in = mate(x);
      cm.component_of[static_cast<size_t>(in)] = c;
      x = d.opposite(in);
    } while (x != start);
  }
  return cm;
}

CrossingKind crossing_kind(const Diagram& d, const ComponentMap& cm, Vertex v) {
  if (v < 0 || v >= d.num_vertices()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  const auto& r = d.rotation(v);
  return cm.component_of[static_cast<size_t>(r[0])] == cm.component_of[static_cast<size_t>(r[1])]
             ? CrossingKind::Component
             : CrossingKind::Link;
}

CrossingKind crossing_kind(const Diagram& d, Vertex v) {
  if (v < 0 || v >= d.num_vertices()) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  return crossing_kind(d, strand_components(d), v);
}

Diagram torus_shadow(int n) {
  if (n < 2) throw Error(ErrorCode::BadSize, "torus shadow needs n >= 2, got " + std::to_string(n));
  // Edge 2v joins the upper arcs of v and v+1, edge 2v+1 the lower arcs.
  std::vector<Diagram::Rotation> rot(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    const int prev = (v + n - 1) % n;
    rot[static_cast<size_t>(v)] = {4 * v, 4 * prev + 1, 4 * prev + 3, 4 * v + 2};
  }
  return Diagram::build(rot);
}

Diagram g0() { return Diagram::build(std::vector<Diagram::Rotation>{{0, 1, 2, 3}}); }

}  // namespace altlink
