#include "altlink/moves.hpp"

#include <algorithm>
#include <string>

namespace altlink {

Diagram turn_tangle(const Diagram& d, const Tangle& t) {
  const int m = t.m();
  if (m != 4 && m != 6) throw Error(ErrorCode::BadIncidence, "tangle has " + std::to_string(m) + " external darts");
  std::vector<Diagram::Rotation> rot = d.rotations();
  for (int i = 0; i < m; ++i) {
    Dart slot = t.external_darts[static_cast<size_t>(i)];
    Dart moved = t.external_darts[static_cast<size_t>((i + 1) % m)];
    rot[static_cast<size_t>(d.vertex_of(slot))][static_cast<size_t>(d.position_of(slot))] = moved;
  }
  return Diagram::build(rot);
}

namespace {

GroupClass class_of_chain(const Diagram& d, const ComponentMap& cm, const std::vector<Vertex>& crossings) {
  Group g;
  g.crossings = crossings;
  g.maximal = false;
  return classify_group(d, cm, g);
}

}  // namespace

MoveResult apply_T(const Diagram& d, const std::vector<Vertex>& crossings) {
  if (static_cast<int>(crossings.size()) == d.num_vertices() && find_groups(d).front().cyclic) {
    throw Error(ErrorCode::CyclicGroup, "cannot turn the whole closed 2-braid");
  }
  if (!is_chain(d, crossings)) throw Error(ErrorCode::BadIncidence, "operand is not a (sub)group");
  const Tangle t = make_tangle(d, crossings);
  MoveResult r{turn_tangle(d, t), 0, 0, {}, {}};
  const auto before = strand_components(d);
  const auto after = strand_components(r.diagram);
  r.components_before = before.count;
  r.components_after = after.count;
  r.class_before = class_of_chain(d, before, crossings);
  r.class_after = class_of_chain(r.diagram, after, crossings);
  return r;
}

MoveResult apply_T(const Diagram& d, const Group& g) {
  if (g.cyclic) throw Error(ErrorCode::CyclicGroup, "cannot turn the whole closed 2-braid");
  return apply_T(d, g.crossings);
}

MoveResult apply_OTS(const Diagram& d, const OtsTriangle& t) {
  Tangle tangle{{t.vertices.begin(), t.vertices.end()}, t.external_darts};
  MoveResult r{turn_tangle(d, tangle), strand_components(d).count, 0, {}, {}};
  r.components_after = strand_components(r.diagram).count;
  return r;
}

MoveResult apply_OTS(const Diagram& d, std::array<Vertex, 3> vertices) {
  auto t = ots_triangle_on(d, vertices);
  if (!t) {
    throw Error(ErrorCode::NotOtsTriangle, "no ots-triangle on " + std::to_string(vertices[0]) + "," +
                                               std::to_string(vertices[1]) + "," + std::to_string(vertices[2]));
  }
  return apply_OTS(d, *t);
}

namespace {

// Rotation system with sparse dart ids and dead vertices, used while
// contracting bigons.
struct Sparse {
  std::vector<Diagram::Rotation> rot;
  std::vector<bool> alive;
  std::vector<Vertex> vertex_of;
  std::vector<int> position_of;

  explicit Sparse(const Diagram& d) : rot(d.rotations()), alive(rot.size(), true) { reindex(); }

  void reindex() {
    vertex_of.assign(rot.size() * 4, -1);
    position_of.assign(rot.size() * 4, -1);
    for (size_t v = 0; v < rot.size(); ++v) {
      if (!alive[v]) continue;
      for (int p = 0; p < 4; ++p) {
        auto x = static_cast<size_t>(rot[v][static_cast<size_t>(p)]);
        vertex_of[x] = static_cast<Vertex>(v);
        position_of[x] = p;
      }
    }
  }
  Dart at(Vertex v, int p) const { return rot[static_cast<size_t>(v)][static_cast<size_t>(p & 3)]; }
  Dart face_next(Dart x) const {
    Dart y = mate(x);
    return at(vertex_of[static_cast<size_t>(y)], position_of[static_cast<size_t>(y)] + 1);
  }
  Vertex far(Dart x) const { return vertex_of[static_cast<size_t>(mate(x))]; }

  // A bigon face between u and w: returns the face dart leaving u, or -1.
  Dart bigon_between(Vertex u, Vertex w) const {
    for (Dart a : rot[static_cast<size_t>(u)]) {
      if (far(a) != w) continue;
      Dart b = face_next(a);
      if (vertex_of[static_cast<size_t>(b)] == w && face_next(b) == a) return a;
    }
    return -1;
  }

  // Removes the bigon through face dart a (at u) and merges its far vertex
  // into u.
  void collapse(Dart a) {
    const Vertex u = vertex_of[static_cast<size_t>(a)];
    const Dart b = face_next(a);
    const Vertex w = vertex_of[static_cast<size_t>(b)];
    const int pa = position_of[static_cast<size_t>(a)];
    const int pb = position_of[static_cast<size_t>(b)];
    Diagram::Rotation merged{at(u, pa + 1), at(u, pa + 2), at(w, pb + 1), at(w, pb + 2)};
    rot[static_cast<size_t>(u)] = merged;
    alive[static_cast<size_t>(w)] = false;
    reindex();
  }

  // Dense relabeling: live vertices keep their relative order, edges are
  // numbered by their smaller surviving dart.
  Diagram compact(std::vector<Vertex>* new_id) const {
    std::vector<Vertex> id(rot.size(), -1);
    std::vector<Diagram::Rotation> out;
    for (size_t v = 0; v < rot.size(); ++v) {
      if (!alive[v]) continue;
      id[v] = static_cast<Vertex>(out.size());
      out.push_back(rot[v]);
    }
    std::vector<int> edge_id(rot.size() * 2, -1);
    int next = 0;
    for (size_t e = 0; e < edge_id.size(); ++e) {
      if (vertex_of[2 * e] >= 0) edge_id[e] = next++;
    }
    for (auto& r : out) {
      for (auto& x : r) x = 2 * edge_id[static_cast<size_t>(x >> 1)] + (x & 1);
    }
    if (new_id) *new_id = id;
    return Diagram::build(out);
  }
};

}  // namespace

Diagram collapse_two_group(const Diagram& d, const Group& g) {
  if (g.size() != 2 || multiplicity(d, g.crossings[0], g.crossings[1]) < 2) {
    throw Error(ErrorCode::NotTwoGroup, "operand is not a 2-group");
  }
  Sparse s(d);
  Dart a = s.bigon_between(g.crossings[0], g.crossings[1]);
  if (a < 0) throw Error(ErrorCode::NotTwoGroup, "crossings do not bound a bigon face");
  s.collapse(a);
  return s.compact(nullptr);
}

Diagram quotient(const Diagram& d, const std::vector<std::vector<Vertex>>& blocks, std::vector<Vertex>* vertex_map) {
  Sparse s(d);
  std::vector<Vertex> rep(static_cast<size_t>(d.num_vertices()), -1);
  for (const auto& b : blocks) {
    auto chain = order_as_chain(d, b);
    if (!chain) throw Error(ErrorCode::BadIncidence, "block is not a chain of crossings");
    const Vertex head = chain->front();
    for (size_t i = 1; i < chain->size(); ++i) {
      Dart a = s.bigon_between(head, (*chain)[i]);
      if (a < 0) throw Error(ErrorCode::BadIncidence, "block is not a chain of crossings");
      s.collapse(a);
    }
    for (Vertex v : *chain) rep[static_cast<size_t>(v)] = head;
  }
  if (std::count(rep.begin(), rep.end(), -1) != 0) throw Error(ErrorCode::BadIncidence, "blocks do not cover the diagram");
  std::vector<Vertex> id;
  Diagram q = s.compact(&id);
  if (vertex_map) {
    vertex_map->resize(rep.size());
    for (size_t v = 0; v < rep.size(); ++v) (*vertex_map)[v] = id[static_cast<size_t>(rep[v])];
  }
  return q;
}

Condensation condense_rounds(const Diagram& d) {
  Condensation c{d, {}};
  for (;;) {
    auto groups = find_groups(c.result);
    if (groups.size() == static_cast<size_t>(c.result.num_vertices())) break;
    std::vector<std::vector<Vertex>> blocks;
    for (auto& g : groups) blocks.push_back(g.crossings);
    c.result = quotient(c.result, blocks);
    c.round_counts.push_back(c.result.num_vertices());
  }
  return c;
}

Diagram condense(const Diagram& d) { return condense_rounds(d).result; }

}  // namespace altlink
