#include "altlink/region.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "altlink/moves.hpp"
#include "altlink/tangle.hpp"

namespace altlink {

bool Region::contains(Vertex v) const {
  return std::find(boundary.begin(), boundary.end(), v) != boundary.end() ||
         std::binary_search(interior.begin(), interior.end(), v);
}

std::vector<Dart> reversed_walk(const std::vector<Dart>& walk) {
  std::vector<Dart> r;
  r.reserve(walk.size());
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) r.push_back(mate(*it));
  return r;
}

std::optional<Region> region_from_walk(const Diagram& d, const std::vector<Dart>& walk) {
  const size_t len = walk.size();
  if (len == 0) return std::nullopt;
  const auto n = static_cast<size_t>(d.num_vertices());
  Region r;
  r.walk = walk;
  std::vector<int> boundary_index(n, -1);
  std::set<int> edges;
  for (size_t i = 0; i < len; ++i) {
    Vertex v = d.vertex_of(walk[i]);
    if (boundary_index[static_cast<size_t>(v)] >= 0) return std::nullopt;
    boundary_index[static_cast<size_t>(v)] = static_cast<int>(i);
    r.boundary.push_back(v);
    if (!edges.insert(walk[i] >> 1).second) return std::nullopt;
  }
  // Consecutive walk darts must chain up.
  for (size_t i = 0; i < len; ++i) {
    if (d.vertex_of(mate(walk[i])) != r.boundary[(i + 1) % len]) return std::nullopt;
  }
  std::vector<bool> region_dart(static_cast<size_t>(d.num_darts()), false);
  std::vector<bool> inward(static_cast<size_t>(d.num_darts()), false);
  std::vector<Dart> frontier;
  for (size_t i = 0; i < len; ++i) {
    const Dart depart = walk[i];
    const Dart arrive = mate(walk[(i + len - 1) % len]);
    region_dart[static_cast<size_t>(depart)] = region_dart[static_cast<size_t>(mate(depart))] = true;
    int degree = 2;
    for (Dart x = d.next_ccw(depart); x != arrive; x = d.next_ccw(x)) {
      if (x == depart) return std::nullopt;
      inward[static_cast<size_t>(x)] = true;
      frontier.push_back(x);
      ++degree;
    }
    if (degree == 2) r.base_vertices.push_back(r.boundary[i]);
    if (degree > 3) return std::nullopt;
  }
  std::vector<bool> inside(n, false);
  while (!frontier.empty()) {
    Dart x = frontier.back();
    frontier.pop_back();
    region_dart[static_cast<size_t>(x)] = true;
    Dart y = mate(x);
    Vertex w = d.vertex_of(y);
    if (boundary_index[static_cast<size_t>(w)] >= 0) {
      if (!inward[static_cast<size_t>(y)]) return std::nullopt;
      region_dart[static_cast<size_t>(y)] = true;
      continue;
    }
    if (inside[static_cast<size_t>(w)]) continue;
    inside[static_cast<size_t>(w)] = true;
    for (Dart z : d.rotation(w)) frontier.push_back(z);
  }
  for (size_t v = 0; v < n; ++v) {
    if (inside[v]) r.interior.push_back(static_cast<Vertex>(v));
  }
  for (Dart x = 0; x < d.num_darts(); ++x) {
    if (region_dart[static_cast<size_t>(x)]) r.darts.push_back(x);
  }
  return r;
}

bool is_two_region(const Diagram& d, const Region& r) {
  auto again = region_from_walk(d, r.walk);
  return again && again->base_vertices.size() == 2;
}

bool is_minimal_loop(const Diagram& d, const Region& r) {
  auto again = region_from_walk(d, r.walk);
  return again && again->base_vertices.size() == 1;
}

namespace {

// Departure darts and visited vertices of the strand leaving along x.
void trace_strand(const Diagram& d, Dart x, size_t steps, std::vector<Dart>& darts, std::vector<Vertex>& verts) {
  darts.clear();
  verts.clear();
  verts.push_back(d.vertex_of(x));
  for (size_t k = 0; k < steps; ++k) {
    darts.push_back(x);
    verts.push_back(d.vertex_of(mate(x)));
    x = d.opposite(mate(x));
  }
}

bool region_less(const Region& a, const Region& b) {
  if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
  if (a.boundary.size() != b.boundary.size()) return a.boundary.size() < b.boundary.size();
  return a.darts < b.darts;
}

}  // namespace

std::vector<Region> find_two_regions(const Diagram& d) {
  auto report = validate(d);
  if (!report.reduced) throw Error(ErrorCode::NotReduced, "diagram has a loop");
  if (!report.prime) throw Error(ErrorCode::NotPrime, "diagram has a 2-edge cut");
  const auto steps = static_cast<size_t>(d.num_darts());
  std::vector<Region> out;
  std::set<std::vector<Dart>> seen;
  std::vector<Dart> s1, s2;
  std::vector<Vertex> v1, v2;
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    for (int k = 0; k < 4; ++k) {
      trace_strand(d, d.dart_at(v, k), steps, s1, v1);
      trace_strand(d, d.dart_at(v, k + 1), steps, s2, v2);
      // First vertex on strand 1 that strand 2 also reaches, with both
      // prefixes simple.
      std::vector<int> first2(static_cast<size_t>(d.num_vertices()), -1);
      for (size_t j = 1; j < v2.size(); ++j) {
        if (v2[j] == v) break;
        if (first2[static_cast<size_t>(v2[j])] >= 0) break;
        first2[static_cast<size_t>(v2[j])] = static_cast<int>(j);
      }
      std::vector<bool> on1(static_cast<size_t>(d.num_vertices()), false);
      on1[static_cast<size_t>(v)] = true;
      for (size_t i = 1; i < v1.size(); ++i) {
        const Vertex q = v1[i];
        if (on1[static_cast<size_t>(q)]) break;
        on1[static_cast<size_t>(q)] = true;
        const int j = first2[static_cast<size_t>(q)];
        if (j < 0) continue;
        std::vector<Dart> walk(s1.begin(), s1.begin() + static_cast<long>(i));
        for (int t = j - 1; t >= 0; --t) walk.push_back(mate(s2[static_cast<size_t>(t)]));
        for (const auto& w : {walk, reversed_walk(walk)}) {
          auto r = region_from_walk(d, w);
          if (r && r->base_vertices.size() == 2 && seen.insert(r->darts).second) out.push_back(std::move(*r));
        }
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(), region_less);
  return out;
}

Region minimize_two_region(const Diagram& d, const Region& r) {
  const auto cands = find_two_regions(d);
  Region cur = r;
  for (;;) {
    const Region* best = nullptr;
    for (const auto& c : cands) {
      if (c.darts.size() >= cur.darts.size()) continue;
      if (!std::includes(cur.darts.begin(), cur.darts.end(), c.darts.begin(), c.darts.end())) continue;
      if (!best || region_less(c, *best)) best = &c;
    }
    if (!best) return cur;
    cur = *best;
  }
}

Region find_minimal_loop(const Diagram& d, Vertex v) {
  auto cm = strand_components(d);
  if (crossing_kind(d, cm, v) != CrossingKind::Component) {
    throw Error(ErrorCode::NotComponentCrossing, "crossing " + std::to_string(v) + " joins two components");
  }
  std::vector<Dart> darts;
  std::vector<Vertex> verts;
  trace_strand(d, d.dart_at(v, 0), static_cast<size_t>(d.num_darts()), darts, verts);
  std::vector<int> first(static_cast<size_t>(d.num_vertices()), -1);
  for (size_t j = 0; j < verts.size(); ++j) {
    const int i = first[static_cast<size_t>(verts[j])];
    if (i < 0) {
      first[static_cast<size_t>(verts[j])] = static_cast<int>(j);
      continue;
    }
    std::vector<Dart> walk(darts.begin() + i, darts.begin() + static_cast<long>(j));
    // The side where the returning strand arrives next to the first departure.
    if (d.next_ccw(walk.front()) != mate(walk.back())) walk = reversed_walk(walk);
    auto r = region_from_walk(d, walk);
    if (!r || r->base_vertices.size() != 1) throw Error(ErrorCode::BadIncidence, "circuit loop failed the predicate");
    return *r;
  }
  throw Error(ErrorCode::BadIncidence, "component circuit did not close");
}

namespace {

std::set<int> boundary_edges(const Region& r) {
  std::set<int> e;
  for (Dart x : r.walk) e.insert(x >> 1);
  return e;
}

OtsTriangle checked_triangle(const Diagram& d, const Region& r, std::array<Vertex, 3> tri) {
  std::sort(tri.begin(), tri.end());
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      if (multiplicity(d, tri[static_cast<size_t>(a)], tri[static_cast<size_t>(b)]) > 1) {
        throw Error(ErrorCode::TriangleTouchesTwoGroup, "triangle edge lies on a 2-group");
      }
    }
  }
  auto t = ots_triangle_on(d, tri);
  if (!t) throw Error(ErrorCode::NotOtsTriangle, "vertices do not bound a triangle face");
  for (Dart x : t->face_darts) {
    if (!std::binary_search(r.darts.begin(), r.darts.end(), x)) {
      throw Error(ErrorCode::TriangleNotInRegion, "triangle face lies outside the region");
    }
  }
  return *t;
}

}  // namespace

int region_ots_case(const Diagram& d, const Region& r, std::array<Vertex, 3> triangle) {
  auto t = checked_triangle(d, r, triangle);
  auto be = boundary_edges(r);
  int on = 0;
  for (Dart x : t.face_darts) on += be.count(x >> 1) ? 1 : 0;
  return on + 1;
}

RegionOtsResult region_ots(const Diagram& d, const Region& r, std::array<Vertex, 3> triangle) {
  const int ots_case = region_ots_case(d, r, triangle);
  const auto t = checked_triangle(d, r, triangle);
  Diagram after = apply_OTS(d, t).diagram;
  auto in_t = [&](Vertex v) { return v == t.vertices[0] || v == t.vertices[1] || v == t.vertices[2]; };

  const size_t len = r.walk.size();
  size_t start = 0;  // a boundary position outside the triangle
  while (start < len && in_t(r.boundary[start])) ++start;
  if (start == len) throw Error(ErrorCode::TriangleNotInRegion, "boundary lies entirely on the triangle");

  std::vector<Dart> walk;
  size_t i = 0;
  while (i < len) {
    const size_t at = (start + i) % len;
    if (!in_t(r.boundary[at])) {
      walk.push_back(r.walk[at]);
      ++i;
      continue;
    }
    // A run of triangle vertices: keep its entry and exit edges and join
    // them through the triangle as it sits after the move.
    const Dart entry = mate(r.walk[(at + len - 1) % len]);
    size_t last = at;
    while (i < len && in_t(r.boundary[(start + i) % len])) {
      last = (start + i) % len;
      ++i;
    }
    const Dart exit = r.walk[last];
    const Vertex h_in = after.vertex_of(entry), h_out = after.vertex_of(exit);
    if (h_in != h_out) {
      Dart link = -1;
      for (Dart x : after.rotation(h_in)) {
        if (after.vertex_of(mate(x)) == h_out) link = x;
      }
      walk.push_back(link);
    }
    walk.push_back(exit);
  }
  auto moved = region_from_walk(after, walk);
  if (!moved || moved->base_vertices.size() != r.base_vertices.size()) {
    throw Error(ErrorCode::BadIncidence, "region did not survive the ots");
  }
  return {after, *moved, ots_case};
}

}  // namespace altlink
