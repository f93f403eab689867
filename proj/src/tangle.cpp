#include "altlink/tangle.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace altlink {

namespace {

std::string describe(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

struct Bigon {
  Vertex u, w;
  Dart at_u;  // face dart leaving u
};

std::vector<Bigon> bigons(const Diagram& d) {
  std::vector<Bigon> out;
  for (const auto& f : faces(d)) {
    if (f.size() != 2) continue;
    Vertex u = d.vertex_of(f[0]), w = d.vertex_of(f[1]);
    if (u == w) continue;
    out.push_back({u, w, f[0]});
  }
  return out;
}

}  // namespace

Tangle make_tangle(const Diagram& d, const std::vector<Vertex>& vertices) {
  const int n = d.num_vertices();
  std::vector<bool> in(static_cast<size_t>(n), false);
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
    if (in[static_cast<size_t>(v)]) throw Error(ErrorCode::NotFullProper, "repeated vertex in " + describe(vertices));
    in[static_cast<size_t>(v)] = true;
  }
  if (vertices.empty() || static_cast<int>(vertices.size()) == n) {
    throw Error(ErrorCode::NotFullProper, "tangle must be a proper nonempty subset");
  }
  // Induced connectivity.
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<Vertex> stack{vertices.front()};
  seen[static_cast<size_t>(vertices.front())] = true;
  size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Dart x : d.rotation(v)) {
      Vertex w = d.vertex_of(mate(x));
      if (in[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertices.size()) throw Error(ErrorCode::NotFullProper, "tangle " + describe(vertices) + " is disconnected");

  auto external = [&](Dart x) { return !in[static_cast<size_t>(d.vertex_of(mate(x)))]; };
  Dart first = -1;
  int total = 0;
  for (Vertex v : vertices) {
    for (Dart x : d.rotation(v)) {
      if (external(x)) {
        ++total;
        if (first < 0 || x < first) first = x;
      }
    }
  }
  Tangle t{vertices, {}};
  std::sort(t.vertices.begin(), t.vertices.end());
  // Walk the face of the induced subgraph that holds `first`; a dangling
  // external dart acts as a fixed point of the edge involution.
  Dart x = first;
  do {
    if (external(x)) t.external_darts.push_back(x);
    x = external(x) ? d.next_ccw(x) : d.next_ccw(mate(x));
  } while (x != first);
  if (t.m() != total) {
    throw Error(ErrorCode::NotFullProper, "external darts of " + describe(vertices) + " lie on several faces");
  }
  return t;
}

std::vector<Group> find_groups(const Diagram& d) {
  const auto n = static_cast<size_t>(d.num_vertices());
  const auto bg = bigons(d);
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& b : bg) {
    auto& au = adj[static_cast<size_t>(b.u)];
    if (std::find(au.begin(), au.end(), b.w) == au.end()) {
      au.push_back(b.w);
      adj[static_cast<size_t>(b.w)].push_back(b.u);
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<bool> done(n, false);
  std::vector<Group> out;
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (done[static_cast<size_t>(s)]) continue;
    // Collect the bigon component of s.
    std::vector<Vertex> comp{s};
    std::vector<bool> mark(n, false);
    mark[static_cast<size_t>(s)] = true;
    for (size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : adj[static_cast<size_t>(comp[i])]) {
        if (!mark[static_cast<size_t>(w)]) {
          mark[static_cast<size_t>(w)] = true;
          comp.push_back(w);
        }
      }
    }
    Group g;
    int comp_bigons = 0;
    for (const auto& b : bg) comp_bigons += mark[static_cast<size_t>(b.u)] ? 1 : 0;
    g.cyclic = comp.size() == n && comp_bigons >= static_cast<int>(n);
    // Start from an end of the chain (smallest id among degree-1 vertices),
    // or from the smallest vertex of a cycle.
    Vertex start = *std::min_element(comp.begin(), comp.end());
    if (!g.cyclic) {
      Vertex best = -1;
      for (Vertex v : comp) {
        if (adj[static_cast<size_t>(v)].size() <= 1 && (best < 0 || v < best)) best = v;
      }
      if (best >= 0) start = best;
    }
    Vertex prev = -1, cur = start;
    std::vector<bool> used(n, false);
    while (cur >= 0 && !used[static_cast<size_t>(cur)]) {
      used[static_cast<size_t>(cur)] = true;
      g.crossings.push_back(cur);
      Vertex next = -1;
      for (Vertex w : adj[static_cast<size_t>(cur)]) {
        if (w != prev && !used[static_cast<size_t>(w)]) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    // Any branch vertices (possible only in non-prime inputs) become their
    // own groups on later iterations.
    for (Vertex v : g.crossings) done[static_cast<size_t>(v)] = true;
    if (g.crossings.size() != comp.size()) g.cyclic = false;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
    return *std::min_element(a.crossings.begin(), a.crossings.end()) <
           *std::min_element(b.crossings.begin(), b.crossings.end());
  });
  return out;
}

int multiplicity(const Diagram& d, Vertex u, Vertex w) {
  int k = 0;
  for (Dart x : d.rotation(u)) k += d.vertex_of(mate(x)) == w ? 1 : 0;
  return u == w ? k / 2 : k;
}

namespace {

// Position i at u such that darts i and i+1 bound a bigon face toward w.
int bigon_corner(const Diagram& d, Vertex u, Vertex w) {
  for (int i = 0; i < 4; ++i) {
    Dart a = d.dart_at(u, i + 1);
    Dart b = d.face_next(a);
    if (d.vertex_of(b) == w && d.face_next(b) == a && mate(d.dart_at(u, i)) != a) {
      if (d.vertex_of(mate(d.dart_at(u, i))) == w) return i;
    }
  }
  return -1;
}

}  // namespace

bool is_chain(const Diagram& d, const std::vector<Vertex>& crossings) {
  if (crossings.empty()) return false;
  std::vector<bool> seen(static_cast<size_t>(d.num_vertices()), false);
  for (Vertex v : crossings) {
    if (v < 0 || v >= d.num_vertices() || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  for (size_t i = 0; i + 1 < crossings.size(); ++i) {
    if (bigon_corner(d, crossings[i], crossings[i + 1]) < 0) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> order_as_chain(const Diagram& d, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return std::nullopt;
  if (vertices.size() == 1) return vertices;
  const auto n = static_cast<size_t>(d.num_vertices());
  std::vector<bool> in(n, false);
  for (Vertex v : vertices) in[static_cast<size_t>(v)] = true;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& b : bigons(d)) {
    if (!in[static_cast<size_t>(b.u)] || !in[static_cast<size_t>(b.w)]) continue;
    auto& au = adj[b.u];
    if (std::find(au.begin(), au.end(), b.w) == au.end()) {
      au.push_back(b.w);
      adj[b.w].push_back(b.u);
    }
  }
  Vertex start = -1;
  for (Vertex v : vertices) {
    if (adj[v].size() == 1 && (start < 0 || v < start)) start = v;
  }
  if (start < 0) start = *std::min_element(vertices.begin(), vertices.end());
  std::vector<Vertex> chain;
  std::vector<bool> used(n, false);
  Vertex cur = start;
  while (cur >= 0) {
    used[static_cast<size_t>(cur)] = true;
    chain.push_back(cur);
    Vertex next = -1;
    for (Vertex w : adj[cur]) {
      if (!used[static_cast<size_t>(w)]) {
        next = w;
        break;
      }
    }
    cur = next;
  }
  if (chain.size() != vertices.size()) return std::nullopt;
  return chain;
}

bool has_two_group(const Diagram& d) { return !bigons(d).empty(); }

GroupClass classify_group(const Diagram& d, const ComponentMap& cm, const Group& g) {
  GroupClass c;
  c.parity = g.size() % 2 == 0 ? Parity::Even : Parity::Odd;
  c.kind = crossing_kind(d, cm, g.crossings.front());
  if (c.kind == CrossingKind::Component && g.size() >= 2) {
    const int i = bigon_corner(d, g.crossings[0], g.crossings[1]);
    if (i < 0) throw Error(ErrorCode::BadIncidence, "crossings do not form a chain");
    const bool a = cm.outgoing[static_cast<size_t>(d.dart_at(g.crossings[0], i))];
    const bool b = cm.outgoing[static_cast<size_t>(d.dart_at(g.crossings[0], i + 1))];
    c.sign = a == b ? Sign::Positive : Sign::Negative;
  }
  return c;
}

GroupClass classify_group(const Diagram& d, const Group& g) {
  return classify_group(d, strand_components(d), g);
}

Group subgroup(const Group& g, int start, int len) {
  const int k = g.size();
  if (len < 1 || len > k || start < 0 || start >= k || (!g.cyclic && start + len > k)) {
    throw Error(ErrorCode::RangeError, "subgroup [" + std::to_string(start) + ", +" + std::to_string(len) +
                                           ") of a " + std::to_string(k) + "-group");
  }
  Group s;
  s.maximal = false;
  s.cyclic = g.cyclic && len == k;
  for (int i = 0; i < len; ++i) s.crossings.push_back(g.crossings[static_cast<size_t>((start + i) % k)]);
  return s;
}

std::vector<Dart> group_end_darts(const Diagram& d, const Group& g) {
  if (g.cyclic) throw Error(ErrorCode::CyclicGroupHasNoEnds, "closed 2-braid has no end darts");
  return make_tangle(d, g.crossings).external_darts;
}

std::vector<OtsTriangle> find_ots_triangles(const Diagram& d) {
  std::vector<OtsTriangle> out;
  for (const auto& f : faces(d)) {
    if (f.size() != 3) continue;
    std::array<Vertex, 3> vs{d.vertex_of(f[0]), d.vertex_of(f[1]), d.vertex_of(f[2])};
    if (vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2]) continue;
    if (multiplicity(d, vs[0], vs[1]) != 1 || multiplicity(d, vs[1], vs[2]) != 1 ||
        multiplicity(d, vs[0], vs[2]) != 1) {
      continue;
    }
    OtsTriangle t;
    t.face_darts = {f[0], f[1], f[2]};
    std::sort(vs.begin(), vs.end());
    t.vertices = vs;
    t.external_darts = make_tangle(d, {vs[0], vs[1], vs[2]}).external_darts;
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const OtsTriangle& a, const OtsTriangle& b) { return a.vertices < b.vertices; });
  return out;
}

std::optional<OtsTriangle> ots_triangle_on(const Diagram& d, std::array<Vertex, 3> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (auto& t : find_ots_triangles(d)) {
    if (t.vertices == vertices) return t;
  }
  return std::nullopt;
}

}  // namespace altlink
