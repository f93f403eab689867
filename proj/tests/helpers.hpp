#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "altlink/canonical.hpp"
#include "altlink/diagram.hpp"
#include "altlink/io.hpp"
#include "altlink/moves.hpp"
#include "altlink/orbit.hpp"
#include "altlink/tangle.hpp"

namespace fixtures {

inline altlink::Diagram load(const std::string& name) {
  return altlink::parse_diagram_file(std::string(FIXTURE_DIR) + "/" + name + ".ld");
}

inline altlink::Diagram knot932() { return load("knot932"); }

// T on the first two crossings of the closed 4-braid.
inline altlink::Diagram figure_eight() {
  auto t = altlink::torus_shadow(4);
  return altlink::apply_T(t, std::vector<altlink::Vertex>{0, 1}).diagram;
}

// Two trefoil shadows joined along a cut pair of edges.
inline altlink::Diagram trefoil_sum() {
  auto a = altlink::torus_shadow(3);
  std::vector<altlink::Diagram::Rotation> rot = a.rotations();
  const int shift = 12;
  for (auto r : a.rotations()) {
    for (auto& x : r) x += shift;
    rot.push_back(r);
  }
  // Swap partners of edge 0 (darts 0,1) and edge 6 (darts 12,13): 0-13, 12-1.
  for (auto& r : rot) {
    for (auto& x : r) {
      if (x == 1) x = 13;
      else if (x == 13) x = 1;
    }
  }
  return altlink::Diagram::build(rot);
}

inline std::vector<int> sorted_group_sizes(const altlink::Diagram& d) {
  std::vector<int> s;
  for (auto& g : altlink::find_groups(d)) s.push_back(g.size());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

// Random relabeling of vertices, edges and dart sides.
inline altlink::Diagram shuffled(const altlink::Diagram& d, std::mt19937& rng) {
  std::vector<int> vp(static_cast<size_t>(d.num_vertices())), ep(static_cast<size_t>(d.num_edges()));
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(ep.begin(), ep.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(ep.begin(), ep.end(), rng);
  std::unique_ptr<bool[]> flip(new bool[ep.size()]);
  for (size_t i = 0; i < ep.size(); ++i) flip[i] = (rng() & 1) != 0;
  auto r = d.relabeled(vp, ep, std::span<const bool>(flip.get(), ep.size()));
  // Rotate each vertex's rotation start.
  std::vector<altlink::Diagram::Rotation> rot = r.rotations();
  for (auto& q : rot) std::rotate(q.begin(), q.begin() + static_cast<long>(rng() % 4), q.end());
  return altlink::Diagram::build(rot);
}

// Every reduced prime shadow on n crossings, from the independent generator.
inline std::vector<altlink::Diagram> all_shadows(int n) {
  std::vector<altlink::Diagram> out;
  for (const auto& code : altlink::brute_force_shadows(n, true)) out.push_back(altlink::decode({code, true}));
  return out;
}

// Shadows on 3..max_n crossings plus the named fixtures.
inline std::vector<altlink::Diagram> corpus(int max_n = 7) {
  std::vector<altlink::Diagram> out{knot932(), figure_eight()};
  for (int n = 3; n <= max_n; ++n) {
    for (auto& d : all_shadows(n)) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace fixtures
