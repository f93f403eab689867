#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "altlink/region.hpp"

using namespace altlink;

namespace {

bool has_proper_sub_candidate(const Diagram& d, const Region& r) {
  for (const auto& o : find_two_regions(d)) {
    if (o.darts.size() < r.darts.size() &&
        std::includes(r.darts.begin(), r.darts.end(), o.darts.begin(), o.darts.end())) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("each bigon of the trefoil shadow is an empty 2-region") {
  auto t = torus_shadow(3);
  int empty = 0;
  for (const auto& r : find_two_regions(t)) {
    CHECK(is_two_region(t, r));
    empty += r.is_two_group();
  }
  CHECK(empty >= 3);
}

TEST_CASE("torus shadows offer every bigon as a 2-group candidate") {
  for (int n = 3; n <= 8; ++n) {
    std::set<std::vector<Vertex>> bigons;
    for (const auto& r : find_two_regions(torus_shadow(n))) {
      if (r.is_two_group()) bigons.insert(r.darts);
    }
    CHECK(static_cast<int>(bigons.size()) == n);
  }
}

TEST_CASE("knot932 condensation 2-regions") {
  // The condensation is the octahedron: its 2-regions are pairs of adjacent
  // triangles, four boundary crossings and no interior crossing.
  auto c = condense(fixtures::knot932());
  auto regions = find_two_regions(c);
  REQUIRE_FALSE(regions.empty());
  bool beyond_two_group = false;
  for (const auto& r : regions) {
    CHECK(is_two_region(c, r));
    CHECK(r.interior.empty());
    beyond_two_group |= !r.is_two_group();
  }
  CHECK(beyond_two_group);
  auto m = minimize_two_region(c, regions.front());
  CHECK(m.boundary.size() == 4);
}

TEST_CASE("2-region generation rejects unreduced and composite input") {
  auto sum = fixtures::trefoil_sum();
  try {
    find_two_regions(sum);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
  try {
    find_two_regions(g0());
    FAIL("expected NotReduced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotReduced);
  }
}

TEST_CASE("minimizing a 2-region") {
  SUBCASE("a 2-group is already minimal") {
    auto f = fixtures::figure_eight();
    for (const auto& r : find_two_regions(f)) {
      if (!r.is_two_group()) continue;
      CHECK(minimize_two_region(f, r).darts == r.darts);
    }
  }
  SUBCASE("knot932 condensation regions shrink to minimal ones") {
    auto c = condense(fixtures::knot932());
    for (const auto& r : find_two_regions(c)) {
      auto m = minimize_two_region(c, r);
      CHECK(std::includes(r.darts.begin(), r.darts.end(), m.darts.begin(), m.darts.end()));
      CHECK(is_two_region(c, m));
      CHECK_FALSE(has_proper_sub_candidate(c, m));
    }
  }
  SUBCASE("the largest torus region shrinks to a bigon") {
    auto t = torus_shadow(6);
    auto regions = find_two_regions(t);
    auto m = minimize_two_region(t, regions.back());
    CHECK(m.is_two_group());
  }
  SUBCASE("every corpus shadow has a minimal 2-region") {
    for (const auto& d : fixtures::corpus(7)) {
      auto regions = find_two_regions(d);
      REQUIRE_FALSE(regions.empty());
      auto m = minimize_two_region(d, regions.front());
      CHECK(is_two_region(d, m));
      CHECK_FALSE(has_proper_sub_candidate(d, m));
    }
  }
}

TEST_CASE("minimal loops") {
  auto check_all = [](const Diagram& d) {
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      auto loop = find_minimal_loop(d, v);
      CHECK(is_minimal_loop(d, loop));
      // Boundary darts lie on the component of v.
      auto cm = strand_components(d);
      const int comp = cm.component_of[static_cast<size_t>(d.dart_at(v, 0))] == cm.component_of[static_cast<size_t>(d.dart_at(v, 2))]
                           ? cm.component_of[static_cast<size_t>(d.dart_at(v, 0))]
                           : -1;
      REQUIRE(comp >= 0);
      for (Dart x : loop.walk) CHECK(cm.component_of[static_cast<size_t>(x)] == comp);
    }
  };
  check_all(fixtures::knot932());
  check_all(torus_shadow(5));
  try {
    find_minimal_loop(torus_shadow(4), 0);
    FAIL("expected NotComponentCrossing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotComponentCrossing);
  }
}

TEST_CASE("every non-trivial minimal loop contains a 2-region") {
  for (const auto& d : fixtures::corpus(7)) {
    auto cm = strand_components(d);
    auto regions = find_two_regions(d);
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      if (crossing_kind(d, cm, v) != CrossingKind::Component) continue;
      auto loop = find_minimal_loop(d, v);
      if (loop.trivial()) continue;
      bool found = false;
      for (const auto& r : regions) {
        bool inside = true;
        for (Vertex w : r.boundary) inside &= loop.contains(w);
        for (Vertex w : r.interior) inside &= loop.contains(w);
        if (inside) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("region ots changes the vertex count by the boundary case") {
  std::map<int, int> seen;
  auto run = [&](const Diagram& d) {
    std::vector<Region> regions;
    for (const auto& r : find_two_regions(d)) regions.push_back(r);
    auto cm = strand_components(d);
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      if (crossing_kind(d, cm, v) == CrossingKind::Component) regions.push_back(find_minimal_loop(d, v));
    }
    for (const auto& r : regions) {
      const bool loop = is_minimal_loop(d, r);
      for (const auto& t : find_ots_triangles(d)) {
        RegionOtsResult res;
        try {
          res = region_ots(d, r, t.vertices);
        } catch (const Error& e) {
          CHECK((e.code() == ErrorCode::TriangleNotInRegion || e.code() == ErrorCode::TriangleTouchesTwoGroup));
          continue;
        }
        const int delta = res.region.vertex_count() - r.vertex_count();
        CHECK(delta == 1 - res.ots_case);
        if (loop) CHECK(is_minimal_loop(res.diagram, res.region));
        else CHECK(is_two_region(res.diagram, res.region));
        seen[res.ots_case]++;
      }
    }
  };
  for (int n = 5; n <= 8; ++n) {
    for (const auto& d : fixtures::all_shadows(n)) run(d);
  }
  // The first region with a triangle touching the boundary in a single
  // vertex appears at nine crossings.
  auto nine = enumerate_orbit(9);
  for (const auto& code : nine.codes) run(decode({code, true}));
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);
  CHECK(seen[3] > 0);
}
