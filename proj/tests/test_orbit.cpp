#include "doctest.h"
#include "helpers.hpp"
#include "altlink/orbit.hpp"

using namespace altlink;

TEST_CASE("brute-force shadow counts") {
  // Reduced prime 4-regular plane multigraphs up to reflection.
  const std::vector<size_t> expected{1, 1, 2, 3, 9, 18, 62};
  for (int n = 2; n <= 8; ++n) {
    auto shadows = brute_force_shadows(n, true);
    CHECK(shadows.size() == expected[static_cast<size_t>(n - 2)]);
    CHECK(shadows.count(canonical_code(torus_shadow(n), true).code) == 1);
    for (const auto& code : shadows) CHECK(validate(decode({code, true})).ok());
  }
  CHECK(brute_force_shadows(3, true) == std::set<std::vector<int>>{canonical_code(torus_shadow(3), true).code});
  try {
    brute_force_shadows(kBruteForceLimit + 1, true);
    FAIL("expected SizeTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeTooLarge);
  }
}

TEST_CASE("orbit equals brute force") {
  for (int n = 3; n <= 7; ++n) {
    auto orbit = enumerate_orbit(n);
    CHECK_FALSE(orbit.partial);
    CHECK(compare_catalogs(orbit, brute_force_shadows(n, true)).empty());
  }
  CHECK(enumerate_orbit(3).codes.size() == 1);
}

TEST_CASE("orbit without reflection folding") {
  for (int n = 3; n <= 6; ++n) {
    auto orbit = enumerate_orbit(n, std::nullopt, false);
    CHECK(compare_catalogs(orbit, brute_force_shadows(n, false)).empty());
  }
}

TEST_CASE("orbit catalogs are closed and witnessed") {
  auto orbit = enumerate_orbit(6);
  CHECK(closure_violations(orbit).empty());
  CHECK(orbit.provenance.size() == orbit.codes.size());
  const std::string seed = canonical_code(torus_shadow(6), true).to_string();
  CHECK(orbit.provenance.at(seed).parent.empty());
  for (const auto& [code, w] : orbit.provenance) {
    if (w.parent.empty()) continue;
    auto parent = decode(CanonicalCode::parse(w.parent, true));
    CHECK(canonical_code(apply_move(parent, w.move), true).to_string() == code);
    CHECK(orbit.provenance.at(w.parent).depth == w.depth - 1);
  }
}

TEST_CASE("catalog comparison") {
  auto orbit = enumerate_orbit(4);
  auto brute = brute_force_shadows(4, true);
  CHECK(compare_catalogs(orbit, brute).empty());
  auto tampered = orbit;
  tampered.codes.erase(tampered.codes.begin());
  auto diff = compare_catalogs(tampered, brute);
  CHECK(diff.only_in_reference.size() == 1);
  CHECK(diff.only_in_orbit.empty());
  try {
    compare_catalogs(orbit, brute_force_shadows(5, true));
    FAIL("expected MismatchedSize");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MismatchedSize);
  }
}

TEST_CASE("depth limit marks the catalog partial") {
  auto shallow = enumerate_orbit(7, 0);
  CHECK(shallow.partial);
  CHECK(shallow.codes.size() == 1);
  auto full = enumerate_orbit(7, 50);
  CHECK_FALSE(full.partial);
}

TEST_CASE("catalog output is deterministic and sorted") {
  auto a = enumerate_orbit(6), b = enumerate_orbit(6);
  CHECK(catalog_codes_text(a) == catalog_codes_text(b));
  CHECK(catalog_witness_jsonl(a) == catalog_witness_jsonl(b));
  auto text = catalog_codes_text(a);
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  CHECK(lines.size() == a.codes.size());
  CHECK(std::is_sorted(lines.begin(), lines.end()));
}

TEST_CASE("orbit rejects too few crossings") {
  try {
    enumerate_orbit(1);
    FAIL("expected BadSize");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadSize);
  }
}
