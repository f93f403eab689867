#include <cstring>
#include <string>

#include "doctest.h"
#include "altlink/altlink.h"

namespace {

std::string fixture(const char* name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string take(char* s) {
  std::string out = s ? s : "";
  altlink_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("diagram handles") {
  altlink_diagram* d = nullptr;
  REQUIRE(altlink_diagram_load(fixture("knot932.ld").c_str(), &d) == ALTLINK_OK);
  CHECK(altlink_diagram_vertices(d) == 9);

  int ok = 0;
  char* report = nullptr;
  CHECK(altlink_validate(d, &ok, &report) == ALTLINK_OK);
  CHECK(ok == 1);
  CHECK(take(report).find("prime yes") != std::string::npos);

  int components = 0;
  CHECK(altlink_components(d, &components, nullptr) == ALTLINK_OK);
  CHECK(components == 1);

  char* text = nullptr;
  REQUIRE(altlink_diagram_render(d, &text) == ALTLINK_OK);
  altlink_diagram* again = nullptr;
  REQUIRE(altlink_diagram_parse(text, &again) == ALTLINK_OK);
  altlink_string_free(text);
  char* a = nullptr;
  char* b = nullptr;
  altlink_diagram_canon(d, 1, &a);
  altlink_diagram_canon(again, 1, &b);
  CHECK(take(a) == take(b));

  altlink_diagram* condensed = nullptr;
  char* rounds = nullptr;
  REQUIRE(altlink_condense(d, &condensed, &rounds) == ALTLINK_OK);
  CHECK(take(rounds).rfind("rounds 9 7 6\n", 0) == 0);
  CHECK(altlink_diagram_vertices(condensed) == 6);

  const int pair[] = {0, 1};
  altlink_diagram* turned = nullptr;
  REQUIRE(altlink_apply_t(d, pair, 2, &turned) == ALTLINK_OK);
  CHECK(altlink_components(turned, &components, nullptr) == ALTLINK_OK);
  CHECK(components == 2);

  altlink_diagram_free(turned);
  altlink_diagram_free(condensed);
  altlink_diagram_free(again);
  altlink_diagram_free(d);
}

TEST_CASE("errors carry codes and messages") {
  altlink_diagram* d = nullptr;
  altlink_status s = altlink_diagram_parse("linkdiagram 1\nvertices 2\n0: 0 1\n", &d);
  CHECK(std::string(altlink_status_name(s)) == "SyntaxError");
  CHECK(std::string(altlink_last_error()).find("line") != std::string::npos);
  CHECK(d == nullptr);

  s = altlink_diagram_load("/nonexistent/file.ld", &d);
  CHECK(std::string(altlink_status_name(s)) == "IoError");

  altlink_diagram* t = nullptr;
  REQUIRE(altlink_diagram_torus(5, &t) == ALTLINK_OK);
  altlink_diagram* out = nullptr;
  const int all[] = {0, 1, 2, 3, 4};
  s = altlink_apply_t(t, all, 5, &out);
  CHECK(std::string(altlink_status_name(s)) == "CyclicGroup");
  const int tri[] = {0, 1, 2};
  s = altlink_apply_ots(t, tri, &out);
  CHECK(std::string(altlink_status_name(s)) == "NotOtsTriangle");
  CHECK(std::string(altlink_status_name(altlink_diagram_torus(1, &out))) == "BadSize");
  CHECK(std::string(altlink_status_name(altlink_validate(nullptr, nullptr, nullptr))) == "RangeError");
  altlink_diagram_free(t);
}

TEST_CASE("reduce, serialise and verify") {
  altlink_diagram* d = nullptr;
  REQUIRE(altlink_diagram_load(fixture("knot932.ld").c_str(), &d) == ALTLINK_OK);
  altlink_trace* t = nullptr;
  REQUIRE(altlink_reduce(d, 0, &t) == ALTLINK_OK);
  char* jsonl = nullptr;
  REQUIRE(altlink_trace_jsonl(t, &jsonl) == ALTLINK_OK);
  std::string text = jsonl;
  altlink_trace* back = nullptr;
  REQUIRE(altlink_trace_parse(jsonl, &back) == ALTLINK_OK);
  altlink_string_free(jsonl);

  int ok = 0;
  char* report = nullptr;
  CHECK(altlink_verify(d, back, &ok, &report) == ALTLINK_OK);
  CHECK(ok == 1);
  altlink_string_free(report);

  // Forge a component count.
  auto pos = text.find("\"components_after\":2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::strlen("\"components_after\":2"), "\"components_after\":3");
  altlink_trace* forged = nullptr;
  REQUIRE(altlink_trace_parse(text.c_str(), &forged) == ALTLINK_OK);
  CHECK(altlink_verify(d, forged, &ok, nullptr) == ALTLINK_OK);
  CHECK(ok == 0);

  altlink_trace* junk = nullptr;
  CHECK(std::string(altlink_status_name(altlink_trace_parse("{}", &junk))) == "BadTrace");

  char* summary = nullptr;
  altlink_trace_summary(t, &summary);
  CHECK(take(summary).find("checkpoints 9 7 6") != std::string::npos);

  altlink_trace_free(forged);
  altlink_trace_free(back);
  altlink_trace_free(t);
  altlink_diagram_free(d);
}

TEST_CASE("orbit catalogs") {
  altlink_catalog* c = nullptr;
  REQUIRE(altlink_orbit(5, -1, 1, &c) == ALTLINK_OK);
  CHECK(altlink_catalog_size(c) == 3);
  CHECK(altlink_catalog_partial(c) == 0);
  int equal = 0;
  char* report = nullptr;
  REQUIRE(altlink_catalog_check_brute_force(c, &equal, &report) == ALTLINK_OK);
  CHECK(equal == 1);
  CHECK(take(report).find("orbit == brute force") != std::string::npos);
  char* codes = nullptr;
  altlink_catalog_codes(c, &codes);
  std::string lines = take(codes);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 3);
  altlink_catalog_free(c);
}
