#include "altlink/altlink.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "altlink/canonical.hpp"
#include "altlink/error.hpp"
#include "altlink/io.hpp"
#include "altlink/moves.hpp"
#include "altlink/orbit.hpp"
#include "altlink/reduction.hpp"
#include "altlink/tangle.hpp"

struct altlink_diagram {
  altlink::Diagram d;
};
struct altlink_trace {
  altlink::ReductionTrace t;
};
struct altlink_catalog {
  altlink::Catalog c;
};

namespace {

thread_local std::string last_error;

template <class F>
altlink_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return ALTLINK_OK;
  } catch (const altlink::Error& e) {
    last_error = e.what();
    return static_cast<altlink_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return ALTLINK_INTERNAL_ERROR;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

void need(const void* p) {
  if (!p) throw altlink::Error(altlink::ErrorCode::RangeError, "null argument");
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

extern "C" {

const char* altlink_last_error(void) { return last_error.c_str(); }

const char* altlink_status_name(altlink_status status) {
  if (status == ALTLINK_OK) return "Ok";
  if (status == ALTLINK_INTERNAL_ERROR) return "InternalError";
  static thread_local std::string name;
  name = altlink::error_name(static_cast<altlink::ErrorCode>(status));
  return name.c_str();
}

void altlink_string_free(char* s) { std::free(s); }

altlink_status altlink_diagram_parse(const char* text, altlink_diagram** out) {
  return guarded([&] {
    need(text), need(out);
    *out = new altlink_diagram{altlink::parse_diagram(text)};
  });
}

altlink_status altlink_diagram_load(const char* path, altlink_diagram** out) {
  return guarded([&] {
    need(path), need(out);
    *out = new altlink_diagram{altlink::parse_diagram_file(path)};
  });
}

altlink_status altlink_diagram_torus(int n, altlink_diagram** out) {
  return guarded([&] {
    need(out);
    *out = new altlink_diagram{altlink::torus_shadow(n)};
  });
}

void altlink_diagram_free(altlink_diagram* d) { delete d; }

int altlink_diagram_vertices(const altlink_diagram* d) { return d ? d->d.num_vertices() : 0; }

altlink_status altlink_diagram_render(const altlink_diagram* d, char** out) {
  return guarded([&] { need(d), put(out, altlink::render_diagram(d->d)); });
}

altlink_status altlink_diagram_save(const altlink_diagram* d, const char* path) {
  return guarded([&] { need(d), need(path), altlink::write_text_file(path, altlink::render_diagram(d->d)); });
}

altlink_status altlink_diagram_dot(const altlink_diagram* d, char** out) {
  return guarded([&] { need(d), put(out, altlink::to_dot(d->d)); });
}

altlink_status altlink_diagram_export_dot(const altlink_diagram* d, const char* path) {
  return guarded([&] { need(d), need(path), altlink::export_dot(d->d, path); });
}

altlink_status altlink_diagram_canon(const altlink_diagram* d, int fold, char** out) {
  return guarded([&] { need(d), put(out, altlink::canonical_code(d->d, fold != 0).to_string()); });
}

altlink_status altlink_validate(const altlink_diagram* d, int* ok, char** report) {
  return guarded([&] {
    need(d);
    auto r = altlink::validate(d->d);
    if (ok) *ok = r.ok() ? 1 : 0;
    std::ostringstream s;
    s << "vertices " << d->d.num_vertices() << "\n"
      << "four_regular " << yes(r.four_regular) << "\n"
      << "connected " << yes(r.connected) << "\n"
      << "planar " << yes(r.planar) << "\n"
      << "reduced " << yes(r.reduced) << "\n"
      << "prime " << yes(r.prime) << "\n"
      << "faces " << altlink::face_count(d->d) << "\n"
      << (r.ok() ? "ok" : "not a reduced prime diagram") << "\n";
    put(report, s.str());
  });
}

altlink_status altlink_components(const altlink_diagram* d, int* count, char** report) {
  return guarded([&] {
    need(d);
    auto cm = altlink::strand_components(d->d);
    if (count) *count = cm.count;
    std::ostringstream s;
    s << "components " << cm.count << "\n";
    for (altlink::Vertex v = 0; v < d->d.num_vertices(); ++v) {
      bool link = altlink::crossing_kind(d->d, cm, v) == altlink::CrossingKind::Link;
      s << "crossing " << v << " " << (link ? "link" : "component") << "\n";
    }
    put(report, s.str());
  });
}

altlink_status altlink_groups(const altlink_diagram* d, char** report) {
  return guarded([&] {
    need(d);
    auto cm = altlink::strand_components(d->d);
    std::ostringstream s;
    auto groups = altlink::find_groups(d->d);
    s << "groups " << groups.size() << "\n";
    for (size_t i = 0; i < groups.size(); ++i) {
      const auto& g = groups[i];
      auto cls = altlink::classify_group(d->d, cm, g);
      s << "group " << i << " size " << g.size() << " crossings " << join(g.crossings)
        << " kind " << (cls.kind == altlink::CrossingKind::Link ? "link" : "component")
        << " sign "
        << (cls.sign == altlink::Sign::Positive ? "+" : cls.sign == altlink::Sign::Negative ? "-" : "n/a")
        << " parity " << (cls.parity == altlink::Parity::Even ? "even" : "odd") << (g.cyclic ? " cyclic" : "")
        << "\n";
    }
    put(report, s.str());
  });
}

altlink_status altlink_condense(const altlink_diagram* d, altlink_diagram** out, char** report) {
  return guarded([&] {
    need(d);
    auto c = altlink::condense_rounds(d->d);
    std::ostringstream s;
    s << "rounds " << d->d.num_vertices();
    for (int k : c.round_counts) s << " " << k;
    s << "\nresult " << altlink::canonical_code(c.result, true).to_string() << "\n";
    put(report, s.str());
    if (out) *out = new altlink_diagram{c.result};
  });
}

altlink_status altlink_apply_t(const altlink_diagram* d, const int* crossings, size_t count, altlink_diagram** out) {
  return guarded([&] {
    need(d), need(crossings), need(out);
    std::vector<altlink::Vertex> v(crossings, crossings + count);
    *out = new altlink_diagram{altlink::apply_T(d->d, v).diagram};
  });
}

altlink_status altlink_apply_ots(const altlink_diagram* d, const int* triangle, altlink_diagram** out) {
  return guarded([&] {
    need(d), need(triangle), need(out);
    std::array<altlink::Vertex, 3> t{triangle[0], triangle[1], triangle[2]};
    *out = new altlink_diagram{altlink::apply_OTS(d->d, t).diagram};
  });
}

altlink_status altlink_reduce(const altlink_diagram* d, int depth_cap, altlink_trace** out) {
  return guarded([&] {
    need(d), need(out);
    altlink::ReductionOptions opt;
    if (depth_cap > 0) opt.depth_cap = depth_cap;
    *out = new altlink_trace{altlink::reduce_to_torus(d->d, opt)};
  });
}

altlink_status altlink_trace_parse(const char* jsonl, altlink_trace** out) {
  return guarded([&] {
    need(jsonl), need(out);
    *out = new altlink_trace{altlink::trace_from_jsonl(jsonl)};
  });
}

altlink_status altlink_trace_load(const char* path, altlink_trace** out) {
  return guarded([&] {
    need(path), need(out);
    *out = new altlink_trace{altlink::trace_from_jsonl(altlink::read_text_file(path))};
  });
}

altlink_status altlink_trace_jsonl(const altlink_trace* t, char** out) {
  return guarded([&] { need(t), put(out, altlink::trace_to_jsonl(t->t)); });
}

altlink_status altlink_trace_summary(const altlink_trace* t, char** out) {
  return guarded([&] {
    need(t);
    std::ostringstream s;
    int tm = 0, ots = 0;
    for (const auto& m : t->t.moves) (m.op == altlink::Move::Op::T ? tm : ots)++;
    s << "moves " << t->t.moves.size() << " (T " << tm << ", OTS " << ots << ")\n";
    s << "checkpoints";
    for (const auto& c : t->t.checkpoints) s << " " << c.vertices;
    s << "\nfinal " << t->t.final_code << "\n";
    put(out, s.str());
  });
}

void altlink_trace_free(altlink_trace* t) { delete t; }

altlink_status altlink_verify(const altlink_diagram* d, const altlink_trace* t, int* ok, char** report) {
  return guarded([&] {
    need(d), need(t);
    auto r = altlink::verify_trace(d->d, t->t);
    if (ok) *ok = r.ok ? 1 : 0;
    std::string s = r.ok ? "trace verified\n" : "trace rejected\n";
    for (const auto& f : r.failures) s += "  " + f + "\n";
    put(report, s);
  });
}

altlink_status altlink_orbit(int n, int depth_limit, int fold, altlink_catalog** out) {
  return guarded([&] {
    need(out);
    std::optional<int> limit;
    if (depth_limit >= 0) limit = depth_limit;
    *out = new altlink_catalog{altlink::enumerate_orbit(n, limit, fold != 0)};
  });
}

void altlink_catalog_free(altlink_catalog* c) { delete c; }

size_t altlink_catalog_size(const altlink_catalog* c) { return c ? c->c.codes.size() : 0; }

int altlink_catalog_partial(const altlink_catalog* c) { return c && c->c.partial ? 1 : 0; }

altlink_status altlink_catalog_codes(const altlink_catalog* c, char** out) {
  return guarded([&] { need(c), put(out, altlink::catalog_codes_text(c->c)); });
}

altlink_status altlink_catalog_witnesses(const altlink_catalog* c, char** out) {
  return guarded([&] { need(c), put(out, altlink::catalog_witness_jsonl(c->c)); });
}

altlink_status altlink_catalog_check_brute_force(const altlink_catalog* c, int* equal, char** report) {
  return guarded([&] {
    need(c);
    auto ref = altlink::brute_force_shadows(c->c.n, c->c.reflection_folded);
    auto diff = altlink::compare_catalogs(c->c, ref);
    if (equal) *equal = diff.empty() ? 1 : 0;
    std::ostringstream s;
    s << "orbit " << c->c.codes.size() << ", brute force " << ref.size() << "\n";
    if (diff.empty()) s << "orbit == brute force\n";
    for (const auto& code : diff.only_in_orbit) s << "only in orbit: " << altlink::CanonicalCode{code, c->c.reflection_folded}.to_string() << "\n";
    for (const auto& code : diff.only_in_reference) s << "only in brute force: " << altlink::CanonicalCode{code, c->c.reflection_folded}.to_string() << "\n";
    put(report, s.str());
  });
}

}  // extern "C"
