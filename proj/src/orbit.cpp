#include "altlink/orbit.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

#include "altlink/moves.hpp"
#include "altlink/tangle.hpp"

namespace altlink {

std::string op_name(Move::Op op) { return op == Move::Op::T ? "T" : "OTS"; }

Diagram apply_move(const Diagram& d, const Move& m) {
  if (m.op == Move::Op::T) return apply_T(d, m.crossings).diagram;
  if (m.crossings.size() != 3) throw Error(ErrorCode::NotOtsTriangle, "OTS needs three crossings");
  return apply_OTS(d, std::array<Vertex, 3>{m.crossings[0], m.crossings[1], m.crossings[2]}).diagram;
}

std::vector<Move> all_moves(const Diagram& d) {
  std::vector<Move> out;
  for (const auto& g : find_groups(d)) {
    const int k = g.size();
    if (g.cyclic) {
      for (int len = 2; len < k; ++len) {
        for (int s = 0; s < k; ++s) out.push_back({Move::Op::T, subgroup(g, s, len).crossings});
      }
    } else {
      for (int len = 2; len <= k; ++len) {
        for (int s = 0; s + len <= k; ++s) out.push_back({Move::Op::T, subgroup(g, s, len).crossings});
      }
    }
  }
  for (const auto& t : find_ots_triangles(d)) out.push_back({Move::Op::OTS, {t.vertices.begin(), t.vertices.end()}});
  return out;
}

std::vector<CanonicalCode> Catalog::sorted_codes() const {
  std::vector<CanonicalCode> out;
  for (const auto& c : codes) out.push_back({c, reflection_folded});
  return out;
}

Catalog enumerate_orbit(int n, std::optional<int> depth_limit, bool fold_reflection) {
  if (n < 2) throw Error(ErrorCode::BadSize, "orbit needs n >= 2");
  Catalog cat;
  cat.n = n;
  cat.reflection_folded = fold_reflection;
  auto seed = canonical_code(torus_shadow(n), fold_reflection);
  cat.codes.insert(seed.code);
  cat.provenance[seed.to_string()] = Witness{};
  std::deque<std::pair<CanonicalCode, int>> queue{{seed, 0}};
  while (!queue.empty()) {
    auto [code, depth] = queue.front();
    queue.pop_front();
    const Diagram d = decode(code);
    const std::string parent = code.to_string();
    for (const auto& m : all_moves(d)) {
      auto next = canonical_code(apply_move(d, m), fold_reflection);
      if (cat.codes.count(next.code)) continue;
      if (depth_limit && depth >= *depth_limit) {
        cat.partial = true;
        continue;
      }
      cat.codes.insert(next.code);
      cat.provenance[next.to_string()] = Witness{parent, m, depth + 1};
      queue.emplace_back(next, depth + 1);
    }
  }
  return cat;
}

std::vector<std::string> closure_violations(const Catalog& c) {
  std::vector<std::string> bad;
  for (const auto& code : c.sorted_codes()) {
    const Diagram d = decode(code);
    for (const auto& m : all_moves(d)) {
      auto next = canonical_code(apply_move(d, m), c.reflection_folded);
      if (!c.codes.count(next.code)) bad.push_back(code.to_string() + " -> " + next.to_string());
    }
  }
  return bad;
}

namespace {

// Rooted planar maps grown in breadth-first code order. Dart v*4+p sits at
// position p of vertex v; every vertex is entered through position 0.
class MapGrower {
 public:
  MapGrower(int n, bool fold) : n_(n), fold_(fold), mate_(static_cast<size_t>(4 * n), -1) {}

  std::set<std::vector<int>> run() {
    vertices_ = 1;
    grow();
    return std::move(found_);
  }

 private:
  int edges_between(int u, int w) const {
    int k = 0;
    for (int p = 0; p < 4; ++p) {
      int m = mate_[static_cast<size_t>(4 * u + p)];
      k += m >= 0 && m / 4 == w ? 1 : 0;
    }
    return k;
  }

  int face_step(int x) const {
    int m = mate_[static_cast<size_t>(x)];
    int y = m < 0 ? x : m;
    return (y & ~3) | ((y + 1) & 3);
  }

  void pair(int x, int y) {
    mate_[static_cast<size_t>(x)] = y;
    mate_[static_cast<size_t>(y)] = x;
  }
  void unpair(int x, int y) {
    mate_[static_cast<size_t>(x)] = -1;
    mate_[static_cast<size_t>(y)] = -1;
  }

  void grow() {
    int x = -1;
    for (int i = 0; i < 4 * vertices_; ++i) {
      if (mate_[static_cast<size_t>(i)] < 0) {
        x = i;
        break;
      }
    }
    if (x < 0) {
      if (vertices_ == n_) emit();
      return;
    }
    if (vertices_ < n_) {
      const int w = vertices_++;
      pair(x, 4 * w);
      grow();
      unpair(x, 4 * w);
      --vertices_;
    }
    for (int y = face_step(x); y != x; y = face_step(y)) {
      if (mate_[static_cast<size_t>(y)] >= 0 || y / 4 == x / 4) continue;
      if (n_ >= 3 && edges_between(x / 4, y / 4) >= 2) continue;
      pair(x, y);
      grow();
      unpair(x, y);
    }
  }

  void emit() {
    std::vector<Diagram::Rotation> rot(static_cast<size_t>(n_));
    int e = 0;
    for (int x = 0; x < 4 * n_; ++x) {
      const int y = mate_[static_cast<size_t>(x)];
      if (y < x) continue;
      rot[static_cast<size_t>(x / 4)][static_cast<size_t>(x % 4)] = 2 * e;
      rot[static_cast<size_t>(y / 4)][static_cast<size_t>(y % 4)] = 2 * e + 1;
      ++e;
    }
    Diagram d = Diagram::build(rot);
    if (!edge_connectivity_at_least(d, 3)) return;
    found_.insert(canonical_code(d, fold_).code);
  }

  int n_;
  bool fold_;
  int vertices_ = 0;
  std::vector<int> mate_;
  std::set<std::vector<int>> found_;
};

}  // namespace

std::set<std::vector<int>> brute_force_shadows(int n, bool fold_reflection) {
  if (n > kBruteForceLimit) {
    throw Error(ErrorCode::SizeTooLarge, "brute force is limited to n <= " + std::to_string(kBruteForceLimit));
  }
  if (n < 2) throw Error(ErrorCode::BadSize, "need n >= 2");
  return MapGrower(n, fold_reflection).run();
}

CatalogDiff compare_catalogs(const Catalog& a, const std::set<std::vector<int>>& reference) {
  for (const auto& c : reference) {
    if (c.empty() || c.front() != a.n) throw Error(ErrorCode::MismatchedSize, "reference holds a code of another size");
  }
  CatalogDiff diff;
  std::set_difference(a.codes.begin(), a.codes.end(), reference.begin(), reference.end(),
                      std::back_inserter(diff.only_in_orbit));
  std::set_difference(reference.begin(), reference.end(), a.codes.begin(), a.codes.end(),
                      std::back_inserter(diff.only_in_reference));
  return diff;
}

std::string catalog_codes_text(const Catalog& c) {
  std::vector<std::string> lines;
  for (const auto& code : c.sorted_codes()) lines.push_back(code.to_string());
  std::sort(lines.begin(), lines.end());
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

std::string catalog_witness_jsonl(const Catalog& c) {
  std::string s;
  for (const auto& [code, w] : c.provenance) {
    nlohmann::json j;
    j["code"] = code;
    j["depth"] = w.depth;
    if (!w.parent.empty()) {
      j["parent"] = w.parent;
      j["op"] = op_name(w.move.op);
      j["crossings"] = w.move.crossings;
    }
    s += j.dump() + "\n";
  }
  return s;
}

}  // namespace altlink
