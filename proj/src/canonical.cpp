#include "altlink/canonical.hpp"

#include <charconv>

namespace altlink {

namespace {

// Writes the code rooted at `start`, walking rotations in direction `dir`
// (+1 counterclockwise, -1 clockwise). Stops early and returns false as soon
// as the partial code exceeds `best`.
bool rooted_code(const Diagram& d, Dart start, int dir, const std::vector<int>& best,
                 std::vector<int>& out, std::vector<int>& label, std::vector<Dart>& entry,
                 std::vector<Vertex>& order, const std::vector<int>* color) {
  const int n = d.num_vertices();
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  out.clear();
  out.push_back(n);
  bool tie = !best.empty();
  auto emit = [&](int value) {
    if (tie) {
      int b = best[out.size()];
      if (value > b) return false;
      if (value < b) tie = false;
    }
    out.push_back(value);
    return true;
  };
  Vertex root = d.vertex_of(start);
  label[static_cast<size_t>(root)] = 0;
  entry[static_cast<size_t>(root)] = start;
  order.push_back(root);
  for (size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (color && !emit((*color)[static_cast<size_t>(v)])) return false;
    const int base = d.position_of(entry[static_cast<size_t>(v)]);
    for (int k = 0; k < 4; ++k) {
      Dart x = d.dart_at(v, base + dir * k + 4);
      Dart y = mate(x);
      Vertex w = d.vertex_of(y);
      if (label[static_cast<size_t>(w)] < 0) {
        label[static_cast<size_t>(w)] = static_cast<int>(order.size());
        entry[static_cast<size_t>(w)] = y;
        order.push_back(w);
      }
      int off = ((d.position_of(y) - d.position_of(entry[static_cast<size_t>(w)])) * dir + 8) & 3;
      if (!emit(4 * label[static_cast<size_t>(w)] + off)) return false;
    }
  }
  return true;
}

}  // namespace

CanonicalCode canonical_code(const Diagram& d, bool fold_reflection) {
  const auto n = static_cast<size_t>(d.num_vertices());
  std::vector<int> best, cur;
  std::vector<int> label(n);
  std::vector<Dart> entry(n);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int dir : {1, -1}) {
    if (dir == -1 && !fold_reflection) break;
    for (Dart s = 0; s < d.num_darts(); ++s) {
      if (rooted_code(d, s, dir, best, cur, label, entry, order, nullptr)) {
        if (best.empty() || cur < best) best.swap(cur);
      }
    }
  }
  return CanonicalCode{std::move(best), fold_reflection};
}

std::vector<int> colored_code(const Diagram& d, const std::vector<int>& vertex_color) {
  const auto n = static_cast<size_t>(d.num_vertices());
  std::vector<int> best, cur;
  std::vector<int> label(n);
  std::vector<Dart> entry(n);
  std::vector<Vertex> order;
  for (Dart s = 0; s < d.num_darts(); ++s) {
    if (rooted_code(d, s, 1, best, cur, label, entry, order, &vertex_color)) {
      if (best.empty() || cur < best) best.swap(cur);
    }
  }
  return best;
}

bool is_isomorphic(const Diagram& a, const Diagram& b, bool fold_reflection) {
  if (a.num_vertices() != b.num_vertices()) return false;
  return canonical_code(a, fold_reflection) == canonical_code(b, fold_reflection);
}

std::string CanonicalCode::to_string() const {
  std::string s;
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) s.push_back('.');
    s += std::to_string(code[i]);
  }
  return s;
}

CanonicalCode CanonicalCode::parse(std::string_view text, bool folded) {
  CanonicalCode c;
  c.reflection_folded = folded;
  size_t i = 0;
  while (i < text.size()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) throw Error(ErrorCode::SyntaxError, "bad canonical code '" + std::string(text) + "'");
    c.code.push_back(value);
    i = static_cast<size_t>(ptr - text.data());
    if (i < text.size()) {
      if (text[i] != '.') throw Error(ErrorCode::SyntaxError, "bad canonical code '" + std::string(text) + "'");
      ++i;
    }
  }
  if (c.code.empty() || c.code.size() != static_cast<size_t>(4 * c.code[0] + 1)) {
    throw Error(ErrorCode::SyntaxError, "canonical code has wrong length");
  }
  return c;
}

Diagram decode(const CanonicalCode& c) {
  if (c.code.empty()) throw Error(ErrorCode::SyntaxError, "empty canonical code");
  const int n = c.code[0];
  if (n < 1 || c.code.size() != static_cast<size_t>(4 * n + 1)) {
    throw Error(ErrorCode::SyntaxError, "canonical code has wrong length");
  }
  std::vector<Diagram::Rotation> rot(static_cast<size_t>(n), Diagram::Rotation{-1, -1, -1, -1});
  int next_edge = 0;
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < 4; ++k) {
      if (rot[static_cast<size_t>(v)][static_cast<size_t>(k)] >= 0) continue;
      int value = c.code[static_cast<size_t>(1 + 4 * v + k)];
      int w = value >> 2, off = value & 3;
      if (w >= n || rot[static_cast<size_t>(w)][static_cast<size_t>(off)] >= 0 || (w == v && off == k)) {
        throw Error(ErrorCode::SyntaxError, "inconsistent canonical code");
      }
      rot[static_cast<size_t>(v)][static_cast<size_t>(k)] = 2 * next_edge;
      rot[static_cast<size_t>(w)][static_cast<size_t>(off)] = 2 * next_edge + 1;
      ++next_edge;
    }
  }
  return Diagram::build(rot);
}

}  // namespace altlink
