#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "altlink/diagram.hpp"

namespace altlink {

/// Isomorphism-class identity of a shadow. code[0] is the vertex count; the
/// rest lists, for each vertex in breadth-first label order and each of its
/// darts starting from the entry dart, 4 * neighbour_label + mate_offset.
struct CanonicalCode {
  std::vector<int> code;
  bool reflection_folded = false;

  int vertices() const { return code.empty() ? 0 : code.front(); }
  std::string to_string() const;
  static CanonicalCode parse(std::string_view text, bool folded);

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.reflection_folded == b.reflection_folded && a.code == b.code;
  }
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.code <=> b.code;
  }
};

CanonicalCode canonical_code(const Diagram& d, bool fold_reflection);
/// Orientation-preserving code of a vertex-coloured diagram; isomorphisms
/// must preserve colours.
std::vector<int> colored_code(const Diagram& d, const std::vector<int>& vertex_color);
bool is_isomorphic(const Diagram& a, const Diagram& b, bool fold_reflection);

/// Rebuilds the diagram a code was computed from (its mirror image when the
/// minimum came from the reversed orientation of a folded code).
Diagram decode(const CanonicalCode& c);

}  // namespace altlink
