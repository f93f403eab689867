#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "altlink/canonical.hpp"
#include "altlink/diagram.hpp"

namespace altlink {

/// One T or OTS application, addressed by crossing ids.
struct Move {
  enum class Op { T, OTS } op = Op::T;
  std::vector<Vertex> crossings;  // the turned chain, or the three triangle vertices
};

std::string op_name(Move::Op op);
Diagram apply_move(const Diagram& d, const Move& m);
/// Every T on a (sub)group of two or more crossings and every OTS.
std::vector<Move> all_moves(const Diagram& d);

struct Witness {
  std::string parent;  // code string; empty for the seed
  Move move;           // applied to decode(parent)
  int depth = 0;
};

struct Catalog {
  int n = 0;
  bool reflection_folded = true;
  bool partial = false;  // depth limit cut the search short
  std::set<std::vector<int>> codes;
  std::map<std::string, Witness> provenance;

  std::vector<CanonicalCode> sorted_codes() const;
};

/// Breadth-first closure of the torus shadow under T and OTS.
Catalog enumerate_orbit(int n, std::optional<int> depth_limit = std::nullopt, bool fold_reflection = true);
/// Recomputes every member's neighbours and reports any that fall outside.
std::vector<std::string> closure_violations(const Catalog& c);

/// All reduced prime shadows on n crossings, generated without T or OTS.
std::set<std::vector<int>> brute_force_shadows(int n, bool fold_reflection = true);
constexpr int kBruteForceLimit = 8;

struct CatalogDiff {
  std::vector<std::vector<int>> only_in_orbit;
  std::vector<std::vector<int>> only_in_reference;
  bool empty() const { return only_in_orbit.empty() && only_in_reference.empty(); }
};

CatalogDiff compare_catalogs(const Catalog& a, const std::set<std::vector<int>>& reference);

std::string catalog_codes_text(const Catalog& c);
std::string catalog_witness_jsonl(const Catalog& c);

}  // namespace altlink
