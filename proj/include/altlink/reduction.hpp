#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "altlink/canonical.hpp"
#include "altlink/diagram.hpp"
#include "altlink/orbit.hpp"
#include "altlink/region.hpp"

namespace altlink {

/// A partition of the crossings into chains (each an ordered 2-braid). The
/// quotient by the partition is the condensation-level graph.
using Blocks = std::vector<std::vector<Vertex>>;

Blocks singleton_blocks(int n);

struct MoveRecord {
  int step = 0;
  Move::Op op = Move::Op::T;
  int group = -1;  // T: index into find_groups of the input diagram
  int start = 0;
  int len = 0;
  std::vector<Vertex> crossings;  // T: the chain in group order; OTS: sorted triangle
  int components_before = 0;
  int components_after = 0;
  std::string code_after;  // orientation-preserving canonical code of the output
};

struct Checkpoint {
  enum class Kind { Initial, Round, Ots } kind = Kind::Initial;
  int after_moves = 0;
  int vertices = 0;
  std::string code;  // orientation-preserving code of the quotient
  Blocks blocks;
};

std::string kind_name(Checkpoint::Kind k);

struct ReductionTrace {
  int n = 0;
  std::string initial_code;
  int initial_components = 0;
  std::vector<MoveRecord> moves;
  std::vector<Checkpoint> checkpoints;
  std::string final_code;  // reflection folded
};

struct ReductionOptions {
  int depth_cap = 64;              // graph-level search depth
  size_t mirror_state_cap = 400000;  // diagram-level states per mirrored ots
};

/// Diagram-level result of a mirrored step.
struct MirrorResult {
  Diagram diagram;
  std::vector<Move> moves;
  Blocks blocks;                // full partition after the moves
  bool sizes_as_expected = true;  // new block sizes match expected_ots_sizes
};

/// Brings two blocks that are joined by a bigon in the quotient into one
/// chain, turning either or both first if needed.
MirrorResult merge_adjacent_groups(const Diagram& d, const Blocks& blocks, int first, int second);

/// Graph-level ots on the triangle of blocks (a, b, c), realised on the
/// diagram by T and OTS moves. The loner form sweeps the arc between two
/// loners across the third block; both verify the quotient afterwards.
MirrorResult loner_ots_sequence(const Diagram& d, const Blocks& blocks, int loner, int b, int c);
MirrorResult group_ots_sequence(const Diagram& d, const Blocks& blocks, int a, int b, int c,
                                const ReductionOptions& opt = {});

/// Block sizes after a mirrored ots, sorted descending. Inputs list the three
/// blocks in face order (sizes and block ids); labels are rotated so that B
/// and C are odd when possible, else B is, ties broken by smallest ids.
std::array<int, 3> expected_ots_sizes(std::array<int, 3> sizes, std::array<int, 3> ids);

/// Graph-level ots triangles that turn a minimal 2-region into a graph with a
/// 2-group; greedy boundary-case preference, then breadth-first search.
std::vector<std::array<Vertex, 3>> empty_minimal_region(const Diagram& g, const Region& r, int depth_cap = 64);
/// The deterministic choice among the minimal 2-regions of g.
Region choose_minimal_region(const Diagram& g);

ReductionTrace reduce_to_torus(const Diagram& d, const ReductionOptions& opt = {});

struct VerificationReport {
  bool ok = true;
  int failed_step = -1;  // first failing move index, -1 if none or not move-related
  std::vector<std::string> failures;
};

VerificationReport verify_trace(const Diagram& initial, const ReductionTrace& t);

std::string trace_to_jsonl(const ReductionTrace& t);
ReductionTrace trace_from_jsonl(std::string_view text);

}  // namespace altlink
