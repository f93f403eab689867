#include "altlink/reduction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "altlink/moves.hpp"
#include "altlink/tangle.hpp"
#include "json.hpp"

namespace altlink {

Blocks singleton_blocks(int n) {
  Blocks b;
  for (Vertex v = 0; v < n; ++v) b.push_back({v});
  return b;
}

std::string kind_name(Checkpoint::Kind k) {
  switch (k) {
    case Checkpoint::Kind::Initial: return "initial";
    case Checkpoint::Kind::Round: return "round";
    case Checkpoint::Kind::Ots: return "ots";
  }
  return "?";
}

namespace {

std::vector<Vertex> sorted_copy(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct Located {
  int group = -1, start = 0, len = 0;
  std::vector<Vertex> chain;
};

Located locate_subgroup(const Diagram& d, const std::vector<Vertex>& crossings) {
  const auto want = sorted_copy(crossings);
  const auto groups = find_groups(d);
  const int len = static_cast<int>(crossings.size());
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    if (std::find(g.crossings.begin(), g.crossings.end(), crossings.front()) == g.crossings.end()) continue;
    const int k = g.size();
    for (int s = 0; s < k; ++s) {
      if (!g.cyclic && s + len > k) break;
      if (len > k) break;
      auto sub = subgroup(g, s, len);
      if (sorted_copy(sub.crossings) == want) return {static_cast<int>(gi), s, len, sub.crossings};
    }
  }
  throw Error(ErrorCode::BadIncidence, "crossings are not a (sub)group");
}

std::string code_string(const Diagram& d) { return canonical_code(d, false).to_string(); }

// Bigon-joined pieces of U, each ordered as a chain; nullopt if some piece
// branches.
std::optional<Blocks> chains_within(const Diagram& d, const std::vector<Vertex>& U) {
  const auto n = static_cast<size_t>(d.num_vertices());
  std::vector<bool> in(n, false);
  for (Vertex v : U) in[static_cast<size_t>(v)] = true;
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& f : faces(d)) {
    if (f.size() != 2) continue;
    Vertex a = d.vertex_of(f[0]), b = d.vertex_of(f[1]);
    if (a == b || !in[static_cast<size_t>(a)] || !in[static_cast<size_t>(b)]) continue;
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<bool> seen(n, false);
  Blocks out;
  for (Vertex s : sorted_copy(U)) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<size_t>(s)] = true;
    for (size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : adj[static_cast<size_t>(comp[i])]) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          comp.push_back(w);
        }
      }
    }
    auto chain = order_as_chain(d, comp);
    if (!chain) return std::nullopt;
    out.push_back(*chain);
  }
  return out;
}

// Moves confined to the crossings of U: T on every sub-chain of two or more,
// OTS on every triangle inside U.
std::vector<Move> moves_within(const Diagram& d, const std::vector<Vertex>& U) {
  std::vector<Move> out;
  std::vector<bool> in(static_cast<size_t>(d.num_vertices()), false);
  for (Vertex v : U) in[static_cast<size_t>(v)] = true;
  if (auto chains = chains_within(d, U)) {
    for (const auto& c : *chains) {
      const int k = static_cast<int>(c.size());
      for (int len = 2; len <= k; ++len) {
        if (len == d.num_vertices()) continue;
        for (int s = 0; s + len <= k; ++s) {
          out.push_back({Move::Op::T, std::vector<Vertex>(c.begin() + s, c.begin() + s + len)});
        }
      }
    }
  }
  for (const auto& t : find_ots_triangles(d)) {
    if (in[static_cast<size_t>(t.vertices[0])] && in[static_cast<size_t>(t.vertices[1])] &&
        in[static_cast<size_t>(t.vertices[2])]) {
      out.push_back({Move::Op::OTS, {t.vertices.begin(), t.vertices.end()}});
    }
  }
  return out;
}

// The triangle of blocks being rewritten and what the quotient must become.
struct MirrorFrame {
  std::array<int, 3> slots{};  // block indices of the triangle
  std::vector<Vertex> U;       // their crossings
  Blocks blocks;
  std::vector<int> target;     // code of ots applied in the quotient
  std::array<int, 3> sizes{};  // expected new block sizes, descending
  std::vector<int> color;      // per crossing: its block, or -1 inside U
};

MirrorFrame make_frame(const Diagram& d, const Blocks& blocks, std::array<int, 3> slots) {
  MirrorFrame f;
  f.slots = slots;
  f.blocks = blocks;
  for (int s : slots) {
    if (s < 0 || s >= static_cast<int>(blocks.size())) throw Error(ErrorCode::RangeError, "block index out of range");
    f.U.insert(f.U.end(), blocks[static_cast<size_t>(s)].begin(), blocks[static_cast<size_t>(s)].end());
  }
  std::vector<Vertex> node;
  Diagram g = quotient(d, blocks, &node);
  std::array<Vertex, 3> tri{};
  for (int i = 0; i < 3; ++i) tri[static_cast<size_t>(i)] = node[static_cast<size_t>(blocks[static_cast<size_t>(slots[static_cast<size_t>(i)])].front())];
  auto t = ots_triangle_on(g, tri);
  if (!t) throw Error(ErrorCode::NotOtsTriangle, "blocks do not form an ots-triangle in the quotient");
  f.target = canonical_code(apply_OTS(g, *t).diagram, false).code;
  std::map<Vertex, int> slot_of_node;
  for (int i = 0; i < 3; ++i) slot_of_node[tri[static_cast<size_t>(i)]] = slots[static_cast<size_t>(i)];
  std::array<int, 3> sizes{}, ids{};
  for (int i = 0; i < 3; ++i) {
    const int b = slot_of_node.at(g.vertex_of(t->face_darts[static_cast<size_t>(i)]));
    sizes[static_cast<size_t>(i)] = static_cast<int>(blocks[static_cast<size_t>(b)].size());
    ids[static_cast<size_t>(i)] = b;
  }
  f.sizes = expected_ots_sizes(sizes, ids);
  f.color.assign(static_cast<size_t>(d.num_vertices()), -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (std::find(slots.begin(), slots.end(), static_cast<int>(b)) != slots.end()) continue;
    for (Vertex v : blocks[b]) f.color[static_cast<size_t>(v)] = static_cast<int>(b);
  }
  return f;
}

// Cuts the chains of U into exactly three pieces whose quotient matches the
// target; sized requires the expected block sizes.
std::optional<Blocks> goal_partition(const Diagram& d, const MirrorFrame& f, bool sized) {
  auto chains = chains_within(d, f.U);
  if (!chains || chains->size() > 3) return std::nullopt;
  std::vector<std::pair<size_t, size_t>> cuts;  // (chain, cut after position)
  for (size_t c = 0; c < chains->size(); ++c) {
    for (size_t p = 0; p + 1 < (*chains)[c].size(); ++p) cuts.emplace_back(c, p);
  }
  const size_t need = 3 - chains->size();
  if (cuts.size() < need) return std::nullopt;
  std::vector<size_t> pick(need);
  auto try_pick = [&]() -> std::optional<Blocks> {
    Blocks pieces;
    for (size_t c = 0; c < chains->size(); ++c) {
      const auto& ch = (*chains)[c];
      size_t from = 0;
      for (size_t k : pick) {
        if (cuts[k].first != c) continue;
        pieces.emplace_back(ch.begin() + static_cast<long>(from), ch.begin() + static_cast<long>(cuts[k].second + 1));
        from = cuts[k].second + 1;
      }
      pieces.emplace_back(ch.begin() + static_cast<long>(from), ch.end());
    }
    if (sized) {
      std::array<int, 3> got{};
      for (size_t i = 0; i < 3; ++i) got[i] = static_cast<int>(pieces[i].size());
      std::sort(got.begin(), got.end(), std::greater<>());
      if (got != f.sizes) return std::nullopt;
    }
    Blocks all = f.blocks;
    for (size_t i = 0; i < 3; ++i) all[static_cast<size_t>(f.slots[i])] = pieces[i];
    if (canonical_code(quotient(d, all), false).code != f.target) return std::nullopt;
    return all;
  };
  if (need == 0) return try_pick();
  if (need == 1) {
    for (size_t i = 0; i < cuts.size(); ++i) {
      pick = {i};
      if (auto r = try_pick()) return r;
    }
    return std::nullopt;
  }
  for (size_t i = 0; i < cuts.size(); ++i) {
    for (size_t j = i + 1; j < cuts.size(); ++j) {
      pick = {i, j};
      if (auto r = try_pick()) return r;
    }
  }
  return std::nullopt;
}

// Breadth-first search over diagrams reachable by moves inside U. Prefers a
// partition with the expected sizes; after finding any valid one it keeps
// looking a few levels deeper for a sized one.
MirrorResult search_mirror(const Diagram& d, const MirrorFrame& f, size_t state_cap) {
  struct Node {
    Diagram d;
    int parent;
    Move move;
    int depth;
  };
  constexpr int kExtraDepth = 16;
  std::vector<Node> nodes{{d, -1, {}, 0}};
  std::set<std::vector<int>> seen{colored_code(d, f.color)};
  auto path_to = [&](int i, Blocks blocks, bool sized) {
    MirrorResult r{nodes[static_cast<size_t>(i)].d, {}, std::move(blocks), sized};
    for (int k = i; nodes[static_cast<size_t>(k)].parent >= 0; k = nodes[static_cast<size_t>(k)].parent) {
      r.moves.push_back(nodes[static_cast<size_t>(k)].move);
    }
    std::reverse(r.moves.begin(), r.moves.end());
    return r;
  };
  std::optional<MirrorResult> fallback;
  int fallback_depth = 0;
  auto check = [&](int i) -> std::optional<MirrorResult> {
    const Diagram& cur = nodes[static_cast<size_t>(i)].d;
    if (auto b = goal_partition(cur, f, true)) return path_to(i, *b, true);
    if (!fallback) {
      if (auto b = goal_partition(cur, f, false)) {
        fallback = path_to(i, *b, false);
        fallback_depth = nodes[static_cast<size_t>(i)].depth;
      }
    }
    return std::nullopt;
  };
  if (auto r = check(0)) return *r;
  for (size_t head = 0; head < nodes.size(); ++head) {
    const int depth = nodes[head].depth;
    if (fallback && depth >= fallback_depth + kExtraDepth) break;
    const Diagram cur = nodes[head].d;
    for (const auto& m : moves_within(cur, f.U)) {
      Diagram next = apply_move(cur, m);
      if (!seen.insert(colored_code(next, f.color)).second) continue;
      nodes.push_back({std::move(next), static_cast<int>(head), m, depth + 1});
      if (auto r = check(static_cast<int>(nodes.size() - 1))) return *r;
      if (nodes.size() > state_cap) {
        if (fallback) return *fallback;
        throw Error(ErrorCode::SearchExhausted, "mirror search exceeded " + std::to_string(state_cap) + " states");
      }
    }
  }
  if (fallback) return *fallback;
  throw Error(ErrorCode::MirrorMismatch, "no T/OTS sequence inside the triangle realises the ots");
}

std::optional<std::vector<Move>> merge_turns(const Diagram& d, const std::vector<Vertex>& x, const std::vector<Vertex>& y,
                                             Diagram& out, std::vector<Vertex>& chain) {
  std::vector<Vertex> both = x;
  both.insert(both.end(), y.begin(), y.end());
  const std::vector<std::vector<const std::vector<Vertex>*>> options{{}, {&x}, {&y}, {&x, &y}};
  for (const auto& opt : options) {
    bool pointless = false;
    for (auto* b : opt) pointless |= b->size() < 2;
    if (pointless) continue;
    Diagram cur = d;
    std::vector<Move> moves;
    for (auto* b : opt) {
      cur = apply_T(cur, *b).diagram;
      moves.push_back({Move::Op::T, *b});
    }
    if (auto ch = order_as_chain(cur, both)) {
      out = cur;
      chain = *ch;
      return moves;
    }
  }
  return std::nullopt;
}

}  // namespace

std::array<int, 3> expected_ots_sizes(std::array<int, 3> sizes, std::array<int, 3> ids) {
  int odd = 0;
  for (int s : sizes) odd += s % 2;
  std::optional<std::array<int, 3>> best_ids;
  std::array<int, 3> abc{};
  for (int r = 0; r < 3; ++r) {
    auto at = [&](int k) { return static_cast<size_t>((r + k) % 3); };
    const int a = sizes[at(0)], b = sizes[at(1)], c = sizes[at(2)];
    bool ok = odd >= 2 ? (b % 2 == 1 && c % 2 == 1) : (odd == 1 ? b % 2 == 1 : true);
    if (!ok) continue;
    std::array<int, 3> rid{ids[at(0)], ids[at(1)], ids[at(2)]};
    if (!best_ids || rid < *best_ids) {
      best_ids = rid;
      abc = {a, b, c};
    }
  }
  if (!best_ids) throw Error(ErrorCode::LabelNormalizationImpossible, "no label rotation fits");
  const int a = abc[0], b = abc[1], c = abc[2];
  std::array<int, 3> out;
  if (b % 2 == 1 && c % 2 == 1) out = {a, b, c};
  else if (b % 2 == 1) out = {a + b - 1, c, 1};
  else out = {a + c - 1, b, 1};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MirrorResult merge_adjacent_groups(const Diagram& d, const Blocks& blocks, int first, int second) {
  const int nb = static_cast<int>(blocks.size());
  if (first < 0 || second < 0 || first >= nb || second >= nb || first == second) {
    throw Error(ErrorCode::RangeError, "block index out of range");
  }
  std::vector<Vertex> node;
  Diagram g = quotient(d, blocks, &node);
  const Vertex u = node[static_cast<size_t>(blocks[static_cast<size_t>(first)].front())];
  const Vertex w = node[static_cast<size_t>(blocks[static_cast<size_t>(second)].front())];
  Group pair;
  pair.crossings = {u, w};
  if (!is_chain(g, pair.crossings)) throw Error(ErrorCode::NotAdjacentInCondensation, "blocks are not joined by a bigon");
  Diagram out;
  std::vector<Vertex> chain;
  auto moves = merge_turns(d, blocks[static_cast<size_t>(first)], blocks[static_cast<size_t>(second)], out, chain);
  if (!moves) throw Error(ErrorCode::NotAdjacentInCondensation, "no turn of either block joins them into one chain");
  Blocks nb2;
  for (int i = 0; i < nb; ++i) {
    if (i == std::min(first, second)) nb2.push_back(chain);
    else if (i != std::max(first, second)) nb2.push_back(blocks[static_cast<size_t>(i)]);
  }
  return {out, *moves, nb2, true};
}

MirrorResult loner_ots_sequence(const Diagram& d, const Blocks& blocks, int loner, int b, int c) {
  const MirrorFrame f = make_frame(d, blocks, {loner, b, c});
  if (blocks[static_cast<size_t>(loner)].size() != 1) throw Error(ErrorCode::NotLoner, "first block is not a loner");
  if (blocks[static_cast<size_t>(b)].size() != 1) {
    throw Error(ErrorCode::NotAligned, "sweep form needs the second block to be a loner");
  }
  const auto& cg = blocks[static_cast<size_t>(c)];
  Diagram cur = d;
  std::vector<Move> moves;
  std::set<Vertex> swept;
  // Vertex ids stay put under OTS while their roles rotate, so the arc being
  // swept is followed as whichever two of the last triangle meet the next
  // crossing of C.
  std::vector<Vertex> arc{blocks[static_cast<size_t>(loner)][0], blocks[static_cast<size_t>(b)][0]};
  auto next_triangle = [&]() -> std::optional<std::array<Vertex, 3>> {
    for (Vertex z : cg) {
      if (swept.count(z)) continue;
      for (size_t i = 0; i < arc.size(); ++i) {
        for (size_t j = i + 1; j < arc.size(); ++j) {
          std::array<Vertex, 3> tri{arc[i], arc[j], z};
          if (ots_triangle_on(cur, tri)) return tri;
        }
      }
    }
    return std::nullopt;
  };
  if (!next_triangle() && cg.size() >= 2) {
    cur = apply_T(cur, cg).diagram;
    moves.push_back({Move::Op::T, cg});
  }
  for (size_t k = 0; k < cg.size(); ++k) {
    auto t = next_triangle();
    if (!t) throw Error(ErrorCode::NotAligned, "arc between the loners does not meet the next crossing");
    cur = apply_OTS(cur, *t).diagram;
    moves.push_back({Move::Op::OTS, {(*t)[0], (*t)[1], (*t)[2]}});
    swept.insert((*t)[2]);
    arc.assign(t->begin(), t->end());
  }
  auto parts = goal_partition(cur, f, true);
  if (!parts) throw Error(ErrorCode::MirrorMismatch, "sweep did not realise the ots in the quotient");
  return {cur, moves, *parts, true};
}

MirrorResult group_ots_sequence(const Diagram& d, const Blocks& blocks, int a, int b, int c, const ReductionOptions& opt) {
  const MirrorFrame f = make_frame(d, blocks, {a, b, c});
  return search_mirror(d, f, opt.mirror_state_cap);
}

namespace {

bool face_in_region(const Region& r, const OtsTriangle& t) {
  for (Dart x : t.face_darts) {
    if (!std::binary_search(r.darts.begin(), r.darts.end(), x)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::array<Vertex, 3>> empty_minimal_region(const Diagram& g, const Region& r, int depth_cap) {
  if (r.is_two_group()) return {};
  std::vector<std::pair<int, std::array<Vertex, 3>>> greedy;
  for (const auto& t : find_ots_triangles(g)) {
    if (!face_in_region(r, t)) continue;
    greedy.emplace_back(-region_ots_case(g, r, t.vertices), t.vertices);
  }
  std::sort(greedy.begin(), greedy.end());
  for (const auto& [neg_case, tri] : greedy) {
    if (has_two_group(apply_OTS(g, tri).diagram)) return {tri};
  }
  struct Node {
    Diagram d;
    int parent;
    std::array<Vertex, 3> tri;
    int depth;
  };
  std::vector<Node> nodes{{g, -1, {}, 0}};
  std::set<std::vector<int>> seen{canonical_code(g, true).code};
  for (size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= depth_cap) continue;
    const Diagram cur = nodes[head].d;
    for (const auto& t : find_ots_triangles(cur)) {
      Diagram next = apply_OTS(cur, t).diagram;
      if (!seen.insert(canonical_code(next, true).code).second) continue;
      nodes.push_back({next, static_cast<int>(head), t.vertices, nodes[head].depth + 1});
      if (has_two_group(next)) {
        std::vector<std::array<Vertex, 3>> plan;
        for (int k = static_cast<int>(nodes.size() - 1); nodes[static_cast<size_t>(k)].parent >= 0;
             k = nodes[static_cast<size_t>(k)].parent) {
          plan.push_back(nodes[static_cast<size_t>(k)].tri);
        }
        std::reverse(plan.begin(), plan.end());
        return plan;
      }
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no ots sequence within depth " + std::to_string(depth_cap) + " yields a 2-group");
}

Region choose_minimal_region(const Diagram& g) {
  const auto cands = find_two_regions(g);
  const Region* best = nullptr;
  for (const auto& c : cands) {
    bool minimal = true;
    for (const auto& o : cands) {
      if (o.darts.size() < c.darts.size() && std::includes(c.darts.begin(), c.darts.end(), o.darts.begin(), o.darts.end())) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (!best || c.boundary.size() < best->boundary.size() ||
        (c.boundary.size() == best->boundary.size() && c.darts < best->darts)) {
      best = &c;
    }
  }
  if (!best) throw Error(ErrorCode::SearchExhausted, "no 2-region found");
  return *best;
}

namespace {

class Reducer {
 public:
  Reducer(const Diagram& d, const ReductionOptions& opt) : d_(d), opt_(opt) {}

  ReductionTrace run() {
    auto report = validate(d_);
    if (!report.reduced) throw Error(ErrorCode::NotReduced, "input has a loop");
    if (!report.prime) throw Error(ErrorCode::NotPrime, "input has a 2-edge cut");
    const int n = d_.num_vertices();
    t_.n = n;
    t_.initial_code = code_string(d_);
    t_.initial_components = strand_components(d_).count;
    blocks_ = singleton_blocks(n);
    checkpoint(Checkpoint::Kind::Initial);
    // Each pass either collapses crossings or mirrors one ots that brings the
    // quotient strictly closer to containing a 2-group.
    const int guard = 16 * n * n + 64;
    for (int pass = 0;; ++pass) {
      if (pass > guard) throw Error(ErrorCode::SearchExhausted, "reduction did not terminate");
      while (round()) checkpoint(Checkpoint::Kind::Round);
      if (blocks_.size() == 1) break;
      mirror_step();
      checkpoint(Checkpoint::Kind::Ots);
    }
    t_.final_code = canonical_code(d_, true).to_string();
    return t_;
  }

 private:
  void push(const Move& m) {
    MoveRecord r;
    r.step = static_cast<int>(t_.moves.size());
    r.op = m.op;
    r.components_before = strand_components(d_).count;
    MoveResult res;
    if (m.op == Move::Op::T) {
      auto loc = locate_subgroup(d_, m.crossings);
      r.group = loc.group;
      r.start = loc.start;
      r.len = loc.len;
      r.crossings = loc.chain;
      res = apply_T(d_, loc.chain);
    } else {
      r.crossings = sorted_copy(m.crossings);
      res = apply_OTS(d_, std::array<Vertex, 3>{r.crossings[0], r.crossings[1], r.crossings[2]});
    }
    d_ = res.diagram;
    if (!validate(d_).ok()) throw Error(ErrorCode::BadIncidence, "move produced an invalid diagram");
    r.components_after = res.components_after;
    r.code_after = code_string(d_);
    t_.moves.push_back(std::move(r));
  }

  void checkpoint(Checkpoint::Kind k) {
    Checkpoint c;
    c.kind = k;
    c.after_moves = static_cast<int>(t_.moves.size());
    c.vertices = static_cast<int>(blocks_.size());
    c.code = code_string(quotient(d_, blocks_));
    c.blocks = blocks_;
    t_.checkpoints.push_back(std::move(c));
  }

  bool round() {
    std::vector<Vertex> node;
    Diagram g = quotient(d_, blocks_, &node);
    auto groups = find_groups(g);
    if (groups.size() == static_cast<size_t>(g.num_vertices())) return false;
    std::vector<int> block_of_node(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t b = 0; b < blocks_.size(); ++b) block_of_node[static_cast<size_t>(node[static_cast<size_t>(blocks_[b].front())])] = static_cast<int>(b);
    Blocks next;
    for (const auto& grp : groups) {
      // A closed braid of three or more keeps its last block apart so the
      // final collapse is a separate round.
      const size_t take = grp.cyclic && grp.size() >= 3 ? grp.crossings.size() - 1 : grp.crossings.size();
      std::vector<Vertex> merged = blocks_[static_cast<size_t>(block_of_node[static_cast<size_t>(grp.crossings[0])])];
      for (size_t i = 1; i < take; ++i) {
        const auto& other = blocks_[static_cast<size_t>(block_of_node[static_cast<size_t>(grp.crossings[i])])];
        Diagram out;
        std::vector<Vertex> chain;
        auto moves = merge_turns(d_, merged, other, out, chain);
        if (!moves) throw Error(ErrorCode::NotAdjacentInCondensation, "no turn joins adjacent blocks into one chain");
        for (const auto& m : *moves) push(m);
        merged = chain;
      }
      next.push_back(merged);
      if (take < grp.crossings.size()) {
        next.push_back(blocks_[static_cast<size_t>(block_of_node[static_cast<size_t>(grp.crossings.back())])]);
      }
    }
    blocks_ = next;
    return true;
  }

  void mirror_step() {
    std::vector<Vertex> node;
    Diagram g = quotient(d_, blocks_, &node);
    std::vector<int> block_of_node(static_cast<size_t>(g.num_vertices()), -1);
    for (size_t b = 0; b < blocks_.size(); ++b) block_of_node[static_cast<size_t>(node[static_cast<size_t>(blocks_[b].front())])] = static_cast<int>(b);
    const Region r = choose_minimal_region(g);
    const auto plan = empty_minimal_region(g, r, opt_.depth_cap);
    if (plan.empty()) throw Error(ErrorCode::BadIncidence, "condensation already holds a 2-group");
    std::array<int, 3> slots{};
    for (int i = 0; i < 3; ++i) slots[static_cast<size_t>(i)] = block_of_node[static_cast<size_t>(plan[0][static_cast<size_t>(i)])];
    std::vector<int> loners;
    for (int s : slots) {
      if (blocks_[static_cast<size_t>(s)].size() == 1) loners.push_back(s);
    }
    std::optional<MirrorResult> res;
    if (loners.size() >= 2) {
      int third = slots[0] + slots[1] + slots[2] - loners[0] - loners[1];
      try {
        res = loner_ots_sequence(d_, blocks_, loners[0], loners[1], third);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAligned && e.code() != ErrorCode::MirrorMismatch) throw;
      }
    }
    if (!res) res = group_ots_sequence(d_, blocks_, slots[0], slots[1], slots[2], opt_);
    for (const auto& m : res->moves) push(m);
    if (!(d_ == res->diagram)) throw Error(ErrorCode::MirrorMismatch, "replayed moves diverged from the mirror");
    blocks_ = res->blocks;
  }

  Diagram d_;
  ReductionOptions opt_;
  Blocks blocks_;
  ReductionTrace t_;
};

}  // namespace

ReductionTrace reduce_to_torus(const Diagram& d, const ReductionOptions& opt) { return Reducer(d, opt).run(); }

VerificationReport verify_trace(const Diagram& initial, const ReductionTrace& t) {
  VerificationReport rep;
  auto fail = [&](int step, const std::string& what) {
    rep.ok = false;
    if (step >= 0 && rep.failed_step < 0) rep.failed_step = step;
    rep.failures.push_back((step >= 0 ? "step " + std::to_string(step) + ": " : std::string()) + what);
  };
  const int n = initial.num_vertices();
  if (t.n != n) fail(-1, "header n=" + std::to_string(t.n) + " but diagram has " + std::to_string(n) + " crossings");
  if (t.initial_code != code_string(initial)) fail(-1, "initial code does not match the diagram");
  if (t.initial_components != strand_components(initial).count) fail(-1, "initial component count mismatch");

  std::map<int, std::vector<const Checkpoint*>> at;
  for (const auto& c : t.checkpoints) at[c.after_moves].push_back(&c);
  int last_round = n + 1, last_any = n + 1;
  auto check_checkpoints = [&](const Diagram& d, int after) {
    auto it = at.find(after);
    if (it == at.end()) return;
    for (const Checkpoint* c : it->second) {
      const std::string label = kind_name(c->kind) + " checkpoint after " + std::to_string(after) + " moves";
      std::vector<int> seen(static_cast<size_t>(n), 0);
      bool cover = true;
      for (const auto& b : c->blocks) {
        for (Vertex v : b) {
          if (v < 0 || v >= n || seen[static_cast<size_t>(v)]++) cover = false;
        }
      }
      if (!cover || std::count(seen.begin(), seen.end(), 1) != n) {
        fail(-1, label + ": blocks do not partition the crossings");
        continue;
      }
      try {
        Diagram q = quotient(d, c->blocks);
        if (code_string(q) != c->code) fail(-1, label + ": quotient code mismatch");
        if (q.num_vertices() != c->vertices) fail(-1, label + ": vertex count mismatch");
      } catch (const Error& e) {
        fail(-1, label + ": " + e.what());
      }
      if (c->vertices > last_any) fail(-1, label + ": condensation grew");
      if (c->kind == Checkpoint::Kind::Round && c->vertices >= last_round) fail(-1, label + ": round did not shrink");
      last_any = c->vertices;
      if (c->kind != Checkpoint::Kind::Ots) last_round = c->vertices;
    }
  };

  Diagram d = initial;
  check_checkpoints(d, 0);
  for (size_t i = 0; i < t.moves.size(); ++i) {
    const auto& m = t.moves[i];
    const int step = static_cast<int>(i);
    if (m.step != step) {
      fail(step, "record numbered " + std::to_string(m.step));
      break;
    }
    const int before = strand_components(d).count;
    if (m.components_before != before) {
      fail(step, "components_before " + std::to_string(m.components_before) + " but replay has " + std::to_string(before));
    }
    try {
      MoveResult res;
      if (m.op == Move::Op::T) {
        auto groups = find_groups(d);
        if (m.group < 0 || m.group >= static_cast<int>(groups.size()) ||
            subgroup(groups[static_cast<size_t>(m.group)], m.start, m.len).crossings != m.crossings) {
          fail(step, "T operand does not name a (sub)group");
        }
        res = apply_T(d, m.crossings);
      } else {
        if (m.crossings.size() != 3) throw Error(ErrorCode::NotOtsTriangle, "OTS operand needs three crossings");
        res = apply_OTS(d, std::array<Vertex, 3>{m.crossings[0], m.crossings[1], m.crossings[2]});
      }
      d = res.diagram;
    } catch (const Error& e) {
      fail(step, std::string("replay failed: ") + e.what());
      break;
    }
    if (d.num_vertices() != n) fail(step, "crossing count changed");
    if (!validate(d).ok()) fail(step, "result is not reduced and prime");
    const int after = strand_components(d).count;
    if (m.components_after != after) {
      fail(step, "components_after " + std::to_string(m.components_after) + " but replay has " + std::to_string(after));
    }
    if (m.code_after != code_string(d)) fail(step, "result code mismatch");
    check_checkpoints(d, step + 1);
  }
  // Failures found only after replay point at the first missing record.
  const int end_step = static_cast<int>(t.moves.size());
  for (const auto& [after, cs] : at) {
    if (after > end_step) fail(end_step, "checkpoint refers past the last move");
  }
  if (t.checkpoints.empty() || t.checkpoints.back().vertices != 1) fail(end_step, "last checkpoint is not a single crossing");
  const std::string torus = canonical_code(torus_shadow(std::max(n, 2)), true).to_string();
  if (t.final_code != torus) fail(-1, "final code is not the torus shadow");
  if (canonical_code(d, true).to_string() != torus) fail(end_step, "replayed diagram is not the torus shadow");
  return rep;
}

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key, int line) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::BadTrace, "line " + std::to_string(line) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

}  // namespace

std::string trace_to_jsonl(const ReductionTrace& t) {
  std::string out;
  json header{{"type", "header"}, {"format", "altlink-trace"}, {"version", 1}, {"n", t.n},
              {"initial_code", t.initial_code}, {"initial_components", t.initial_components}};
  out += header.dump() + "\n";
  for (const auto& m : t.moves) {
    json j{{"type", "move"}, {"step", m.step}, {"op", op_name(m.op)}, {"components_before", m.components_before},
           {"components_after", m.components_after}, {"code_after", m.code_after}};
    if (m.op == Move::Op::T) {
      j["crossings"] = m.crossings;
      j["group"] = m.group;
      j["start"] = m.start;
      j["len"] = m.len;
    } else {
      j["triangle"] = m.crossings;
    }
    out += j.dump() + "\n";
  }
  json cps = json::array();
  for (const auto& c : t.checkpoints) {
    cps.push_back({{"kind", kind_name(c.kind)}, {"after_moves", c.after_moves}, {"vertices", c.vertices},
                   {"code", c.code}, {"blocks", c.blocks}});
  }
  json footer{{"type", "footer"}, {"final_code", t.final_code}, {"checkpoints", cps}};
  out += footer.dump() + "\n";
  return out;
}

ReductionTrace trace_from_jsonl(std::string_view text) {
  ReductionTrace t;
  bool header = false, footer = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (footer) throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": content after footer");
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      const std::string type = need(j, "type", line_no).get<std::string>();
      if (type == "header") {
        if (header) throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": second header");
        if (need(j, "format", line_no) != "altlink-trace" || need(j, "version", line_no) != 1) {
          throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": unsupported format");
        }
        header = true;
        t.n = need(j, "n", line_no).get<int>();
        t.initial_code = need(j, "initial_code", line_no).get<std::string>();
        t.initial_components = need(j, "initial_components", line_no).get<int>();
      } else if (type == "move") {
        if (!header) throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": move before header");
        MoveRecord m;
        m.step = need(j, "step", line_no).get<int>();
        const std::string op = need(j, "op", line_no).get<std::string>();
        if (op == "T") {
          m.op = Move::Op::T;
          m.crossings = need(j, "crossings", line_no).get<std::vector<Vertex>>();
          m.group = need(j, "group", line_no).get<int>();
          m.start = need(j, "start", line_no).get<int>();
          m.len = need(j, "len", line_no).get<int>();
        } else if (op == "OTS") {
          m.op = Move::Op::OTS;
          m.crossings = need(j, "triangle", line_no).get<std::vector<Vertex>>();
        } else {
          throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": unknown op " + op);
        }
        m.components_before = need(j, "components_before", line_no).get<int>();
        m.components_after = need(j, "components_after", line_no).get<int>();
        m.code_after = need(j, "code_after", line_no).get<std::string>();
        t.moves.push_back(std::move(m));
      } else if (type == "footer") {
        if (!header) throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": footer before header");
        footer = true;
        t.final_code = need(j, "final_code", line_no).get<std::string>();
        for (const auto& c : need(j, "checkpoints", line_no)) {
          Checkpoint cp;
          const std::string kind = need(c, "kind", line_no).get<std::string>();
          if (kind == "initial") cp.kind = Checkpoint::Kind::Initial;
          else if (kind == "round") cp.kind = Checkpoint::Kind::Round;
          else if (kind == "ots") cp.kind = Checkpoint::Kind::Ots;
          else throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": unknown checkpoint kind");
          cp.after_moves = need(c, "after_moves", line_no).get<int>();
          cp.vertices = need(c, "vertices", line_no).get<int>();
          cp.code = need(c, "code", line_no).get<std::string>();
          cp.blocks = need(c, "blocks", line_no).get<Blocks>();
          t.checkpoints.push_back(std::move(cp));
        }
      } else {
        throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": unknown record type " + type);
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::BadTrace, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header) throw Error(ErrorCode::BadTrace, "missing header");
  if (!footer) throw Error(ErrorCode::BadTrace, "missing footer");
  return t;
}

}  // namespace altlink
