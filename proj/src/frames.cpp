#include "seplab/frames.hpp"

#include <algorithm>

#include "seplab/reconstruct.hpp"
#include "seplab/separators.hpp"

namespace seplab {

void validate_frame(const Graph& g, const Frame& f) {
  for (int v : f.tuple()) {
    if (v < 0 || v >= g.vertex_count()) {
      throw ContractError("frame vertex out of range");
    }
  }
  if (f.c1 == f.c2 || g.adjacent(f.c1, f.c2)) {
    throw ContractError("frame ends must be distinct and non-adjacent");
  }
  auto side = [&](int c1, int c2, int a1, int a1p, int a2, int a2p,
                  const char* name) {
    if (!g.adjacent(c1, a1) || !g.adjacent(c2, a2)) {
      throw ContractError(std::string("frame ") + name +
                          " anchors must neighbor the ends");
    }
    if (a1 == a2) {
      if (a1p != a1 || a2p != a1) {
        throw ContractError(std::string("degenerate ") + name +
                            " side must collapse all four slots");
      }
      return;
    }
    if (a1p == c1 || !g.adjacent(a1, a1p) || a2p == c2 || !g.adjacent(a2, a2p)) {
      throw ContractError(std::string("frame ") + name +
                          " primed slots must neighbor their anchors");
    }
  };
  side(f.c1, f.c2, f.l1, f.l1p, f.l2, f.l2p, "left");
  side(f.c1, f.c2, f.r1, f.r1p, f.r2, f.r2p, "right");
}

std::vector<int> FramedHole::left_interior() const {
  return {left.begin() + 1, left.end() - 1};
}

std::vector<int> FramedHole::right_interior() const {
  return {right.begin() + 1, right.end() - 1};
}

VertexSet FramedHole::vertex_set() const {
  std::vector<int> v = left;
  v.insert(v.end(), right.begin() + 1, right.end() - 1);
  return VertexSet(std::move(v));
}

Hole FramedHole::to_hole(const Graph& g) const {
  std::vector<int> cyc = left;
  for (auto it = right.rbegin() + 1; it + 1 != right.rend(); ++it) {
    cyc.push_back(*it);
  }
  return make_hole(g, std::move(cyc));
}

Frame read_frame(const FramedHole& h) {
  auto li = h.left_interior();
  auto ri = h.right_interior();
  Frame f{};
  f.c1 = h.c1();
  f.c2 = h.c2();
  f.l1 = li.front();
  f.l2 = li.back();
  f.l1p = li.size() == 1 ? li.front() : li[1];
  f.l2p = li.size() == 1 ? li.front() : li[li.size() - 2];
  f.r1 = ri.front();
  f.r2 = ri.back();
  f.r1p = ri.size() == 1 ? ri.front() : ri[1];
  f.r2p = ri.size() == 1 ? ri.front() : ri[ri.size() - 2];
  return f;
}

std::optional<std::vector<int>> complete_frame_arc(const Graph& g, int c1, int c2,
                                                   int a1, int a1p, int a2, int a2p,
                                                   const VertexSet& allowed) {
  std::vector<int> arc{c1};
  if (a1 == a2) {
    arc.push_back(a1);
  } else if (a1p == a2 || a2p == a1) {
    if (a1p != a2 || a2p != a1 || !g.adjacent(a1, a2)) return std::nullopt;
    arc.push_back(a1);
    arc.push_back(a2);
  } else if (a1p == a2p) {
    arc.push_back(a1);
    arc.push_back(a1p);
    arc.push_back(a2);
  } else {
    std::vector<int> mid;
    if (g.adjacent(a1p, a2p)) {
      mid = {a1p, a2p};
    } else {
      auto q = path_through(g, VertexSet{a1p}, VertexSet{a2p}, allowed);
      if (!q) return std::nullopt;
      mid = *q;
      mid.push_back(a2p);
    }
    arc.push_back(a1);
    arc.insert(arc.end(), mid.begin(), mid.end());
    arc.push_back(a2);
  }
  arc.push_back(c2);
  return arc;
}

bool framed_hole_matches(const Graph& g, const FramedHole& fh, const Frame& f) {
  if (fh.left.size() < 3 || fh.right.size() < 3) return false;
  if (fh.left.front() != fh.right.front() || fh.left.back() != fh.right.back()) {
    return false;
  }
  if (!is_induced_path(g, fh.left) || !is_induced_path(g, fh.right)) return false;
  VertexSet li(fh.left_interior()), ri(fh.right_interior());
  if (!set_intersection(li, ri).empty()) return false;
  for (int u : li) {
    for (int v : ri) {
      if (g.adjacent(u, v)) return false;
    }
  }
  return read_frame(fh) == f;
}

std::optional<int> side_distance(const Graph& g, const VertexSet& c,
                                 const VertexSet& side, int c1, int c2) {
  if (!c.contains(c1) || !c.contains(c2) || c1 == c2 || g.adjacent(c1, c2)) {
    throw ContractError("side_distance: ends must be distinct non-adjacent members of C");
  }
  if (components(g, side).size() != 1 || neighborhood(g, side) != c) {
    throw ContractError("side_distance: side is not a full component of C");
  }
  auto p = path_through(g, VertexSet{c1}, VertexSet{c2}, side);
  if (!p) return std::nullopt;
  return static_cast<int>(p->size());
}

Richness classify_richness(const Graph& g, const VertexSet& c) {
  auto rec = classify_separator(g, c);
  if (!rec.is_proper) {
    throw ContractError("classify_richness: separator is not proper");
  }
  const VertexSet& l = rec.full_components[0];
  const VertexSet& r = rec.full_components[1];
  Richness out;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      int a = c[i], b = c[j];
      if (g.adjacent(a, b)) continue;
      auto dl = side_distance(g, c, l, a, b);
      auto dr = side_distance(g, c, r, a, b);
      int dist = std::min(dl.value_or(1 << 30), dr.value_or(1 << 30));
      if (dist >= 4) out.long_pairs.emplace_back(a, b);
      if (dist > out.best_distance) {
        out.best_distance = dist;
        out.best_pair = {a, b};
      }
    }
  }
  out.rich = !out.long_pairs.empty();
  return out;
}

FramedHole canonical_hole(const Graph& g, const VertexSet& c, const VertexSet& l,
                          const VertexSet& r, int c1, int c2) {
  if (!c.contains(c1) || !c.contains(c2) || c1 == c2 || g.adjacent(c1, c2)) {
    throw ContractError("canonical_hole: ends must be distinct non-adjacent members of C");
  }
  auto pl = path_through(g, VertexSet{c1}, VertexSet{c2}, l);
  auto pr = path_through(g, VertexSet{c1}, VertexSet{c2}, r);
  if (!pl || !pr) {
    throw ContractError("canonical_hole: a side admits no connecting path");
  }
  FramedHole fh;
  fh.left = *pl;
  fh.left.push_back(c2);
  fh.right = *pr;
  fh.right.push_back(c2);
  return fh;
}

Frame frame_of(const Graph& g, const Hole& h, int c1, int c2) {
  int p1 = h.position_of(c1);
  int p2 = h.position_of(c2);
  if (p1 < 0 || p2 < 0) throw ContractError("frame_of: ends must lie on the hole");
  if (g.adjacent(c1, c2)) throw ContractError("frame_of: ends must be non-adjacent");
  int k = h.length();
  auto arc = [&](int from, int to) {
    std::vector<int> out;
    for (int p = from;; p = (p + 1) % k) {
      out.push_back(h.cycle[static_cast<std::size_t>(p)]);
      if (p == to) break;
    }
    return out;
  };
  std::vector<int> arc_a = arc(p1, p2);
  std::vector<int> arc_b = arc(p2, p1);
  std::reverse(arc_b.begin(), arc_b.end());  // both now run c1 .. c2
  FramedHole fh;
  int min_a = *std::min_element(arc_a.begin() + 1, arc_a.end() - 1);
  int min_b = *std::min_element(arc_b.begin() + 1, arc_b.end() - 1);
  fh.left = min_a < min_b ? arc_a : arc_b;
  fh.right = min_a < min_b ? arc_b : arc_a;
  return read_frame(fh);
}

bool is_heavy(const Graph& g, const Hole& h, int c1, int c2, int v) {
  if (h.contains(v)) return false;
  if (classify_vertex(g, h, v).kind != RoleKind::Major) return false;
  return are_distant(g, h, v, c1, c2);
}

std::optional<FramedHole> realize_frame_within(const Graph& g, const Frame& f,
                                               const VertexSet& l, const VertexSet& r) {
  validate_frame(g, f);
  auto allowed_in = [&](const VertexSet& side, int a1, int a2) {
    VertexSet blocked = closed_neighborhood(g, VertexSet{f.c1, f.c2, a1, a2});
    return set_difference(side, blocked);
  };
  auto arc_l = complete_frame_arc(g, f.c1, f.c2, f.l1, f.l1p, f.l2, f.l2p,
                                  allowed_in(l, f.l1, f.l2));
  if (!arc_l) return std::nullopt;
  auto arc_r = complete_frame_arc(g, f.c1, f.c2, f.r1, f.r1p, f.r2, f.r2p,
                                  allowed_in(r, f.r1, f.r2));
  if (!arc_r) return std::nullopt;
  FramedHole fh{*arc_l, *arc_r};
  if (!framed_hole_matches(g, fh, f)) return std::nullopt;
  return fh;
}

std::vector<Frame> enumerate_feasible_frames(const Graph& g, const VertexSet& c,
                                             const VertexSet& l, const VertexSet& r,
                                             int c1, int c2) {
  if (!c.contains(c1) || !c.contains(c2) || c1 == c2 || g.adjacent(c1, c2)) {
    throw ContractError(
        "enumerate_feasible_frames: ends must be distinct non-adjacent members of C");
  }
  auto side_candidates = [&](const VertexSet& side)
      -> std::vector<std::array<int, 4>> {  // (a1, a1p, a2, a2p)
    std::vector<std::array<int, 4>> out;
    for (int a1 : g.neighbors(c1)) {
      if (!side.contains(a1)) continue;
      for (int a2 : g.neighbors(c2)) {
        if (!side.contains(a2)) continue;
        if (a1 == a2) {
          out.push_back({a1, a1, a2, a1});
          continue;
        }
        if (g.adjacent(a1, a2)) {
          out.push_back({a1, a2, a2, a1});
          continue;
        }
        for (int a1p : g.neighbors(a1)) {
          if (!side.contains(a1p) || g.adjacent(a1p, c1) || g.adjacent(a1p, c2)) {
            continue;
          }
          for (int a2p : g.neighbors(a2)) {
            if (!side.contains(a2p) || g.adjacent(a2p, c1) || g.adjacent(a2p, c2)) {
              continue;
            }
            if (a1p == a2 || a2p == a1) continue;
            out.push_back({a1, a1p, a2, a2p});
          }
        }
      }
    }
    return out;
  };
  std::vector<Frame> frames;
  for (const auto& ls : side_candidates(l)) {
    for (const auto& rs : side_candidates(r)) {
      Frame f{c1, c2, ls[1], ls[0], rs[0], rs[1], ls[3], ls[2], rs[2], rs[3]};
      if (realize_frame_within(g, f, l, r)) frames.push_back(f);
    }
  }
  std::sort(frames.begin(), frames.end());
  frames.erase(std::unique(frames.begin(), frames.end()), frames.end());
  return frames;
}

int potential_within(const Graph& g, const Frame& f, const VertexSet& l,
                     const VertexSet& r) {
  auto fh = realize_frame_within(g, f, l, r);
  if (!fh) throw ContractError("potential_within: no hole realizes the frame");
  Hole h = fh->to_hole(g);
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (is_heavy(g, h, f.c1, f.c2, v)) ++count;
  }
  return count;
}

int potential(const Graph& g, const Frame& f) {
  VertexSet w = candidate_heavy_W(g, f);
  FramedHole fh;
  try {
    fh = construct_F_hole(g, f, w);
  } catch (const std::runtime_error&) {
    throw ContractError("potential: no F-hole");
  }
  Hole h = fh.to_hole(g);
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (is_heavy(g, h, f.c1, f.c2, v)) ++count;
  }
  return count;
}

Frame optimal_frame(const Graph& g, const VertexSet& c) {
  auto rec = classify_separator(g, c);
  if (!rec.is_proper) throw ContractError("optimal_frame: separator is not proper");
  const VertexSet& l = rec.full_components[0];
  const VertexSet& r = rec.full_components[1];
  Richness rich = classify_richness(g, c);
  if (!rich.rich) {
    auto [a, b] = rich.best_pair;
    return read_frame(canonical_hole(g, c, l, r, a, b));
  }
  std::optional<Frame> best;
  int best_potential = -1;
  for (auto [a, b] : rich.long_pairs) {
    for (auto [c1, c2] : {std::pair{a, b}, std::pair{b, a}}) {
      for (const Frame& f : enumerate_feasible_frames(g, c, l, r, c1, c2)) {
        int p = potential_within(g, f, l, r);
        if (p > best_potential || (p == best_potential && f < *best)) {
          best = f;
          best_potential = p;
        }
      }
    }
  }
  if (!best) throw ContractError("optimal_frame: no feasible long frame");
  return *best;
}

Butterfly build_butterfly(const Graph& g, const VertexSet& c, const VertexSet& l,
                          const VertexSet& r, const FramedHole& h, int c3) {
  if (!c.contains(c3) || c3 == h.c1() || c3 == h.c2()) {
    throw ContractError("build_butterfly: c3 must be a separator vertex besides the ends");
  }
  Hole hole = h.to_hole(g);
  if (is_heavy(g, hole, h.c1(), h.c2(), c3)) {
    throw ContractError("build_butterfly: c3 is heavy for the frame");
  }
  VertexSet li(h.left_interior());
  VertexSet ri(h.right_interior());
  auto wl = path_through(g, VertexSet{c3}, li, l);
  auto wr = path_through(g, VertexSet{c3}, ri, r);
  if (!wl || !wr) throw ContractError("build_butterfly: missing wing");
  Butterfly b;
  b.center = c3;
  b.left_wing = *wl;
  b.right_wing = *wr;
  b.l_end = g.has_neighbor_in(c3, li);
  b.r_end = g.has_neighbor_in(c3, ri);
  if (!b.l_end) {
    for (int x : g.neighbors(c3)) {
      if (l.contains(x) && g.has_neighbor_in(x, li)) b.l_adjacent = true;
    }
  }
  if (!b.r_end) {
    for (int x : g.neighbors(c3)) {
      if (r.contains(x) && g.has_neighbor_in(x, ri)) b.r_adjacent = true;
    }
  }
  b.central = !b.l_end && !b.l_adjacent && !b.r_end && !b.r_adjacent;
  return b;
}

}  // namespace seplab
