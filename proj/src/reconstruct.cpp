#include "seplab/reconstruct.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "seplab/separators.hpp"

namespace seplab {

VertexSet restricted_universe(const Graph& g, const Frame& f) {
  validate_frame(g, f);
  VertexSet anchors{f.c1, f.c2, f.l1, f.r1, f.l2, f.r2};
  VertexSet primes{f.l1p, f.l2p, f.r1p, f.r2p};
  VertexSet removed = set_difference(neighborhood(g, anchors), primes);
  return set_difference(VertexSet::range(g.vertex_count()), removed);
}

InducedSubgraph restricted_graph(const Graph& g, const Frame& f) {
  return induced_subgraph(g, restricted_universe(g, f));
}

bool is_strong_within(const Graph& g, const VertexSet& universe, int v, int c1,
                      int c2) {
  if (v == c1 || v == c2) return false;
  VertexSet closed;
  closed.insert(v);
  for (int w : g.neighbors(v)) {
    if (universe.contains(w)) closed.insert(w);
  }
  if (closed.contains(c1) || closed.contains(c2)) return false;
  int comp_c1 = -1, comp_c2 = -1, idx = 0;
  for (const auto& comp : components(g, set_difference(universe, closed))) {
    if (comp.contains(c1)) comp_c1 = idx;
    if (comp.contains(c2)) comp_c2 = idx;
    ++idx;
  }
  return comp_c1 >= 0 && comp_c2 >= 0 && comp_c1 != comp_c2;
}

bool is_strong(const Graph& g, int v, int c1, int c2) {
  return is_strong_within(g, VertexSet::range(g.vertex_count()), v, c1, c2);
}

namespace {

// Shortest possible arc length pinned by the slot pattern (2, 3, 4, or an
// open-ended 5).
int min_arc_length(int a1, int a1p, int a2, int a2p) {
  if (a1 == a2) return 2;
  if (a1p == a2) return 3;
  if (a1p == a2p) return 4;
  return 5;
}

}  // namespace

VertexSet candidate_heavy_W(const Graph& g, const Frame& f) {
  validate_frame(g, f);
  if (min_arc_length(f.l1, f.l1p, f.l2, f.l2p) +
          min_arc_length(f.r1, f.r1p, f.r2, f.r2p) <=
      6) {
    return {};
  }
  VertexSet universe = restricted_universe(g, f);
  VertexSet x1;
  for (int v : universe) {
    if (is_strong_within(g, universe, v, f.c1, f.c2)) x1.insert(v);
  }
  VertexSet rest = set_difference(universe, x1);
  VertexSet x2;
  for (int v : rest) {
    if (is_strong_within(g, rest, v, f.c1, f.c2)) x2.insert(v);
  }
  return set_union(x1, x2);
}

FramedHole construct_F_hole(const Graph& g, const Frame& f, const VertexSet& w) {
  validate_frame(g, f);
  VertexSet universe = restricted_universe(g, f);
  auto slots = f.tuple();
  VertexSet frame_verts(std::vector<int>(slots.begin(), slots.end()));
  VertexSet allowed = set_difference(set_difference(universe, w), frame_verts);
  auto arc_l =
      complete_frame_arc(g, f.c1, f.c2, f.l1, f.l1p, f.l2, f.l2p, allowed);
  auto arc_r =
      complete_frame_arc(g, f.c1, f.c2, f.r1, f.r1p, f.r2, f.r2p, allowed);
  if (!arc_l || !arc_r) {
    throw std::runtime_error(
        "construct_F_hole: no completion path; frame not optimal or graph not in class");
  }
  FramedHole fh{*arc_l, *arc_r};
  if (!framed_hole_matches(g, fh, f)) {
    throw std::runtime_error(
        "construct_F_hole: completion is not a hole with this frame; "
        "frame not optimal or graph not in class");
  }
  return fh;
}

namespace {

struct LightPositions {
  std::vector<int> l_adjacent;
  std::vector<int> r_adjacent;
};

LightPositions classify_light_vertices(const Graph& g, const VertexSet& c,
                                       const VertexSet& l, const VertexSet& r,
                                       const FramedHole& h, const Frame& f) {
  Hole hole = h.to_hole(g);
  VertexSet li(h.left_interior()), ri(h.right_interior());
  LightPositions out;
  for (int c3 : c) {
    if (c3 == f.c1 || c3 == f.c2) continue;
    if (is_heavy(g, hole, f.c1, f.c2, c3)) continue;
    bool l_end = g.has_neighbor_in(c3, li);
    bool r_end = g.has_neighbor_in(c3, ri);
    if (!l_end) {
      for (int x : g.neighbors(c3)) {
        if (l.contains(x) && g.has_neighbor_in(x, li)) {
          out.l_adjacent.push_back(c3);
          break;
        }
      }
    }
    if (!r_end) {
      for (int x : g.neighbors(c3)) {
        if (r.contains(x) && g.has_neighbor_in(x, ri)) {
          out.r_adjacent.push_back(c3);
          break;
        }
      }
    }
  }
  return out;
}

// Greedy ascending-id removal to an inclusion-minimal subset of pool such
// that every client keeps a neighbor in it.
std::vector<int> minimal_hitting(const Graph& g, const VertexSet& pool,
                                 const std::vector<int>& clients,
                                 const char* what) {
  auto covers = [&](const VertexSet& xs) {
    for (int cl : clients) {
      if (!g.has_neighbor_in(cl, xs)) return false;
    }
    return true;
  };
  VertexSet xs = pool;
  if (!covers(xs)) {
    throw ClassViolation(std::string("class violation evidence: uncoverable ") + what,
                         clients);
  }
  for (int v : pool) {
    VertexSet trimmed = xs;
    trimmed.erase(v);
    if (covers(trimmed)) xs = trimmed;
  }
  if (xs.size() > 2) {
    throw ClassViolation(std::string("class violation evidence: ") + what +
                             " needs more than two vertices",
                         xs.ids());
  }
  return xs.ids();
}

bool reaches_through(const Graph& g, int v, const VertexSet& targets,
                     const VertexSet& d) {
  if (targets.empty() || targets.contains(v)) return false;
  return path_through(g, VertexSet{v}, targets, d).has_value();
}

// Greedy ascending-id removal to an inclusion-minimal target set keeping
// every client connected to it through d.
std::vector<int> minimal_targets(const Graph& g, const VertexSet& pool,
                                 const std::vector<int>& clients, const VertexSet& d,
                                 const char* what) {
  auto covers = [&](const VertexSet& ts) {
    for (int cl : clients) {
      if (!reaches_through(g, cl, ts, d)) return false;
    }
    return true;
  };
  if (clients.empty()) return {};
  VertexSet ts = pool;
  if (!covers(ts)) {
    throw ClassViolation(std::string("class violation evidence: unreachable ") + what,
                         clients);
  }
  for (int v : pool) {
    VertexSet trimmed = ts;
    trimmed.erase(v);
    if (covers(trimmed)) ts = trimmed;
  }
  if (ts.size() > 2) {
    throw ClassViolation(std::string("class violation evidence: ") + what +
                             " needs more than two targets",
                         ts.ids());
  }
  return ts.ids();
}

}  // namespace

M1 compute_M1(const Graph& g, const VertexSet& c, const VertexSet& l,
              const VertexSet& r, const FramedHole& h, const Frame& f) {
  LightPositions lights = classify_light_vertices(g, c, l, r, h, f);
  VertexSet li(h.left_interior()), ri(h.right_interior());
  VertexSet pool_x = set_intersection(neighborhood(g, li), l);
  VertexSet pool_y = set_intersection(neighborhood(g, ri), r);
  M1 m1;
  m1.x = lights.l_adjacent.empty()
             ? std::vector<int>{}
             : minimal_hitting(g, pool_x, lights.l_adjacent, "left hitting set");
  m1.y = lights.r_adjacent.empty()
             ? std::vector<int>{}
             : minimal_hitting(g, pool_y, lights.r_adjacent, "right hitting set");
  return m1;
}

SideSets side_sets(const Graph& g, const FramedHole& h, const M1& m1) {
  SideSets s;
  VertexSet left_src(h.left_interior());
  for (int x : m1.x) left_src.insert(x);
  VertexSet right_src(h.right_interior());
  for (int y : m1.y) right_src.insert(y);
  s.c_l = neighborhood(g, left_src);
  s.c_r = neighborhood(g, right_src);
  s.c1_set = set_intersection(s.c_l, s.c_r);
  s.d = set_difference(
      VertexSet::range(g.vertex_count()),
      set_union(h.vertex_set(), set_union(s.c_l, s.c_r)));
  return s;
}

M2 compute_M2(const Graph& g, const VertexSet& c, const VertexSet& c_l,
              const VertexSet& c_r, const VertexSet& d) {
  M2 m2;
  std::vector<int> z_l = set_intersection(set_difference(c_l, c_r), c).ids();
  std::vector<int> z_r = set_intersection(set_difference(c_r, c_l), c).ids();
  VertexSet pool_r = set_difference(c_r, c);  // C_R n R on valid inputs
  VertexSet pool_l = set_difference(c_l, c);
  m2.r = minimal_targets(g, pool_r, z_l, d, "right target set");
  m2.l = minimal_targets(g, pool_l, z_r, d, "left target set");
  return m2;
}

ReconstructionTrace reconstruct_with_trace(const Graph& g, const Frame& f,
                                           const M1& m1, const M2& m2) {
  ReconstructionTrace t;
  t.frame = f;
  t.m1 = m1;
  t.m2 = m2;
  t.w = candidate_heavy_W(g, f);
  t.hole = construct_F_hole(g, f, t.w);
  t.sides = side_sets(g, t.hole, m1);
  VertexSet targets_r(m2.r), targets_l(m2.l);
  for (int v : t.sides.c_l) {
    if (reaches_through(g, v, targets_r, t.sides.d)) t.c2_set.insert(v);
  }
  for (int v : t.sides.c_r) {
    if (reaches_through(g, v, targets_l, t.sides.d)) t.c3_set.insert(v);
  }
  t.result = set_union(t.sides.c1_set, set_union(t.c2_set, t.c3_set));
  return t;
}

VertexSet reconstruct_separator(const Graph& g, const Frame& f, const M1& m1,
                                const M2& m2) {
  return reconstruct_with_trace(g, f, m1, m2).result;
}

RoundtripReport verify_roundtrip(const Graph& g, const VertexSet& c) {
  auto rec = classify_separator(g, c);
  if (!rec.is_proper) {
    throw ContractError("verify_roundtrip: separator is not proper");
  }
  Frame f = optimal_frame(g, c);
  VertexSet w = candidate_heavy_W(g, f);
  FramedHole h = construct_F_hole(g, f, w);
  const VertexSet* l = nullptr;
  const VertexSet* r = nullptr;
  for (const auto& comp : rec.full_components) {
    if (comp.contains(h.left_interior().front())) l = &comp;
    if (comp.contains(h.right_interior().front())) r = &comp;
  }
  if (l == nullptr || r == nullptr || l == r) {
    throw std::runtime_error(
        "verify_roundtrip: constructed hole escapes the separator sides");
  }
  M1 m1 = compute_M1(g, c, *l, *r, h, f);
  SideSets sides = side_sets(g, h, m1);
  M2 m2 = compute_M2(g, c, sides.c_l, sides.c_r, sides.d);
  RoundtripReport report;
  report.expected = c;
  report.trace = reconstruct_with_trace(g, f, m1, m2);
  report.equal = report.trace.result == c;
  return report;
}

namespace {

uint32_t set_to_mask(const VertexSet& s) {
  uint32_t m = 0;
  for (int v : s) m |= uint32_t{1} << v;
  return m;
}

VertexSet mask_to_vset(uint32_t mask) {
  std::vector<int> ids;
  for (int v = 0; v < 32; ++v) {
    if ((mask >> v) & 1) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

// All frame tuples over the whole vertex set that pass the slot rules,
// pruned to patterns a hole could realize.
std::vector<Frame> all_candidate_frames(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Frame> out;
  auto side_options = [&](int c1, int c2) {
    std::vector<std::array<int, 4>> opts;  // a1, a1p, a2, a2p
    for (int a1 : g.neighbors(c1)) {
      if (a1 == c2) continue;
      for (int a2 : g.neighbors(c2)) {
        if (a2 == c1) continue;
        if (a1 == a2) {
          opts.push_back({a1, a1, a2, a1});
        } else if (g.adjacent(a1, a2)) {
          opts.push_back({a1, a2, a2, a1});
        } else {
          for (int a1p : g.neighbors(a1)) {
            if (a1p == c1 || a1p == a2) continue;
            for (int a2p : g.neighbors(a2)) {
              if (a2p == c2 || a2p == a1) continue;
              opts.push_back({a1, a1p, a2, a2p});
            }
          }
        }
      }
    }
    return opts;
  };
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = 0; c2 < n; ++c2) {
      if (c1 == c2 || g.adjacent(c1, c2)) continue;
      auto opts = side_options(c1, c2);
      for (const auto& ls : opts) {
        for (const auto& rs : opts) {
          out.push_back(
              Frame{c1, c2, ls[1], ls[0], rs[0], rs[1], ls[3], ls[2], rs[2], rs[3]});
        }
      }
    }
  }
  return out;
}

void full_tuple_candidates(const Graph& g, std::set<VertexSet>* candidates) {
  int n = g.vertex_count();
  // Slot pair options for M1/M2: empty, singleton, or unordered pair.
  std::vector<std::vector<int>> slot_pairs{{}};
  for (int a = 0; a < n; ++a) {
    slot_pairs.push_back({a});
    for (int b = a + 1; b < n; ++b) slot_pairs.push_back({a, b});
  }
  for (const Frame& f : all_candidate_frames(g)) {
    VertexSet w;
    FramedHole hole;
    try {
      w = candidate_heavy_W(g, f);
      hole = construct_F_hole(g, f, w);
    } catch (const std::exception&) {
      continue;
    }
    for (const auto& xs : slot_pairs) {
      for (const auto& ys : slot_pairs) {
        M1 m1{xs, ys};
        SideSets sides = side_sets(g, hole, m1);
        uint32_t c1_mask = set_to_mask(sides.c1_set);
        auto comps_d = components(g, sides.d);
        // reach_from[t]: the C_L (resp. C_R) vertices with a path to t
        // through D.
        auto reach_masks = [&](const VertexSet& side_set) {
          std::vector<uint32_t> reach(static_cast<std::size_t>(n), 0);
          for (int t = 0; t < n; ++t) {
            uint32_t m = 0;
            for (int v : side_set) {
              if (v == t) continue;
              bool ok = g.adjacent(v, t);
              if (!ok) {
                for (const auto& comp : comps_d) {
                  bool v_touch = g.has_neighbor_in(v, comp);
                  bool t_touch = comp.contains(t) || g.has_neighbor_in(t, comp);
                  if (v_touch && t_touch) {
                    ok = true;
                    break;
                  }
                }
              }
              if (ok) m |= uint32_t{1} << v;
            }
            reach[static_cast<std::size_t>(t)] = m;
          }
          return reach;
        };
        auto reach_l = reach_masks(sides.c_l);
        auto reach_r = reach_masks(sides.c_r);
        std::set<uint32_t> c2_values{0}, c3_values{0};
        for (const auto& ts : slot_pairs) {
          uint32_t m2v = 0, m3v = 0;
          for (int t : ts) {
            m2v |= reach_l[static_cast<std::size_t>(t)];
            m3v |= reach_r[static_cast<std::size_t>(t)];
          }
          c2_values.insert(m2v);
          c3_values.insert(m3v);
        }
        for (uint32_t c2v : c2_values) {
          for (uint32_t c3v : c3_values) {
            candidates->insert(mask_to_vset(c1_mask | c2v | c3v));
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<VertexSet> enumerate_all(const Graph& g, const EnumOptions& options) {
  std::set<VertexSet> out;
  for (const auto& c : clique_minimal_separators(g)) out.insert(c);
  int n = g.vertex_count();
  switch (options.mode) {
    case EnumMode::FullTuples: {
      if (n > options.n_cap) {
        throw ContractError("enumerate_all: full-tuple mode capped at n=" +
                            std::to_string(options.n_cap));
      }
      std::set<VertexSet> candidates;
      full_tuple_candidates(g, &candidates);
      for (const auto& cand : candidates) {
        if (is_minimal_separator(g, cand)) out.insert(cand);
      }
      break;
    }
    case EnumMode::VerifiedRoundtrip: {
      for (const auto& c : expand_enumerate(g)) {
        if (!is_clique(g, c)) {
          auto report = verify_roundtrip(g, c);
          if (!report.equal) {
            throw std::runtime_error(
                "enumerate_all: round-trip failed for a proper separator");
          }
        }
        out.insert(c);
      }
      break;
    }
    case EnumMode::Budgeted: {
      std::mt19937 gen(static_cast<uint32_t>(options.seed));
      if (n == 0) break;
      auto draw = [&](int lo) {
        return lo + static_cast<int>(gen() % static_cast<uint32_t>(n - lo + 1));
      };
      for (long i = 0; i < options.sample_count; ++i) {
        Frame f{draw(0), draw(0), draw(0), draw(0), draw(0),
                draw(0), draw(0), draw(0), draw(0), draw(0)};
        std::vector<int> xs, ys, ls, rs;
        for (auto* slot : {&xs, &xs, &ys, &ys, &ls, &ls, &rs, &rs}) {
          int v = draw(-1);
          if (v >= 0) slot->push_back(v);
        }
        auto dedup = [](std::vector<int>* v) {
          std::sort(v->begin(), v->end());
          v->erase(std::unique(v->begin(), v->end()), v->end());
        };
        dedup(&xs);
        dedup(&ys);
        dedup(&ls);
        dedup(&rs);
        try {
          VertexSet cand = reconstruct_separator(g, f, M1{xs, ys}, M2{ls, rs});
          if (is_minimal_separator(g, cand)) out.insert(cand);
        } catch (const std::exception&) {
          continue;
        }
      }
      break;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace seplab
