#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "seplab/forbidden.hpp"
#include "seplab/generators.hpp"
#include "seplab/reconstruct.hpp"
#include "seplab/separators.hpp"

using namespace seplab;

namespace {

const Frame kC8Frame{0, 4, 2, 1, 7, 6, 2, 3, 5, 6};
const Frame kTcFrame{0, 4, 2, 1, 7, 6, 2, 3, 5, 6};  // same ids by layout
const Frame kHubFrame{0, 5, 2, 1, 9, 8, 3, 4, 6, 7};

Graph star_k13() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  return g;
}

}  // namespace

TEST_CASE("restricted graph") {
  auto c8 = restricted_graph(cycle(8), kC8Frame);
  CHECK(c8.graph == cycle(8));
  CHECK(restricted_universe(cycle(8), kC8Frame) == VertexSet::range(8));

  // The hub survives: it avoids all six anchors.
  CHECK(restricted_universe(g_hub(), kHubFrame) == VertexSet::range(11));

  // The two caps hang off anchors and are removed.
  CHECK(restricted_universe(g_tc(), kTcFrame) ==
        VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 10});

  Frame fake{0, 1, 2, 2, 3, 3, 2, 2, 3, 3};
  CHECK_THROWS_AS(restricted_graph(complete(4), fake), ContractError);
}

TEST_CASE("strong vertices") {
  CHECK_FALSE(is_strong(cycle(8), 2, 0, 4));
  CHECK(is_strong(g_hub(), 10, 0, 5));
  CHECK_FALSE(is_strong(star_k13(), 0, 1, 2));
  // Within a pruned universe connectivity can flip.
  Graph c8 = cycle(8);
  CHECK(is_strong_within(c8, VertexSet{0, 1, 2, 3, 4}, 2, 0, 4));
}

TEST_CASE("candidate heavy set") {
  CHECK(candidate_heavy_W(cycle(8), kC8Frame) == VertexSet{});
  CHECK(candidate_heavy_W(g_hub(), kHubFrame) == VertexSet{10});
  CHECK(candidate_heavy_W(g_tc(), kTcFrame) == VertexSet{});
}

TEST_CASE("hole construction from a frame") {
  FramedHole h8 = construct_F_hole(cycle(8), kC8Frame, {});
  CHECK(h8.left == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(h8.right == std::vector<int>{0, 7, 6, 5, 4});

  FramedHole hh = construct_F_hole(g_hub(), kHubFrame, VertexSet{10});
  CHECK(hh.to_hole(g_hub()).cycle ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

  FramedHole ht = construct_F_hole(g_tc(), kTcFrame, {});
  CHECK(ht.to_hole(g_tc()).cycle == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

  // A frame whose completion path is blocked fails loudly.
  Graph c12 = cycle(12);
  Frame f12{0, 6, 2, 1, 11, 10, 4, 5, 7, 8};
  CHECK(construct_F_hole(c12, f12, {}).left ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK_THROWS_WITH_AS(
      construct_F_hole(c12, f12, VertexSet{3}),
      doctest::Contains("frame not optimal or graph not in class"),
      std::runtime_error);
}

TEST_CASE("M1 hitting sets") {
  Graph tc = g_tc();
  VertexSet c{0, 4, 10};
  VertexSet l{1, 2, 3, 8}, r{5, 6, 7, 9};
  FramedHole h = construct_F_hole(tc, kTcFrame, {});
  M1 m1 = compute_M1(tc, c, l, r, h, kTcFrame);
  CHECK(m1.x == std::vector<int>{8});
  CHECK(m1.y == std::vector<int>{9});

  FramedHole h8 = construct_F_hole(cycle(8), kC8Frame, {});
  M1 empty = compute_M1(cycle(8), VertexSet{0, 4}, VertexSet{1, 2, 3},
                        VertexSet{5, 6, 7}, h8, kC8Frame);
  CHECK(empty.x.empty());
  CHECK(empty.y.empty());

  Graph hub = g_hub();
  FramedHole hhub = construct_F_hole(hub, kHubFrame, VertexSet{10});
  M1 hub_m1 = compute_M1(hub, VertexSet{0, 5, 10}, VertexSet{1, 2, 3, 4},
                         VertexSet{6, 7, 8, 9}, hhub, kHubFrame);
  CHECK(hub_m1.x.empty());
  CHECK(hub_m1.y.empty());
}

TEST_CASE("M1 class-violation error path") {
  // Three light separator vertices, each L-adjacent through its own
  // private attachment: the minimal hitting set needs all three.
  Graph g(14);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  g.add_edge(8, 1);
  g.add_edge(9, 2);
  g.add_edge(10, 3);
  g.add_edge(11, 8);
  g.add_edge(12, 9);
  g.add_edge(13, 10);
  FramedHole h = construct_F_hole(g, kC8Frame, {});
  VertexSet c{0, 4, 11, 12, 13};
  VertexSet l{1, 2, 3, 8, 9, 10}, r{5, 6, 7};
  CHECK_THROWS_AS(compute_M1(g, c, l, r, h, kC8Frame), ClassViolation);
  try {
    compute_M1(g, c, l, r, h, kC8Frame);
  } catch (const ClassViolation& e) {
    CHECK(e.blockers == std::vector<int>{8, 9, 10});
  }
}

TEST_CASE("side sets") {
  FramedHole h8 = construct_F_hole(cycle(8), kC8Frame, {});
  SideSets s8 = side_sets(cycle(8), h8, M1{});
  CHECK(s8.c_l == VertexSet{0, 4});
  CHECK(s8.c_r == VertexSet{0, 4});
  CHECK(s8.c1_set == VertexSet{0, 4});
  CHECK(s8.d == VertexSet{});

  Graph tc = g_tc();
  FramedHole ht = construct_F_hole(tc, kTcFrame, {});
  SideSets st = side_sets(tc, ht, M1{{8}, {9}});
  CHECK(st.c_l == VertexSet{0, 4, 10});
  CHECK(st.c_r == VertexSet{0, 4, 10});
  CHECK(st.c1_set == VertexSet{0, 4, 10});
  CHECK(st.d == VertexSet{8, 9});

  Graph hub = g_hub();
  FramedHole hh = construct_F_hole(hub, kHubFrame, VertexSet{10});
  SideSets sh = side_sets(hub, hh, M1{});
  CHECK(sh.c1_set == VertexSet{0, 5, 10});
  CHECK(sh.d == VertexSet{});
}

TEST_CASE("M2 target sets") {
  Graph tc = g_tc();
  FramedHole ht = construct_F_hole(tc, kTcFrame, {});
  SideSets st = side_sets(tc, ht, M1{{8}, {9}});
  M2 m2 = compute_M2(tc, VertexSet{0, 4, 10}, st.c_l, st.c_r, st.d);
  CHECK(m2.l.empty());
  CHECK(m2.r.empty());
}

TEST_CASE("M2 class-violation error path") {
  // Three one-sided separator vertices, each reaching its own private
  // target through D: the minimal target set needs all three.
  Graph g(9);
  g.add_edge(0, 3);
  g.add_edge(3, 6);
  g.add_edge(1, 4);
  g.add_edge(4, 7);
  g.add_edge(2, 5);
  g.add_edge(5, 8);
  VertexSet c{0, 1, 2};
  VertexSet c_l{0, 1, 2}, c_r{6, 7, 8}, d{3, 4, 5};
  CHECK_THROWS_AS(compute_M2(g, c, c_l, c_r, d), ClassViolation);
}

TEST_CASE("reconstruction recovers the fixtures") {
  CHECK(reconstruct_separator(cycle(8), kC8Frame, M1{}, M2{}) == VertexSet{0, 4});
  CHECK(reconstruct_separator(g_tc(), kTcFrame, M1{{8}, {9}}, M2{}) ==
        VertexSet{0, 4, 10});
  CHECK(reconstruct_separator(g_hub(), kHubFrame, M1{}, M2{}) ==
        VertexSet{0, 5, 10});
}

TEST_CASE("round trips on the named fixtures") {
  auto r8 = verify_roundtrip(cycle(8), VertexSet{0, 4});
  CHECK(r8.equal);
  auto rt = verify_roundtrip(g_tc(), VertexSet{0, 4, 10});
  CHECK(rt.equal);
  auto rh = verify_roundtrip(g_hub(), VertexSet{0, 5, 10});
  CHECK(rh.equal);
  CHECK(rh.trace.w == VertexSet{10});

  CHECK_THROWS_AS(verify_roundtrip(cycle(8), VertexSet{0, 1}), ContractError);
}

TEST_CASE("round trips across a member corpus") {
  std::vector<Graph> members;
  for (int n = 5; n <= 10; ++n) members.push_back(cycle(n));
  members.push_back(g_tc());
  members.push_back(g_hub());
  for (int i = 0; i < 12; ++i) {
    auto g = random_class_member(9, 0.3, 110000 + static_cast<uint64_t>(i), 30);
    if (g) members.push_back(*g);
  }
  int proper_count = 0;
  for (const auto& g : members) {
    for (const auto& c : expand_enumerate(g)) {
      auto rec = classify_separator(g, c);
      if (!rec.is_proper) continue;
      ++proper_count;
      auto report = verify_roundtrip(g, c);
      CHECK(report.equal);
      // Sandwich and soundness of the parts.
      VertexSet c_l = report.trace.sides.c_l;
      VertexSet c_r = report.trace.sides.c_r;
      CHECK(set_difference(set_intersection(c_l, c_r), c).empty());
      CHECK(set_difference(c, set_union(c_l, c_r)).empty());
      CHECK(set_difference(set_union(report.trace.c2_set, report.trace.c3_set), c)
                .empty());
      CHECK(set_difference(report.trace.w, c).empty());
    }
  }
  CHECK(proper_count > 40);
}

TEST_CASE("majors inside the restricted graph are heavy") {
  std::vector<Graph> members{g_tc(), g_hub()};
  for (int i = 0; i < 10; ++i) {
    auto g = random_class_member(10, 0.25, 120000 + static_cast<uint64_t>(i), 30);
    if (g) members.push_back(*g);
  }
  for (const auto& g : members) {
    for (const auto& c : expand_enumerate(g)) {
      auto rec = classify_separator(g, c);
      if (!rec.is_proper) continue;
      Frame f = optimal_frame(g, c);
      VertexSet w = candidate_heavy_W(g, f);
      FramedHole fh = construct_F_hole(g, f, w);
      Hole hole = fh.to_hole(g);
      VertexSet universe = restricted_universe(g, f);
      for (int v : set_intersection(universe, c)) {
        if (hole.contains(v)) continue;
        if (classify_vertex(g, hole, v).kind == RoleKind::Major) {
          CHECK(is_heavy(g, hole, f.c1, f.c2, v));
        }
      }
    }
  }
}

TEST_CASE("full-tuple enumeration equals the oracle on tiny graphs") {
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  EnumOptions full{EnumMode::FullTuples, 5, 0, 0};
  CHECK(enumerate_all(p3, full) == oracle_enumerate(p3));
  CHECK(enumerate_all(p3, full) == std::vector<VertexSet>{VertexSet{1}});

  CHECK(enumerate_all(cycle(5), full) == oracle_enumerate(cycle(5)));
  CHECK(enumerate_all(cycle(4), full) == oracle_enumerate(cycle(4)));
  CHECK(enumerate_all(complete(5), full) == oracle_enumerate(complete(5)));

  CHECK_THROWS_WITH_AS(enumerate_all(cycle(6), full), doctest::Contains("cap"),
                       ContractError);
}

TEST_CASE("verified-roundtrip enumeration") {
  EnumOptions mode{EnumMode::VerifiedRoundtrip, 5, 0, 0};
  CHECK(enumerate_all(g_tc(), mode) == oracle_enumerate(g_tc()));
  CHECK(enumerate_all(g_hub(), mode) == oracle_enumerate(g_hub()));
  CHECK(enumerate_all(cycle(9), mode) == expand_enumerate(cycle(9)));
}

TEST_CASE("exploratory: descending-id minimal slot choices also reconstruct") {
  // The deterministic pipeline removes candidates in ascending id. Minimal
  // hitting and target sets are not unique; this probes whether the
  // opposite greedy order still reconstructs. WARN keeps it exploratory:
  // a counterexample would be reported without failing the suite.
  std::vector<Graph> members{g_tc(), g_hub(), cycle(8), cycle(11)};
  for (int i = 0; i < 8; ++i) {
    auto g = random_class_member(10, 0.28, 140000 + static_cast<uint64_t>(i), 30);
    if (g) members.push_back(*g);
  }
  int tried = 0, agreed = 0;
  for (const auto& g : members) {
    for (const auto& c : expand_enumerate(g)) {
      auto rec = classify_separator(g, c);
      if (!rec.is_proper) continue;
      Frame f = optimal_frame(g, c);
      VertexSet w = candidate_heavy_W(g, f);
      FramedHole h = construct_F_hole(g, f, w);
      const VertexSet* l = nullptr;
      const VertexSet* r = nullptr;
      for (const auto& comp : rec.full_components) {
        if (comp.contains(h.left_interior().front())) l = &comp;
        if (comp.contains(h.right_interior().front())) r = &comp;
      }
      REQUIRE(l);
      REQUIRE(r);
      Hole hole = h.to_hole(g);
      VertexSet li(h.left_interior()), ri(h.right_interior());

      // Position classification as in the pipeline.
      std::vector<int> l_adj, r_adj;
      for (int c3 : c) {
        if (c3 == f.c1 || c3 == f.c2) continue;
        if (is_heavy(g, hole, f.c1, f.c2, c3)) continue;
        if (!g.has_neighbor_in(c3, li)) {
          for (int x : g.neighbors(c3)) {
            if (l->contains(x) && g.has_neighbor_in(x, li)) {
              l_adj.push_back(c3);
              break;
            }
          }
        }
        if (!g.has_neighbor_in(c3, ri)) {
          for (int x : g.neighbors(c3)) {
            if (r->contains(x) && g.has_neighbor_in(x, ri)) {
              r_adj.push_back(c3);
              break;
            }
          }
        }
      }
      auto descending_hitting = [&](const VertexSet& pool,
                                    const std::vector<int>& clients) {
        VertexSet xs = pool;
        auto covers = [&](const VertexSet& s) {
          for (int cl : clients) {
            if (!g.has_neighbor_in(cl, s)) return false;
          }
          return true;
        };
        if (clients.empty()) return std::vector<int>{};
        const auto& ids = pool.ids();
        for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
          VertexSet trimmed = xs;
          trimmed.erase(*it);
          if (covers(trimmed)) xs = trimmed;
        }
        return xs.ids();
      };
      M1 alt;
      alt.x = descending_hitting(set_intersection(neighborhood(g, li), *l), l_adj);
      alt.y = descending_hitting(set_intersection(neighborhood(g, ri), *r), r_adj);
      if (alt.x.size() > 2 || alt.y.size() > 2) continue;
      SideSets sides = side_sets(g, h, alt);
      M2 m2;
      try {
        m2 = compute_M2(g, c, sides.c_l, sides.c_r, sides.d);
      } catch (const ClassViolation&) {
        continue;
      }
      ++tried;
      VertexSet rebuilt = reconstruct_separator(g, f, alt, m2);
      if (rebuilt == c) {
        ++agreed;
      } else {
        WARN_MESSAGE(rebuilt == c, "alternative minimal choice diverged");
      }
    }
  }
  MESSAGE("alternative-choice reconstructions: ", agreed, "/", tried, " agreed");
  CHECK(tried > 20);
}

TEST_CASE("budgeted enumeration is deterministic and sound") {
  EnumOptions mode{EnumMode::Budgeted, 5, 3000, 17};
  Graph g = g_tc();
  auto a = enumerate_all(g, mode);
  auto b = enumerate_all(g, mode);
  CHECK(a == b);
  auto oracle = oracle_enumerate(g);
  CHECK(std::includes(oracle.begin(), oracle.end(), a.begin(), a.end()));
}
