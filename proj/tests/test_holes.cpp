#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "seplab/forbidden.hpp"
#include "seplab/generators.hpp"
#include "seplab/holes.hpp"

using namespace seplab;

namespace {

Graph cycle_plus(int n, const std::vector<std::vector<int>>& attachments) {
  Graph g(n + static_cast<int>(attachments.size()));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    for (int h : attachments[i]) g.add_edge(n + static_cast<int>(i), h);
  }
  return g;
}

Hole base_hole(const Graph& g, int n) {
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i;
  return make_hole(g, cyc);
}

// Independent oracle: a hole is a vertex subset inducing a connected
// 2-regular subgraph.
std::set<std::vector<int>> hole_oracle(const Graph& g) {
  int n = g.vertex_count();
  std::set<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) s.insert(v);
    }
    if (s.size() < 4) continue;
    bool two_regular = true;
    for (int v : s) {
      int d = 0;
      for (int w : g.neighbors(v)) {
        if (s.contains(w)) ++d;
      }
      if (d != 2) {
        two_regular = false;
        break;
      }
    }
    if (!two_regular || components(g, s).size() != 1) continue;
    // Walk the cycle into canonical form via make_hole.
    std::vector<int> cyc{s[0]};
    int prev = -1, cur = s[0];
    while (static_cast<int>(cyc.size()) < s.size()) {
      for (int w : g.neighbors(cur)) {
        if (w != prev && s.contains(w)) {
          cyc.push_back(w);
          prev = cur;
          cur = w;
          break;
        }
      }
    }
    out.insert(make_hole(g, cyc).cycle);
  }
  return out;
}

}  // namespace

TEST_CASE("hole enumeration examples") {
  auto c8 = enumerate_holes(cycle(8));
  REQUIRE(c8.holes.size() == 1);
  CHECK(c8.holes[0].length() == 8);
  CHECK_FALSE(c8.truncated);

  CHECK(enumerate_holes(complete(4)).holes.empty());

  auto q = enumerate_holes(cube());
  std::set<int> lengths;
  for (const auto& h : q.holes) lengths.insert(h.length());
  CHECK(lengths == std::set<int>{4, 6});

  auto limited = enumerate_holes(cube(), 4, 1 << 30, 3);
  CHECK(limited.holes.size() == 3);
  CHECK(limited.truncated);
}

TEST_CASE("hole enumeration matches the subset oracle") {
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(8, 0.35, 90000 + static_cast<uint64_t>(i));
    auto oracle = hole_oracle(g);
    std::set<std::vector<int>> got;
    for (const auto& h : enumerate_holes(g).holes) got.insert(h.cycle);
    CAPTURE(i);
    CHECK(got == oracle);
  }
}

TEST_CASE("make_hole canonicalizes and validates") {
  Graph c5 = cycle(5);
  Hole h = make_hole(c5, {3, 2, 1, 0, 4});
  CHECK(h.cycle == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(make_hole(c5, {0, 1, 2, 3}), ContractError);
  CHECK_THROWS_AS(make_hole(complete(4), {0, 1, 2, 3}), ContractError);
}

TEST_CASE("vertex classification") {
  Graph g = cycle_plus(7, {{0, 1}});
  Hole h = base_hole(g, 7);
  CHECK(classify_vertex(g, h, 7).kind == RoleKind::Cap);

  g = cycle_plus(7, {{0, 1, 2}});
  h = base_hole(g, 7);
  auto clone = classify_vertex(g, h, 7);
  CHECK(clone.kind == RoleKind::Clone);
  CHECK(clone.anchor == 1);

  g = cycle_plus(8, {{0, 1, 4, 5}});
  h = base_hole(g, 8);
  auto hub = classify_vertex(g, h, 8);
  CHECK(hub.kind == RoleKind::Major);
  CHECK(hub.is_hub);
  CHECK_FALSE(hub.is_gem_center);

  g = cycle_plus(6, {{0, 1, 2, 3}});
  h = base_hole(g, 6);
  auto gem = classify_vertex(g, h, 6);
  CHECK(gem.kind == RoleKind::Major);
  CHECK(gem.is_gem_center);
  CHECK_FALSE(gem.is_hub);

  g = cycle_plus(6, {{0}});
  h = base_hole(g, 6);
  auto pend = classify_vertex(g, h, 6);
  CHECK(pend.kind == RoleKind::Pendant);
  CHECK(pend.anchor == 0);

  g = cycle_plus(6, {{0, 2}});
  h = base_hole(g, 6);
  CHECK(classify_vertex(g, h, 6).kind == RoleKind::NonadjacentPairMinor);

  g = cycle_plus(6, {{}});
  h = base_hole(g, 6);
  CHECK(classify_vertex(g, h, 6).kind == RoleKind::NoNeighbor);

  CHECK_THROWS_AS(classify_vertex(g, h, 0), ContractError);
}

TEST_CASE("sectors") {
  Graph g = cycle_plus(7, {{0, 2, 4}});
  Hole h = base_hole(g, 7);
  auto s = sectors(g, h, 7);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Path{0, 1, 2});
  CHECK(s[1] == Path{2, 3, 4});
  CHECK(s[2] == Path{4, 5, 6, 0});

  g = cycle_plus(4, {{0, 1, 2, 3}});
  h = base_hole(g, 4);
  s = sectors(g, h, 4);
  REQUIRE(s.size() == 4);
  for (const auto& sec : s) CHECK(sec.size() == 2);

  g = cycle_plus(8, {{0, 1, 4, 5}});
  h = base_hole(g, 8);
  s = sectors(g, h, 8);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == Path{0, 1});
  CHECK(s[1] == Path{1, 2, 3, 4});
  CHECK(s[2] == Path{4, 5});
  CHECK(s[3] == Path{5, 6, 7, 0});

  g = cycle_plus(6, {{0}});
  h = base_hole(g, 6);
  CHECK_THROWS_AS(sectors(g, h, 6), ContractError);
}

TEST_CASE("extended neighborhoods") {
  Graph g = cycle_plus(7, {{0, 2, 4}});
  Hole h = base_hole(g, 7);
  auto ext = extended_neighborhoods(g, h, 7);
  REQUIRE(ext.size() == 3);
  CHECK(ext[0] == Path{0, 1, 2});
  CHECK(ext[1] == Path{2, 3, 4});
  CHECK(ext[2] == Path{4, 5, 6, 0});

  g = cycle_plus(8, {{0, 2, 4, 6}});
  h = base_hole(g, 8);
  ext = extended_neighborhoods(g, h, 8);
  CHECK(ext[0] == Path{0, 1, 2});

  Graph hub = g_hub();
  Hole hh = base_hole(hub, 10);
  ext = extended_neighborhoods(hub, hh, 10);
  REQUIRE(ext.size() == 4);
  // The long sector through the c1 side picks up both sector-end
  // neighbors of the hub.
  bool found = false;
  for (const auto& e : ext) {
    if (e == Path{7, 8, 9, 0, 1, 2, 3}) found = true;
  }
  CHECK(found);

  Graph capg = cycle_plus(7, {{0, 1}});
  Hole capd = base_hole(capg, 7);
  CHECK_THROWS_AS(extended_neighborhoods(capg, capd, 7), ContractError);
}

TEST_CASE("distant pairs") {
  Graph g = cycle_plus(7, {{0, 2, 4}});
  Hole h = base_hole(g, 7);
  CHECK(are_distant(g, h, 7, 1, 5));
  CHECK(are_distant(g, h, 7, 5, 1));
  CHECK_FALSE(are_distant(g, h, 7, 0, 1));

  Graph hub = g_hub();
  Hole hh = base_hole(hub, 10);
  CHECK(are_distant(hub, hh, 10, 0, 5));

  // Symmetry plus never-distant within one extended neighborhood.
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      CHECK(are_distant(g, h, 7, a, b) == are_distant(g, h, 7, b, a));
    }
    CHECK_FALSE(are_distant(g, h, 7, a, a));
  }
}

TEST_CASE("nesting") {
  Graph g = cycle_plus(8, {{0, 1}, {4, 5}});
  Hole h = base_hole(g, 8);
  CHECK(nesting(g, h, 8, 9) == Nesting::StrictlyNested);

  g = cycle_plus(8, {{0, 2, 4}, {1, 3, 5}});
  h = base_hole(g, 8);
  CHECK(nesting(g, h, 8, 9) == Nesting::Cross);

  g = cycle_plus(8, {{0, 1, 2}, {2, 3, 4}});
  h = base_hole(g, 8);
  CHECK(nesting(g, h, 8, 9) == Nesting::Nested);

  // Pendants and caps nest with everything, even sharing a neighbor.
  g = cycle_plus(8, {{0}, {0, 2, 4, 6}});
  h = base_hole(g, 8);
  CHECK(nesting(g, h, 8, 9) != Nesting::Cross);
}

TEST_CASE("mnc classification") {
  Graph g = cycle_plus(4, {{0, 1, 2, 3}, {0, 1, 2, 3}});
  Hole h = base_hole(g, 4);
  auto cfg = mnc_classify(g, h, 4, 5);
  REQUIRE(cfg.has_value());
  CHECK(cfg->config_id == 1);

  Graph q = cube();
  Hole hex = make_hole(q, {0, 1, 2, 3, 4, 5});
  cfg = mnc_classify(q, hex, 6, 7);
  REQUIRE(cfg.has_value());
  CHECK(cfg->config_id == 3);

  Graph c7 = cycle_plus(7, {{0, 2, 4}, {0, 2, 4}});
  Hole h7 = base_hole(c7, 7);
  CHECK_FALSE(mnc_classify(c7, h7, 7, 8).has_value());

  Graph adj = cycle_plus(6, {{0, 2, 4}, {1, 3, 5}});
  adj.add_edge(6, 7);
  Hole h6 = base_hole(adj, 6);
  CHECK_THROWS_AS(mnc_classify(adj, h6, 6, 7), ContractError);
}

TEST_CASE("significant path witness") {
  Graph g = cycle_plus(7, {{0, 2, 4}, {1, 5}});
  Hole h = base_hole(g, 7);
  auto w = significant_witness(g, h, 7, Path{8});
  REQUIRE(w.has_value());
  CHECK(*w == std::pair<int, int>{1, 5});

  Graph far = cycle_plus(7, {{0, 2, 4}, {}});
  Hole hf = base_hole(far, 7);
  CHECK_FALSE(significant_witness(far, hf, 7, Path{8}).has_value());
}

TEST_CASE("major neighbor theorem verification") {
  Graph hub = g_hub();
  Hole hh = base_hole(hub, 10);
  auto report = verify_major_neighbor_theorem(hub, hh, 10);
  CHECK(report.applicable);
  CHECK(report.pairs_checked > 0);
  CHECK(report.violations.empty());

  auto all = verify_major_neighbor_theorem_all(cycle(8), base_hole(cycle(8), 8));
  CHECK(all.applicable);
  CHECK(all.pairs_checked == 0);
  CHECK(all.violations.empty());

  Graph theta = k_theta(3);
  auto holes = enumerate_holes(theta);
  REQUIRE(!holes.holes.empty());
  auto skip = verify_major_neighbor_theorem_all(theta, holes.holes[0]);
  CHECK_FALSE(skip.applicable);
  CHECK(skip.skip_reason == "hole length <= 6");
  Graph turtle = k_turtle(1);  // 8-hole, non-member
  auto holes8 = enumerate_holes(turtle, 8, 8);
  REQUIRE(!holes8.holes.empty());
  auto skip8 = verify_major_neighbor_theorem_all(turtle, holes8.holes[0]);
  CHECK_FALSE(skip8.applicable);
  CHECK(skip8.skip_reason == "graph is not a verified class member");
}

TEST_CASE("star cutset witnesses") {
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  auto w = star_cutset_witness(p3, 1);
  REQUIRE(w.has_value());
  CHECK(w->cutset == VertexSet{1});
  CHECK(w->u == 0);
  CHECK(w->v == 2);

  for (int v = 0; v < 4; ++v) {
    CHECK_FALSE(star_cutset_witness(complete(4), v).has_value());
  }

  auto hub = star_cutset_witness(g_hub(), 10);
  REQUIRE(hub.has_value());
  CHECK(hub->center == 10);
  CHECK(hub->cutset.contains(10));
  // The witness separates two vertices outside the cutset.
  Graph g = g_hub();
  VertexSet rest = set_difference(VertexSet::range(11), hub->cutset);
  auto comps = components(g, rest);
  int cu = -1, cv = -1;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].contains(hub->u)) cu = static_cast<int>(i);
    if (comps[i].contains(hub->v)) cv = static_cast<int>(i);
  }
  CHECK(cu != cv);
}

TEST_CASE("classification is clean on members") {
  // Every hole-adjacent vertex of a verified member classifies as
  // pendant, cap, clone, or major; majors have >= 4 neighbors or an
  // independent triple.
  std::vector<Graph> members{g_tc(), g_hub(), cycle(9)};
  for (int k = 7; k <= 10; ++k) {
    members.push_back(cycle_plus(k, {{0}}));           // pendant
    members.push_back(cycle_plus(k, {{0, 1}}));        // cap
    members.push_back(cycle_plus(k, {{0, 1, 2}}));     // clone
    members.push_back(cycle_plus(k, {{0, 2, 4}}));     // independent triple
  }
  for (int i = 0; i < 15; ++i) {
    auto g = random_class_member(10, 0.25, 95000 + static_cast<uint64_t>(i), 30);
    if (g) members.push_back(*g);
  }
  int pairs = 0;
  for (const auto& g : members) {
    REQUIRE(is_class_member(g).status == MemberStatus::Member);
    for (const auto& h : enumerate_holes(g, 4, 1 << 30, 500).holes) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v)) continue;
        auto role = classify_vertex(g, h, v);
        if (role.kind == RoleKind::NoNeighbor) continue;
        ++pairs;
        CHECK(role.kind != RoleKind::NonadjacentPairMinor);
        if (role.kind == RoleKind::Major) {
          bool big = role.hole_neighbors.size() >= 4;
          bool indep_triple = role.hole_neighbors.size() == 3;
          if (indep_triple) {
            for (std::size_t a = 0; a < 3; ++a) {
              for (std::size_t b = a + 1; b < 3; ++b) {
                if (g.adjacent(role.hole_neighbors[a], role.hole_neighbors[b])) {
                  indep_triple = false;
                }
              }
            }
          }
          CHECK((big || indep_triple));
        }
      }
    }
  }
  CHECK(pairs > 30);
}
