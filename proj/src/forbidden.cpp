#include "seplab/forbidden.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "seplab/holes.hpp"

namespace seplab {

std::string kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::Theta: return "theta";
    case StructureKind::Pyramid: return "pyramid";
    case StructureKind::Prism: return "prism";
    case StructureKind::Turtle: return "turtle";
    case StructureKind::Cube: return "cube";
    case StructureKind::Creature3: return "creature3";
    case StructureKind::ImmatureCreature: return "immature_creature";
  }
  return "unknown";
}

namespace {

// Orders the vertices of a path component by walking from an endpoint.
// Returns empty when the component is not a path.
std::vector<int> path_order(const Graph& g, const VertexSet& comp) {
  if (comp.size() == 1) return {comp[0]};
  int start = -1;
  for (int v : comp) {
    int d = 0;
    for (int w : g.neighbors(v)) {
      if (comp.contains(w)) ++d;
    }
    if (d > 2) return {};
    if (d == 1 && start < 0) start = v;
  }
  if (start < 0) return {};  // all inner degrees 2: a cycle
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (w != prev && comp.contains(w)) {
        next = w;
        break;
      }
    }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return static_cast<int>(order.size()) == comp.size() ? order : std::vector<int>{};
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::optional<ForbiddenWitness> recognize_theta(const Graph& g) {
  int n = g.vertex_count();
  if (n < 5) return std::nullopt;
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 3) {
      branch.push_back(v);
    } else if (g.degree(v) != 2) {
      return std::nullopt;
    }
  }
  if (branch.size() != 2 || g.adjacent(branch[0], branch[1])) return std::nullopt;
  int a = branch[0], b = branch[1];
  auto comps = components(g, set_difference(VertexSet::range(n), VertexSet{a, b}));
  if (comps.size() != 3) return std::nullopt;
  std::vector<std::vector<int>> legs;
  for (const auto& comp : comps) {
    std::vector<int> leg = path_order(g, comp);
    if (leg.empty()) return std::nullopt;
    if (!g.adjacent(leg.front(), a)) std::reverse(leg.begin(), leg.end());
    if (!g.adjacent(leg.front(), a) || !g.adjacent(leg.back(), b)) return std::nullopt;
    legs.push_back(std::move(leg));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      std::vector<int> cyc = concat({{a}, legs[static_cast<std::size_t>(i)], {b},
                                     reversed(legs[static_cast<std::size_t>(j)])});
      if (!is_induced_cycle(g, cyc)) return std::nullopt;
    }
  }
  ForbiddenWitness w{StructureKind::Theta, VertexSet::range(n), {}};
  w.roles["a"] = {a};
  w.roles["b"] = {b};
  for (int i = 0; i < 3; ++i) {
    w.roles["path" + std::to_string(i + 1)] =
        concat({{a}, legs[static_cast<std::size_t>(i)], {b}});
  }
  return w;
}

Graph without_edges(const Graph& g, const std::vector<std::pair<int, int>>& drop) {
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    bool dropped = false;
    for (auto [x, y] : drop) {
      if ((u == x && v == y) || (u == y && v == x)) {
        dropped = true;
        break;
      }
    }
    if (!dropped) out.add_edge(u, v);
  }
  return out;
}

std::vector<std::vector<int>> triangles(const Graph& g) {
  std::vector<std::vector<int>> out;
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::optional<ForbiddenWitness> recognize_pyramid(const Graph& g) {
  int n = g.vertex_count();
  if (n < 6) return std::nullopt;
  for (const auto& tri : triangles(g)) {
    Graph g2 = without_edges(g, {{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}});
    for (int a = 0; a < n; ++a) {
      if (std::find(tri.begin(), tri.end(), a) != tri.end()) continue;
      auto comps =
          components(g2, set_difference(VertexSet::range(n), VertexSet{a}));
      if (comps.size() != 3) continue;
      std::vector<std::vector<int>> legs(3);
      bool ok = true;
      int one_edge = 0;
      for (const auto& comp : comps) {
        std::vector<int> leg = path_order(g2, comp);
        if (leg.empty()) {
          ok = false;
          break;
        }
        int bi = -1;
        for (int t = 0; t < 3 && bi < 0; ++t) {
          if (comp.contains(tri[static_cast<std::size_t>(t)])) bi = t;
        }
        if (bi < 0 || legs[static_cast<std::size_t>(bi)].size() > 0) {
          ok = false;
          break;
        }
        if (leg.back() != tri[static_cast<std::size_t>(bi)]) {
          std::reverse(leg.begin(), leg.end());
        }
        if (leg.back() != tri[static_cast<std::size_t>(bi)] ||
            !g2.adjacent(leg.front(), a)) {
          ok = false;
          break;
        }
        if (leg.size() == 1) ++one_edge;
        legs[static_cast<std::size_t>(bi)] = std::move(leg);
      }
      if (!ok || one_edge > 1) continue;
      for (int i = 0; i < 3 && ok; ++i) {
        for (int j = i + 1; j < 3 && ok; ++j) {
          std::vector<int> cyc = concat({{a}, legs[static_cast<std::size_t>(i)],
                                         reversed(legs[static_cast<std::size_t>(j)])});
          if (!is_induced_cycle(g, cyc)) ok = false;
        }
      }
      if (!ok) continue;
      ForbiddenWitness w{StructureKind::Pyramid, VertexSet::range(n), {}};
      w.roles["apex"] = {a};
      w.roles["triangle"] = tri;
      for (int i = 0; i < 3; ++i) {
        w.roles["path" + std::to_string(i + 1)] =
            concat({{a}, legs[static_cast<std::size_t>(i)]});
      }
      return w;
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> recognize_prism(const Graph& g) {
  int n = g.vertex_count();
  if (n < 6) return std::nullopt;
  auto tris = triangles(g);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      const auto& ta = tris[i];
      const auto& tb = tris[j];
      bool disjoint = true;
      for (int x : ta) {
        if (std::find(tb.begin(), tb.end(), x) != tb.end()) disjoint = false;
      }
      if (!disjoint) continue;
      Graph g2 = without_edges(g, {{ta[0], ta[1]},
                                   {ta[0], ta[2]},
                                   {ta[1], ta[2]},
                                   {tb[0], tb[1]},
                                   {tb[0], tb[2]},
                                   {tb[1], tb[2]}});
      auto comps = components(g2, VertexSet::range(n));
      if (comps.size() != 3) continue;
      // legs[t] runs from ta[t] to its matched tb vertex.
      std::vector<std::vector<int>> legs(3);
      bool ok = true;
      for (const auto& comp : comps) {
        std::vector<int> leg = path_order(g2, comp);
        if (leg.empty()) {
          ok = false;
          break;
        }
        int ai = -1, bi = -1;
        for (int t = 0; t < 3; ++t) {
          if (comp.contains(ta[static_cast<std::size_t>(t)])) ai = t;
          if (comp.contains(tb[static_cast<std::size_t>(t)])) bi = t;
        }
        if (ai < 0 || bi < 0 || !legs[static_cast<std::size_t>(ai)].empty()) {
          ok = false;
          break;
        }
        if (leg.front() != ta[static_cast<std::size_t>(ai)]) {
          std::reverse(leg.begin(), leg.end());
        }
        if (leg.front() != ta[static_cast<std::size_t>(ai)] ||
            leg.back() != tb[static_cast<std::size_t>(bi)]) {
          ok = false;
          break;
        }
        legs[static_cast<std::size_t>(ai)] = std::move(leg);
      }
      if (!ok) continue;
      for (int s = 0; s < 3 && ok; ++s) {
        for (int t = s + 1; t < 3 && ok; ++t) {
          std::vector<int> cyc = concat({legs[static_cast<std::size_t>(s)],
                                         reversed(legs[static_cast<std::size_t>(t)])});
          if (!is_induced_cycle(g, cyc)) ok = false;
        }
      }
      if (!ok) continue;
      ForbiddenWitness w{StructureKind::Prism, VertexSet::range(n), {}};
      w.roles["triangle1"] = ta;
      w.roles["triangle2"] = {legs[0].back(), legs[1].back(), legs[2].back()};
      for (int t = 0; t < 3; ++t) {
        w.roles["path" + std::to_string(t + 1)] = legs[static_cast<std::size_t>(t)];
      }
      return w;
    }
  }
  return std::nullopt;
}

// Splits of a cycle along two of its edges; arcs are inclusive position
// ranges in cyclic order.
std::vector<int> arc_vertices(const std::vector<int>& cycle, int from, int to) {
  std::vector<int> out;
  int k = static_cast<int>(cycle.size());
  for (int p = from;; p = (p + 1) % k) {
    out.push_back(cycle[static_cast<std::size_t>(p)]);
    if (p == to) break;
  }
  return out;
}

std::optional<ForbiddenWitness> turtle_from_hole(const Graph& g,
                                                 const std::vector<int>& cycle, int x,
                                                 int y) {
  int k = static_cast<int>(cycle.size());
  auto on_arc = [&](int pos, int from, int to) {
    return ((pos - from + k) % k) <= ((to - from + k) % k);
  };
  std::vector<int> px, py;
  for (int p = 0; p < k; ++p) {
    if (g.adjacent(x, cycle[static_cast<std::size_t>(p)])) px.push_back(p);
    if (g.adjacent(y, cycle[static_cast<std::size_t>(p)])) py.push_back(p);
  }
  if (px.size() < 3 || py.size() < 3) return std::nullopt;
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      if (p == q) continue;
      // Arc1 = positions p+1..q, arc2 = q+1..p.
      auto in1 = [&](int pos) { return on_arc(pos, (p + 1) % k, q); };
      bool x_in_1 = std::all_of(px.begin(), px.end(), in1);
      bool y_in_2 = std::none_of(py.begin(), py.end(), in1);
      if (x_in_1 && y_in_2) {
        ForbiddenWitness w{StructureKind::Turtle, {}, {}};
        std::vector<int> verts = cycle;
        verts.push_back(x);
        verts.push_back(y);
        w.vertices = VertexSet(verts);
        w.roles["x"] = {x};
        w.roles["y"] = {y};
        w.roles["path1"] = arc_vertices(cycle, (p + 1) % k, q);
        w.roles["path2"] = arc_vertices(cycle, (q + 1) % k, p);
        w.roles["hole"] = cycle;
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> recognize_turtle(const Graph& g) {
  int n = g.vertex_count();
  if (n < 8) return std::nullopt;
  for (int x = 0; x < n; ++x) {
    for (int y : g.neighbors(x)) {
      if (y <= x) continue;
      VertexSet rest = set_difference(VertexSet::range(n), VertexSet{x, y});
      auto comps = components(g, rest);
      if (comps.size() != 1) continue;
      bool cycle_ok = true;
      for (int v : rest) {
        int d = 0;
        for (int w : g.neighbors(v)) {
          if (rest.contains(w)) ++d;
        }
        if (d != 2) {
          cycle_ok = false;
          break;
        }
      }
      if (!cycle_ok || rest.size() < 6) continue;
      // Walk the spanning cycle.
      std::vector<int> cycle{rest[0]};
      int prev = -1, cur = rest[0];
      while (static_cast<int>(cycle.size()) < rest.size()) {
        int next = -1;
        for (int w : g.neighbors(cur)) {
          if (w != prev && rest.contains(w)) {
            next = w;
            break;
          }
        }
        if (next < 0) break;
        cycle.push_back(next);
        prev = cur;
        cur = next;
      }
      if (static_cast<int>(cycle.size()) != rest.size()) continue;
      if (!is_induced_cycle(g, cycle)) continue;
      auto w1 = turtle_from_hole(g, cycle, x, y);
      if (w1) return w1;
      auto w2 = turtle_from_hole(g, cycle, y, x);
      if (w2) return w2;
    }
  }
  return std::nullopt;
}

bool is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        auto vi = static_cast<std::size_t>(v);
        if (color[vi] == -1) {
          color[vi] = 1 - color[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (color[vi] == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// The cube is the unique connected bipartite 3-regular graph on 8 vertices.
std::optional<ForbiddenWitness> recognize_cube(const Graph& g) {
  int n = g.vertex_count();
  if (n != 8) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 3) return std::nullopt;
  }
  if (!is_connected(g) || !is_bipartite(g)) return std::nullopt;
  ForbiddenWitness w{StructureKind::Cube, VertexSet::range(n), {}};
  HoleList hexes = enumerate_holes(g, 6, 6, 1);
  if (!hexes.holes.empty()) {
    w.roles["hexagon"] = hexes.holes[0].cycle;
    std::vector<int> centers;
    for (int v = 0; v < n; ++v) {
      if (!hexes.holes[0].contains(v)) centers.push_back(v);
    }
    w.roles["centers"] = centers;
  }
  return w;
}

std::optional<ForbiddenWitness> recognize_creature3(const Graph& g) {
  int n = g.vertex_count();
  if (n < 8) return std::nullopt;
  for (int x1 = 0; x1 < n; ++x1) {
    for (int x2 = x1 + 1; x2 < n; ++x2) {
      for (int x3 = x2 + 1; x3 < n; ++x3) {
        for (int y1 : g.neighbors(x1)) {
          for (int y2 : g.neighbors(x2)) {
            for (int y3 : g.neighbors(x3)) {
              std::vector<int> six{x1, x2, x3, y1, y2, y3};
              std::sort(six.begin(), six.end());
              if (std::unique(six.begin(), six.end()) != six.end()) continue;
              if (g.adjacent(x1, y2) || g.adjacent(x1, y3) || g.adjacent(x2, y1) ||
                  g.adjacent(x2, y3) || g.adjacent(x3, y1) || g.adjacent(x3, y2)) {
                continue;
              }
              VertexSet rest =
                  set_difference(VertexSet::range(n), VertexSet(six));
              auto comps = components(g, rest);
              if (comps.size() != 2) continue;
              for (int flip = 0; flip < 2; ++flip) {
                const VertexSet& a_side = comps[static_cast<std::size_t>(flip)];
                const VertexSet& b_side = comps[static_cast<std::size_t>(1 - flip)];
                auto xs_ok = [&](int x, int y) {
                  return g.has_neighbor_in(x, a_side) && !g.has_neighbor_in(x, b_side) &&
                         g.has_neighbor_in(y, b_side) && !g.has_neighbor_in(y, a_side);
                };
                if (xs_ok(x1, y1) && xs_ok(x2, y2) && xs_ok(x3, y3)) {
                  ForbiddenWitness w{StructureKind::Creature3, VertexSet::range(n), {}};
                  w.roles["x"] = {x1, x2, x3};
                  w.roles["y"] = {y1, y2, y3};
                  w.roles["a_side"] = a_side.ids();
                  w.roles["b_side"] = b_side.ids();
                  return w;
                }
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> recognize_immature(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  int k = n / 2;
  // Enumerate the halves containing vertex 0.
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::function<std::optional<ForbiddenWitness>(int, int)> rec =
      [&](int idx, int from) -> std::optional<ForbiddenWitness> {
    if (idx == k) {
      VertexSet xs(pick);
      VertexSet ys = set_difference(VertexSet::range(n), xs);
      std::vector<int> match(static_cast<std::size_t>(k), -1);
      for (int i = 0; i < k; ++i) {
        int cnt = 0;
        for (int w : g.neighbors(xs[i])) {
          if (ys.contains(w)) {
            ++cnt;
            match[static_cast<std::size_t>(i)] = w;
          }
        }
        if (cnt != 1) return std::nullopt;
      }
      std::vector<int> seen = match;
      std::sort(seen.begin(), seen.end());
      if (std::unique(seen.begin(), seen.end()) != seen.end()) return std::nullopt;
      for (int y : ys) {
        int cnt = 0;
        for (int w : g.neighbors(y)) {
          if (xs.contains(w)) ++cnt;
        }
        if (cnt != 1) return std::nullopt;
      }
      ForbiddenWitness w{StructureKind::ImmatureCreature, VertexSet::range(n), {}};
      w.roles["x"] = xs.ids();
      w.roles["y"] = match;
      return w;
    }
    for (int v = from; v < n; ++v) {
      pick[static_cast<std::size_t>(idx)] = v;
      if (auto found = rec(idx + 1, v + 1)) return found;
    }
    return std::nullopt;
  };
  pick[0] = 0;
  return rec(1, 1);
}

}  // namespace

std::optional<ForbiddenWitness> recognize_structure(const Graph& h, StructureKind kind) {
  switch (kind) {
    case StructureKind::Theta: return recognize_theta(h);
    case StructureKind::Pyramid: return recognize_pyramid(h);
    case StructureKind::Prism: return recognize_prism(h);
    case StructureKind::Turtle: return recognize_turtle(h);
    case StructureKind::Cube: return recognize_cube(h);
    case StructureKind::Creature3: return recognize_creature3(h);
    case StructureKind::ImmatureCreature: return recognize_immature(h);
  }
  return std::nullopt;
}

namespace {

// Theta = hole + an outside path joining two non-adjacent hole vertices
// whose interior avoids the rest of the hole's neighborhood.
std::optional<ForbiddenWitness> theta_on_hole(const Graph& g, const Hole& h) {
  int k = h.length();
  int n = g.vertex_count();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (j == i + 1 || (i == 0 && j == k - 1)) continue;
      int a = h.cycle[static_cast<std::size_t>(i)];
      int b = h.cycle[static_cast<std::size_t>(j)];
      VertexSet via;
      for (int v = 0; v < n; ++v) {
        if (h.contains(v)) continue;
        bool ok = true;
        for (int w : g.neighbors(v)) {
          if (w != a && w != b && h.contains(w)) {
            ok = false;
            break;
          }
        }
        if (ok) via.insert(v);
      }
      auto p = path_through(g, VertexSet{a}, VertexSet{b}, via);
      if (!p) continue;
      std::vector<int> leg = *p;
      leg.push_back(b);
      ForbiddenWitness w{StructureKind::Theta, {}, {}};
      std::vector<int> verts = h.cycle;
      verts.insert(verts.end(), leg.begin() + 1, leg.end() - 1);
      w.vertices = VertexSet(verts);
      w.roles["a"] = {a};
      w.roles["b"] = {b};
      w.roles["path1"] = arc_vertices(h.cycle, i, j);
      w.roles["path2"] = reversed(arc_vertices(h.cycle, j, i));
      w.roles["path3"] = leg;
      return w;
    }
  }
  return std::nullopt;
}

// Pyramid = hole + a cap on one hole edge + an outside path from the cap
// to an apex on the hole.
std::optional<ForbiddenWitness> pyramid_on_hole(const Graph& g, const Hole& h) {
  int k = h.length();
  int n = g.vertex_count();
  for (int e = 0; e < k; ++e) {
    int b1 = h.cycle[static_cast<std::size_t>(e)];
    int b2 = h.cycle[static_cast<std::size_t>((e + 1) % k)];
    for (int b3 = 0; b3 < n; ++b3) {
      if (h.contains(b3)) continue;
      bool cap = g.adjacent(b3, b1) && g.adjacent(b3, b2);
      if (!cap) continue;
      bool extra = false;
      for (int w : g.neighbors(b3)) {
        if (w != b1 && w != b2 && h.contains(w)) extra = true;
      }
      if (extra) continue;
      for (int pa = 0; pa < k; ++pa) {
        if (pa == e || pa == (e + 1) % k) continue;
        int a = h.cycle[static_cast<std::size_t>(pa)];
        VertexSet via;
        for (int v = 0; v < n; ++v) {
          if (v == b3 || h.contains(v)) continue;
          bool ok = true;
          for (int w : g.neighbors(v)) {
            if (w != a && h.contains(w)) {
              ok = false;
              break;
            }
          }
          if (ok) via.insert(v);
        }
        auto p = path_through(g, VertexSet{b3}, VertexSet{a}, via);
        if (!p) continue;
        std::vector<int> leg3 = reversed(*p);  // from a's side to b3
        ForbiddenWitness w{StructureKind::Pyramid, {}, {}};
        std::vector<int> verts = h.cycle;
        verts.insert(verts.end(), leg3.begin(), leg3.end());
        w.vertices = VertexSet(verts);
        std::vector<int> arc1 = reversed(arc_vertices(h.cycle, (e + 1) % k, pa));
        std::vector<int> arc2 = arc_vertices(h.cycle, pa, e);
        w.roles["apex"] = {a};
        w.roles["triangle"] = {b1, b2, b3};
        w.roles["path1"] = reversed(arc2);  // a .. b1
        w.roles["path2"] = arc1;            // a .. b2 (reversed arc back)
        std::vector<int> p3 = concat({{a}, leg3});
        w.roles["path3"] = p3;
        return w;
      }
    }
  }
  return std::nullopt;
}

// Prism = hole + caps on two disjoint hole edges joined by an outside path
// whose interior avoids the hole entirely.
std::optional<ForbiddenWitness> prism_on_hole(const Graph& g, const Hole& h) {
  int k = h.length();
  int n = g.vertex_count();
  for (int e1 = 0; e1 < k; ++e1) {
    for (int e2 = 0; e2 < k; ++e2) {
      if (e2 == e1 || e2 == (e1 + 1) % k || (e2 + 1) % k == e1) continue;
      int a1 = h.cycle[static_cast<std::size_t>((e1 + 1) % k)];
      int a2 = h.cycle[static_cast<std::size_t>(e1)];
      int b1 = h.cycle[static_cast<std::size_t>(e2)];
      int b2 = h.cycle[static_cast<std::size_t>((e2 + 1) % k)];
      for (int a3 = 0; a3 < n; ++a3) {
        if (h.contains(a3) || !g.adjacent(a3, a1) || !g.adjacent(a3, a2)) continue;
        bool extra_a = false;
        for (int w : g.neighbors(a3)) {
          if (w != a1 && w != a2 && h.contains(w)) extra_a = true;
        }
        if (extra_a) continue;
        for (int b3 = 0; b3 < n; ++b3) {
          if (b3 == a3 || h.contains(b3) || !g.adjacent(b3, b1) ||
              !g.adjacent(b3, b2)) {
            continue;
          }
          bool extra_b = false;
          for (int w : g.neighbors(b3)) {
            if (w != b1 && w != b2 && h.contains(w)) extra_b = true;
          }
          if (extra_b) continue;
          VertexSet via;
          for (int v = 0; v < n; ++v) {
            if (v == a3 || v == b3 || h.contains(v)) continue;
            bool ok = true;
            for (int w : g.neighbors(v)) {
              if (h.contains(w)) {
                ok = false;
                break;
              }
            }
            if (ok) via.insert(v);
          }
          auto p = path_through(g, VertexSet{a3}, VertexSet{b3}, via);
          if (!p) continue;
          std::vector<int> leg3 = *p;
          leg3.push_back(b3);
          ForbiddenWitness w{StructureKind::Prism, {}, {}};
          std::vector<int> verts = h.cycle;
          verts.insert(verts.end(), leg3.begin(), leg3.end());
          w.vertices = VertexSet(verts);
          w.roles["triangle1"] = {a1, a2, a3};
          w.roles["triangle2"] = {b1, b2, b3};
          w.roles["path1"] = arc_vertices(h.cycle, (e1 + 1) % k, e2);  // a1..b1
          w.roles["path2"] = reversed(arc_vertices(h.cycle, (e2 + 1) % k, e1));
          w.roles["path3"] = leg3;
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> turtle_search(const Graph& g, const Hole& h) {
  int n = g.vertex_count();
  if (h.length() < 6) return std::nullopt;
  for (int x = 0; x < n; ++x) {
    if (h.contains(x)) continue;
    for (int y : g.neighbors(x)) {
      if (y <= x || h.contains(y)) continue;
      auto w1 = turtle_from_hole(g, h.cycle, x, y);
      if (w1) return w1;
      auto w2 = turtle_from_hole(g, h.cycle, y, x);
      if (w2) return w2;
    }
  }
  return std::nullopt;
}

SearchResult cube_search(const Graph& g) {
  int n = g.vertex_count();
  SearchResult res;
  res.exhaustive = true;
  if (n < 8) return res;
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int from) -> bool {
    if (pick.size() == 8) {
      auto sub = induced_subgraph(g, VertexSet(pick));
      auto w = recognize_cube(sub.graph);
      if (!w) return false;
      ForbiddenWitness out{StructureKind::Cube, VertexSet(pick), {}};
      for (const auto& [name, ids] : w->roles) {
        std::vector<int> mapped;
        for (int v : ids) mapped.push_back(sub.original_ids[static_cast<std::size_t>(v)]);
        out.roles[name] = mapped;
      }
      res.witness = out;
      return true;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      if (rec(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(0);
  return res;
}

}  // namespace

SearchResult find_structure(const Graph& g, StructureKind kind, long hole_budget) {
  if (kind == StructureKind::Cube) return cube_search(g);
  if (kind == StructureKind::Creature3 || kind == StructureKind::ImmatureCreature) {
    throw ContractError("use find_3creature / find_immature_kcreature");
  }
  int min_len = kind == StructureKind::Turtle ? 6 : 4;
  HoleList holes = enumerate_holes(g, min_len, 1 << 30, hole_budget);
  SearchResult res;
  res.exhaustive = !holes.truncated;
  for (const Hole& h : holes.holes) {
    std::optional<ForbiddenWitness> w;
    switch (kind) {
      case StructureKind::Theta: w = theta_on_hole(g, h); break;
      case StructureKind::Pyramid: w = pyramid_on_hole(g, h); break;
      case StructureKind::Prism: w = prism_on_hole(g, h); break;
      case StructureKind::Turtle: w = turtle_search(g, h); break;
      default: break;
    }
    if (w) {
      res.witness = w;
      return res;
    }
  }
  return res;
}

MemberVerdict is_class_member(const Graph& g, long hole_budget) {
  MemberVerdict verdict;
  verdict.exhaustive = true;
  for (StructureKind kind : {StructureKind::Theta, StructureKind::Pyramid,
                             StructureKind::Prism, StructureKind::Turtle}) {
    SearchResult res = find_structure(g, kind, hole_budget);
    if (res.witness) {
      verdict.status = MemberStatus::NonMember;
      verdict.witness = res.witness;
      verdict.exhaustive = res.exhaustive;
      return verdict;
    }
    verdict.exhaustive = verdict.exhaustive && res.exhaustive;
  }
  verdict.status = verdict.exhaustive ? MemberStatus::Member : MemberStatus::Unknown;
  return verdict;
}

namespace {

// Enumerates subsets of pool (ascending by size then lexicographic) that
// induce a connected subgraph hitting every target set; calls fn on each.
bool for_each_connected_hitting(const Graph& g, const std::vector<int>& pool,
                                const std::vector<VertexSet>& targets, int max_size,
                                const std::function<bool(const VertexSet&)>& fn) {
  auto pool_n = static_cast<int>(pool.size());
  std::vector<int> idx;
  std::function<bool(int, int)> rec = [&](int from, int want) -> bool {
    if (static_cast<int>(idx.size()) == want) {
      std::vector<int> verts;
      for (int i : idx) verts.push_back(pool[static_cast<std::size_t>(i)]);
      VertexSet vs(verts);
      if (components(g, vs).size() != 1) return false;
      for (const auto& t : targets) {
        if (set_intersection(vs, t).empty()) return false;
      }
      return fn(vs);
    }
    for (int i = from; i < pool_n; ++i) {
      idx.push_back(i);
      if (rec(i + 1, want)) return true;
      idx.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= std::min(pool_n, max_size); ++size) {
    if (rec(0, size)) return true;
  }
  return false;
}

}  // namespace

SearchResult find_3creature(const Graph& g, int cap) {
  int n = g.vertex_count();
  SearchResult res;
  res.exhaustive = n <= cap;
  int max_side = res.exhaustive ? n : 4;
  for (int x1 = 0; x1 < n && !res.witness; ++x1) {
    for (int x2 = x1 + 1; x2 < n && !res.witness; ++x2) {
      for (int x3 = x2 + 1; x3 < n && !res.witness; ++x3) {
        for (int y1 : g.neighbors(x1)) {
          if (res.witness) break;
          for (int y2 : g.neighbors(x2)) {
            if (res.witness) break;
            for (int y3 : g.neighbors(x3)) {
              std::vector<int> six{x1, x2, x3, y1, y2, y3};
              std::sort(six.begin(), six.end());
              if (std::unique(six.begin(), six.end()) != six.end()) continue;
              if (g.adjacent(x1, y2) || g.adjacent(x1, y3) || g.adjacent(x2, y1) ||
                  g.adjacent(x2, y3) || g.adjacent(x3, y1) || g.adjacent(x3, y2)) {
                continue;
              }
              VertexSet sixset(six);
              VertexSet banned_a = closed_neighborhood(g, VertexSet{y1, y2, y3});
              VertexSet banned_b = closed_neighborhood(g, VertexSet{x1, x2, x3});
              std::vector<int> pool_a, pool_b;
              for (int v = 0; v < n; ++v) {
                if (sixset.contains(v)) continue;
                if (!banned_a.contains(v)) pool_a.push_back(v);
                if (!banned_b.contains(v)) pool_b.push_back(v);
              }
              std::vector<VertexSet> need_a{neighborhood(g, VertexSet{x1}),
                                            neighborhood(g, VertexSet{x2}),
                                            neighborhood(g, VertexSet{x3})};
              std::vector<VertexSet> need_b{neighborhood(g, VertexSet{y1}),
                                            neighborhood(g, VertexSet{y2}),
                                            neighborhood(g, VertexSet{y3})};
              for_each_connected_hitting(
                  g, pool_a, need_a, max_side, [&](const VertexSet& a_side) {
                    VertexSet na = closed_neighborhood(g, a_side);
                    std::vector<int> pool_b2;
                    for (int v : pool_b) {
                      if (!na.contains(v)) pool_b2.push_back(v);
                    }
                    return for_each_connected_hitting(
                        g, pool_b2, need_b, max_side, [&](const VertexSet& b_side) {
                          ForbiddenWitness w{StructureKind::Creature3, {}, {}};
                          w.vertices = set_union(set_union(a_side, b_side), sixset);
                          w.roles["x"] = {x1, x2, x3};
                          w.roles["y"] = {y1, y2, y3};
                          w.roles["a_side"] = a_side.ids();
                          w.roles["b_side"] = b_side.ids();
                          res.witness = w;
                          return true;
                        });
                  });
              if (res.witness) break;
            }
          }
        }
      }
    }
  }
  return res;
}

SearchResult find_immature_kcreature(const Graph& g, int k) {
  if (k < 1) throw ContractError("find_immature_kcreature requires k >= 1");
  int n = g.vertex_count();
  SearchResult res;
  double combos = 1.0;
  for (int i = 0; i < 2 * k; ++i) combos *= static_cast<double>(n - i) / (i + 1);
  if (n < 2 * k) {
    res.exhaustive = true;
    return res;
  }
  if (combos > 5e6) {
    res.exhaustive = false;
    return res;
  }
  res.exhaustive = true;
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int from) -> bool {
    if (static_cast<int>(pick.size()) == 2 * k) {
      auto sub = induced_subgraph(g, VertexSet(pick));
      auto w = recognize_immature(sub.graph);
      if (!w) return false;
      ForbiddenWitness out{StructureKind::ImmatureCreature, VertexSet(pick), {}};
      for (const auto& [name, ids] : w->roles) {
        std::vector<int> mapped;
        for (int v : ids) mapped.push_back(sub.original_ids[static_cast<std::size_t>(v)]);
        out.roles[name] = mapped;
      }
      res.witness = out;
      return true;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      if (rec(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(0);
  return res;
}

}  // namespace seplab
