#include "seplab/generators.hpp"

#include <random>

#include "seplab/forbidden.hpp"

namespace seplab {

namespace {
void require(bool ok, const std::string& msg) {
  if (!ok) throw ContractError(msg);
}
}  // namespace

Graph k_theta(int k) {
  require(k >= 1, "k_theta requires k >= 1");
  Graph g(2 * k + 2);
  int a = 0, b = k + 1;
  for (int i = 1; i <= k; ++i) {
    int ai = i, bi = k + 1 + i;
    g.add_edge(a, ai);
    g.add_edge(b, bi);
    g.add_edge(ai, bi);
  }
  return g;
}

Graph k_pyramid(int k) {
  require(k >= 1, "k_pyramid requires k >= 1");
  Graph g(2 * k + 1);
  int a = 0;
  for (int i = 1; i <= k; ++i) {
    int ai = i, bi = k + i;
    g.add_edge(a, ai);
    g.add_edge(ai, bi);
    for (int j = i + 1; j <= k; ++j) g.add_edge(bi, k + j);
  }
  return g;
}

Graph k_prism(int k) {
  require(k >= 1, "k_prism requires k >= 1");
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, k + i);
    for (int j = i + 1; j < k; ++j) {
      g.add_edge(i, j);
      g.add_edge(k + i, k + j);
    }
  }
  return g;
}

Graph k_turtle(int k, int extra1, int extra2) {
  require(k >= 1, "k_turtle requires k >= 1");
  require(extra1 >= 0 && extra2 >= 0, "k_turtle extras must be non-negative");
  int len1 = 3 * k + extra1;
  int len2 = 3 * k + extra2;
  int a = 0;
  int b = len1 + 1;
  auto u = [&](int j) { return j; };            // 1..len1
  auto w = [&](int j) { return len1 + 1 + j; }; // 1..len2
  int base = len1 + len2 + 2;
  auto x = [&](int i) { return base + i - 1; };
  auto y = [&](int i) { return base + k + i - 1; };
  Graph g(base + 2 * k);
  g.add_edge(a, u(1));
  for (int j = 1; j < len1; ++j) g.add_edge(u(j), u(j + 1));
  g.add_edge(u(len1), b);
  g.add_edge(a, w(1));
  for (int j = 1; j < len2; ++j) g.add_edge(w(j), w(j + 1));
  g.add_edge(w(len2), b);
  for (int i = 1; i <= k; ++i) {
    g.add_edge(x(i), y(i));
    for (int t = 1; t <= 3; ++t) {
      g.add_edge(x(i), u(3 * (i - 1) + t));
      g.add_edge(y(i), w(3 * (i - 1) + t));
    }
  }
  return g;
}

Graph k_ladder(int k) {
  require(k >= 1, "k_ladder requires k >= 1");
  // b0,b1,b2 = 0..2; rung i: L,M,R,T,U = 3+5(i-1)..+4; intermediates
  // I_1..I_{k-1} follow the rungs; top rail t0,t1,t2 at the end.
  auto L = [&](int i) { return 3 + 5 * (i - 1); };
  auto M = [&](int i) { return L(i) + 1; };
  auto R = [&](int i) { return L(i) + 2; };
  auto T = [&](int i) { return L(i) + 3; };
  auto U = [&](int i) { return L(i) + 4; };
  auto I = [&](int i) { return 3 + 5 * k + (i - 1); };
  int t0 = 3 + 5 * k + (k - 1);
  Graph g(t0 + 3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, L(1));
  g.add_edge(2, T(1));
  for (int i = 1; i <= k; ++i) {
    g.add_edge(L(i), M(i));
    g.add_edge(M(i), R(i));
    g.add_edge(R(i), T(i));
    g.add_edge(R(i), U(i));
    g.add_edge(T(i), U(i));
    if (i < k) {
      g.add_edge(L(i), I(i));
      g.add_edge(I(i), L(i + 1));
      g.add_edge(U(i), T(i + 1));
    }
  }
  g.add_edge(L(k), t0);
  g.add_edge(t0, t0 + 1);
  g.add_edge(t0 + 1, t0 + 2);
  g.add_edge(U(k), t0 + 2);
  return g;
}

Graph cube() {
  Graph g(8);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  g.add_edge(6, 0);
  g.add_edge(6, 2);
  g.add_edge(6, 4);
  g.add_edge(7, 1);
  g.add_edge(7, 3);
  g.add_edge(7, 5);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  require(n >= 1, "complete requires n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph min_theta() {
  Graph g(5);
  for (int m = 2; m <= 4; ++m) {
    g.add_edge(0, m);
    g.add_edge(1, m);
  }
  return g;
}

Graph min_pyramid() {
  Graph g(6);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(0, 1);  // the single one-edge leg
  g.add_edge(0, 4);
  g.add_edge(4, 2);
  g.add_edge(0, 5);
  g.add_edge(5, 3);
  return g;
}

Graph min_prism() { return k_prism(3); }

Graph min_turtle() {
  Graph g(8);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  g.add_edge(6, 0);
  g.add_edge(6, 1);
  g.add_edge(6, 2);
  g.add_edge(7, 3);
  g.add_edge(7, 4);
  g.add_edge(7, 5);
  g.add_edge(6, 7);
  return g;
}

Graph g_tc() {
  Graph g(11);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  g.add_edge(8, 1);
  g.add_edge(8, 0);
  g.add_edge(9, 7);
  g.add_edge(9, 0);
  g.add_edge(10, 8);
  g.add_edge(10, 9);
  return g;
}

Graph g_hub() {
  Graph g(11);
  for (int i = 0; i < 10; ++i) g.add_edge(i, (i + 1) % 10);
  g.add_edge(10, 2);
  g.add_edge(10, 3);
  g.add_edge(10, 7);
  g.add_edge(10, 8);
  return g;
}

Graph random_graph(int n, double p, uint64_t seed) {
  require(n >= 0, "random_graph requires n >= 0");
  require(p >= 0.0 && p <= 1.0, "random_graph requires 0 <= p <= 1");
  std::mt19937 gen(static_cast<uint32_t>(seed));
  auto threshold = static_cast<uint64_t>(p * 4294967296.0);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<uint64_t>(gen()) < threshold) g.add_edge(u, v);
    }
  }
  return g;
}

std::optional<Graph> random_class_member(int n, double p, uint64_t seed,
                                         int attempts, int cap) {
  for (int t = 0; t < attempts; ++t) {
    Graph g = random_graph(n, p, seed + static_cast<uint64_t>(t));
    auto verdict = is_class_member(g, cap);
    if (verdict.status == MemberStatus::Member) return g;
  }
  return std::nullopt;
}

Graph generate(const FamilySpec& spec) {
  const std::string& f = spec.family;
  auto extra = [&](std::size_t i) {
    return i < spec.extras.size() ? spec.extras[i] : 0;
  };
  if (f == "k_theta") return k_theta(spec.k);
  if (f == "k_pyramid") return k_pyramid(spec.k);
  if (f == "k_prism") return k_prism(spec.k);
  if (f == "k_turtle") return k_turtle(spec.k, extra(0), extra(1));
  if (f == "k_ladder") return k_ladder(spec.k);
  if (f == "cube") return cube();
  if (f == "cycle") return cycle(spec.k);
  if (f == "complete") return complete(spec.k);
  if (f == "min_theta") return min_theta();
  if (f == "min_pyramid") return min_pyramid();
  if (f == "min_prism") return min_prism();
  if (f == "min_turtle") return min_turtle();
  if (f == "g_tc") return g_tc();
  if (f == "g_hub") return g_hub();
  throw ContractError("unknown family: " + f);
}

}  // namespace seplab
