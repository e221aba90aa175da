#include "seplab/separators.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace seplab {

namespace {

// Mask helpers for the exhaustive enumerators (n <= 32).

std::vector<uint32_t> adjacency_masks(const Graph& g) {
  std::vector<uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= uint32_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= uint32_t{1} << u;
  }
  return adj;
}

uint32_t neighborhood_mask(const std::vector<uint32_t>& adj, uint32_t x) {
  uint32_t n = 0;
  for (uint32_t rest = x; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    n |= adj[static_cast<std::size_t>(v)];
  }
  return n & ~x;
}

// Counts full components of G\C; early-outs at two.
int full_component_count(const std::vector<uint32_t>& adj, int n, uint32_t c) {
  uint32_t all = (n == 32) ? ~uint32_t{0} : ((uint32_t{1} << n) - 1);
  uint32_t rest = all & ~c;
  int fulls = 0;
  while (rest) {
    uint32_t comp = rest & (~rest + 1);  // lowest remaining bit
    for (;;) {
      uint32_t grown = (comp | neighborhood_mask(adj, comp)) & (all & ~c);
      if (grown == comp) break;
      comp = grown;
    }
    if ((neighborhood_mask(adj, comp) & c) == c) {
      if (++fulls >= 2) return fulls;
    }
    rest &= ~comp;
  }
  return fulls;
}

VertexSet mask_to_set(uint32_t mask) {
  std::vector<int> ids;
  for (uint32_t rest = mask; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

std::vector<VertexSet> sorted_output(const std::set<VertexSet>& seps) {
  return {seps.begin(), seps.end()};
}

}  // namespace

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& c) {
  VertexSet rest = set_difference(VertexSet::range(g.vertex_count()), c);
  std::vector<VertexSet> out;
  for (const auto& comp : components(g, rest)) {
    if (neighborhood(g, comp) == c) out.push_back(comp);
  }
  return out;
}

bool is_minimal_separator(const Graph& g, const VertexSet& c) {
  return full_components(g, c).size() >= 2;
}

SeparatorRecord classify_separator(const Graph& g, const VertexSet& c) {
  SeparatorRecord rec;
  rec.separator = c;
  rec.full_components = full_components(g, c);
  rec.is_minimal = rec.full_components.size() >= 2;
  rec.is_clique = is_clique(g, c);
  rec.is_proper = rec.is_minimal && !rec.is_clique;
  return rec;
}

std::vector<VertexSet> oracle_enumerate(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap || n > 32) {
    throw ContractError("subset oracle cap " + std::to_string(std::min(cap, 32)) +
                        " exceeded (n=" + std::to_string(n) + ")");
  }
  auto adj = adjacency_masks(g);
  std::set<VertexSet> out;
  uint32_t limit = (n >= 32) ? ~uint32_t{0} : ((uint32_t{1} << n) - 1);
  for (uint32_t c = 0;; ++c) {
    if (full_component_count(adj, n, c) >= 2) out.insert(mask_to_set(c));
    if (c == limit) break;
  }
  return sorted_output(out);
}

std::vector<VertexSet> expand_enumerate(const Graph& g) {
  std::set<VertexSet> found;
  std::vector<VertexSet> queue;
  auto offer = [&](const VertexSet& cand) {
    if (found.contains(cand)) return;
    if (!is_minimal_separator(g, cand)) return;
    found.insert(cand);
    queue.push_back(cand);
  };
  VertexSet all = VertexSet::range(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet rest = set_difference(all, closed_neighborhood(g, VertexSet{v}));
    for (const auto& comp : components(g, rest)) offer(neighborhood(g, comp));
  }
  while (!queue.empty()) {
    VertexSet s = queue.back();
    queue.pop_back();
    for (int x : s) {
      VertexSet removed = set_union(s, closed_neighborhood(g, VertexSet{x}));
      VertexSet rest = set_difference(all, removed);
      for (const auto& comp : components(g, rest)) offer(neighborhood(g, comp));
    }
  }
  return sorted_output(std::set<VertexSet>(found.begin(), found.end()));
}

std::vector<VertexSet> clique_minimal_separators(const Graph& g) {
  std::vector<VertexSet> out;
  for (const auto& c : expand_enumerate(g)) {
    if (is_clique(g, c)) out.push_back(c);
  }
  return out;
}

std::vector<VertexSet> creature_bound_enumerate(const Graph& g, int k) {
  if (k < 1) throw ContractError("creature_bound_enumerate requires k >= 1");
  int n = g.vertex_count();
  if (n > 24) {
    throw ContractError("creature_bound_enumerate supports n <= 24 (n=" +
                        std::to_string(n) + ")");
  }
  auto adj = adjacency_masks(g);
  // Collect the neighborhood of every subset smaller than k, then test
  // each distinct pairwise intersection once.
  std::vector<uint32_t> hoods;
  uint32_t limit = (n == 0) ? 0 : ((uint32_t{1} << n) - 1);
  for (uint32_t x = 0;; ++x) {
    if (std::popcount(x) < k) hoods.push_back(neighborhood_mask(adj, x));
    if (x == limit) break;
  }
  std::sort(hoods.begin(), hoods.end());
  hoods.erase(std::unique(hoods.begin(), hoods.end()), hoods.end());
  std::vector<uint32_t> candidates;
  candidates.reserve(hoods.size() * hoods.size());
  for (std::size_t i = 0; i < hoods.size(); ++i) {
    for (std::size_t j = i; j < hoods.size(); ++j) {
      candidates.push_back(hoods[i] & hoods[j]);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::set<VertexSet> out;
  for (uint32_t c : candidates) {
    if (full_component_count(adj, n, c) >= 2) out.insert(mask_to_set(c));
  }
  return sorted_output(out);
}

}  // namespace seplab
