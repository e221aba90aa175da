#ifndef SEPLAB_GRAPH_HPP
#define SEPLAB_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seplab {

/// Thrown when an operation precondition is violated.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown on malformed graph input; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids);
  explicit VertexSet(std::vector<int> ids);
  static VertexSet range(int n);

  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  int operator[](int i) const { return ids_[static_cast<std::size_t>(i)]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> ids_;  // ascending, unique
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Induced path as an ordered vertex sequence.
using Path = std::vector<int>;

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Neighbor lists are kept sorted ascending; this is the tie-breaking
/// anchor that makes every algorithm in the library deterministic.
class Graph {
 public:
  explicit Graph(int n = 0);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  /// Adds an undirected edge. Rejects self-loops and out-of-range ids;
  /// adding an existing edge is a no-op.
  void add_edge(int u, int v);

  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_neighbor_in(int v, const VertexSet& xs) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<uint64_t> bits_;  // adjacency matrix rows, stride_ words each
  int stride_ = 0;
};

enum class GraphFormat { EdgeList, Graph6 };

/// Parses "n m" header plus m "u v" lines ('#' starts a comment line),
/// or one standard graph6 line. Loops and parallel edges are rejected.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string write_edge_list(const Graph& g);
std::string write_graph6(const Graph& g);

/// N(X): vertices outside X with a neighbor in X.
VertexSet neighborhood(const Graph& g, const VertexSet& x);
/// N[X] = N(X) with X added back.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

/// Connected components of G[within], each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Shortest path P = p0..pk with p0 in `from`, V(P)\{p0} inside `via`,
/// no vertex before pk adjacent to `to`, and pk having a neighbor in `to`.
/// BFS seeds and neighbor scans run in ascending id order. `from` and `to`
/// must be disjoint. Returns absent when no such path exists.
std::optional<Path> path_through(const Graph& g, const VertexSet& from,
                                 const VertexSet& to, const VertexSet& via);

bool is_induced_path(const Graph& g, const Path& p);
bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle);
bool is_clique(const Graph& g, const VertexSet& x);

/// G[keep] relabeled to dense ids; original_ids[i] is the source id of i.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_ids;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace seplab

#endif
