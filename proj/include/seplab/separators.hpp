#ifndef SEPLAB_SEPARATORS_HPP
#define SEPLAB_SEPARATORS_HPP

#include <vector>

#include "seplab/graph.hpp"

namespace seplab {

// A minimal separator is a set C with two components of G\C whose
// neighborhood is exactly C. On a disconnected graph the empty set
// qualifies; the definition is applied literally.

struct SeparatorRecord {
  VertexSet separator;
  std::vector<VertexSet> full_components;
  bool is_clique = false;
  bool is_minimal = false;
  bool is_proper = false;  // minimal and not a clique
};

/// Components D of G\C with N(D) = C, ordered by smallest member.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& c);

/// True iff G\C has at least two full components for C.
bool is_minimal_separator(const Graph& g, const VertexSet& c);

SeparatorRecord classify_separator(const Graph& g, const VertexSet& c);

/// Exhaustive subset scan; refuses graphs larger than `cap` vertices.
/// Output sorted lexicographically, as for all enumerators below.
std::vector<VertexSet> oracle_enumerate(const Graph& g, int cap = 16);

/// Seed-and-expand enumeration: seeds are neighborhoods of components of
/// G \ N[v] for every v; a separator S expands through each x in S with
/// the neighborhoods of components of G \ (S u N[x]); candidates failing
/// the minimality test are dropped; closure until fixpoint.
std::vector<VertexSet> expand_enumerate(const Graph& g);

/// The minimal separators that are cliques (filter over expand_enumerate).
std::vector<VertexSet> clique_minimal_separators(const Graph& g);

/// Emits N(X_A) n N(X_B) over all vertex-set pairs with |X_A|,|X_B| < k,
/// keeping those that are minimal separators. Always a subset of the
/// minimal separators; the full set when k = n+1.
std::vector<VertexSet> creature_bound_enumerate(const Graph& g, int k);

}  // namespace seplab

#endif
