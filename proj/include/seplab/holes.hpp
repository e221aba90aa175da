#ifndef SEPLAB_HOLES_HPP
#define SEPLAB_HOLES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seplab/graph.hpp"

namespace seplab {

/// Induced cycle in canonical rotation: smallest vertex first, then the
/// smaller of its two cycle neighbors.
struct Hole {
  std::vector<int> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
  bool contains(int v) const;
  int position_of(int v) const;  // -1 when absent
  VertexSet vertex_set() const { return VertexSet(cycle); }
};

/// Validates that `cycle` is an induced cycle of g and canonicalizes it.
Hole make_hole(const Graph& g, std::vector<int> cycle);

struct HoleList {
  std::vector<Hole> holes;
  bool truncated = false;
};

/// All holes with length in [min_len, max_len], canonical and deduplicated,
/// DFS order (ascending anchor vertex). Stops at `limit` holes and sets the
/// truncation flag.
HoleList enumerate_holes(const Graph& g, int min_len = 4, int max_len = 1 << 30,
                         long limit = 200000);

enum class RoleKind {
  NoNeighbor,
  Pendant,
  Cap,
  Clone,
  // Minor vertex with exactly two neighbors at cycle distance two. Never
  // occurs on class members; kept so arbitrary inputs classify totally.
  NonadjacentPairMinor,
  Major,
};

struct HoleRole {
  RoleKind kind = RoleKind::NoNeighbor;
  std::vector<int> hole_neighbors;  // ascending ids
  int anchor = -1;                  // pendant: its neighbor; clone: the cloned vertex
  bool is_hub = false;              // meaningful for Major only
  bool is_gem_center = false;       // meaningful for Major only
};

std::string role_name(RoleKind kind);

/// Role of an outside vertex v against hole H. Minor means the hole
/// neighborhood fits inside a three-vertex subpath of H.
HoleRole classify_vertex(const Graph& g, const Hole& h, int v);

/// The cyclic decomposition of H into u-sectors (subpaths between
/// consecutive neighbors of u with u-free interiors), listed along the
/// hole starting from u's smallest-id neighbor. u needs >= 2 neighbors.
std::vector<Path> sectors(const Graph& g, const Hole& h, int u);

/// One extended neighborhood per w-sector: the sector plus those
/// neighbors of its endpoints in the rest of H that w is adjacent to.
/// w must be major for H.
std::vector<Path> extended_neighborhoods(const Graph& g, const Hole& h, int w);

/// True iff no extended neighborhood of w contains both a and b.
bool are_distant(const Graph& g, const Hole& h, int w, int a, int b);

enum class Nesting { Nested, StrictlyNested, Cross };

/// Nested means some pair a,b of hole vertices splits H into one arc
/// holding all of u's neighbors and the other holding all of v's.
Nesting nesting(const Graph& g, const Hole& h, int u, int v);

/// One of the eight adjacency patterns a crossing non-adjacent major pair
/// can realize. hole_order is the relabeling h_1..h_k used; split_index is
/// the i parameter of patterns 5..8 (-1 otherwise).
struct MncConfig {
  int config_id = 0;
  int u = -1;
  int v = -1;
  std::vector<int> hole_order;
  int split_index = -1;
};

/// Lowest-numbered matching configuration, or absent. u, v must be outside
/// H, non-adjacent, and both major.
std::optional<MncConfig> mnc_classify(const Graph& g, const Hole& h, int u, int v);

/// A pair (a, b) certifying that path p is significant for (H, w):
/// a adjacent to the first path vertex but not to w, b adjacent to the
/// last, and a, b distant with respect to w. First pair in ascending
/// order, or absent.
std::optional<std::pair<int, int>> significant_witness(const Graph& g, const Hole& h,
                                                       int w, const Path& p);

struct TheoremReport {
  bool applicable = false;
  std::string skip_reason;
  long pairs_checked = 0;
  std::vector<std::pair<int, int>> violations;
};

/// Searches for a significant path that avoids N[w]: for every distant
/// hole pair with one side outside N(w), a connectivity query between the
/// attachment sets inside G \ N[w]. Connectivity there is exactly a
/// counterexample, so an empty violation list verifies the statement.
/// Requires hole length > 6, w major, and the hub side condition; skips
/// with a reason otherwise. Membership is checked unless a verdict is
/// supplied in member_hint.
TheoremReport verify_major_neighbor_theorem(const Graph& g, const Hole& h, int w,
                                            std::optional<bool> member_hint = {},
                                            int member_cap = 14);

/// Aggregate of verify_major_neighbor_theorem over every eligible major
/// vertex of h; vacuously applicable when there are none.
TheoremReport verify_major_neighbor_theorem_all(const Graph& g, const Hole& h,
                                                std::optional<bool> member_hint = {},
                                                int member_cap = 14);

struct StarCutsetWitness {
  VertexSet cutset;  // contains the center, center complete to the rest
  int center = -1;
  int u = -1;
  int v = -1;
};

/// Star cutset centered at w, found by testing X = N[w] \ {u, v} over all
/// candidate separated pairs; first witness in ascending pair order.
std::optional<StarCutsetWitness> star_cutset_witness(const Graph& g, int w);

}  // namespace seplab

#endif
