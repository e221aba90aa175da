#ifndef SEPLAB_FRAMES_HPP
#define SEPLAB_FRAMES_HPP

#include <array>
#include <optional>
#include <vector>

#include "seplab/graph.hpp"
#include "seplab/holes.hpp"

namespace seplab {

/// The ten anchor vertices read off a separator hole: the two separator
/// ends, their hole neighbors on each side, and those neighbors' next
/// vertices along the hole. When a side has a single interior vertex all
/// four of its slots collapse onto it.
struct Frame {
  int c1, c2;
  int l1p, l1, r1, r1p;
  int l2p, l2, r2, r2p;

  std::array<int, 10> tuple() const {
    return {c1, c2, l1p, l1, r1, r1p, l2p, l2, r2, r2p};
  }
  friend bool operator==(const Frame& a, const Frame& b) {
    return a.tuple() == b.tuple();
  }
  friend bool operator<(const Frame& a, const Frame& b) {
    return a.tuple() < b.tuple();
  }
};

/// Checks the frame slot rules against g; throws ContractError on failure.
void validate_frame(const Graph& g, const Frame& f);

/// A hole split at its two separator ends, both arcs listed from c1 to c2.
struct FramedHole {
  std::vector<int> left;
  std::vector<int> right;

  int c1() const { return left.front(); }
  int c2() const { return left.back(); }
  std::vector<int> left_interior() const;
  std::vector<int> right_interior() const;
  VertexSet vertex_set() const;
  Hole to_hole(const Graph& g) const;
};

/// Frame read positionally off a framed hole.
Frame read_frame(const FramedHole& h);

/// Length of the shortest c1-c2 path with interior inside `side`, which
/// must be a full component of the separator c.
std::optional<int> side_distance(const Graph& g, const VertexSet& c,
                                 const VertexSet& side, int c1, int c2);

struct Richness {
  bool rich = false;
  std::vector<std::pair<int, int>> long_pairs;  // ascending, dist >= 4
  std::pair<int, int> best_pair{-1, -1};        // poor mode: argmax distance
  int best_distance = -1;
};

/// Rich iff some non-adjacent separator pair has side distance >= 4.
/// C must be a proper separator.
Richness classify_richness(const Graph& g, const VertexSet& c);

/// Hole from the two BFS-shortest c1-c2 paths through L and through R.
FramedHole canonical_hole(const Graph& g, const VertexSet& c, const VertexSet& l,
                          const VertexSet& r, int c1, int c2);

/// Frame of a hole through c1, c2 (non-adjacent, both on the hole); the
/// arc holding the smaller minimum interior vertex takes the l-side slots.
Frame frame_of(const Graph& g, const Hole& h, int c1, int c2);

/// v is heavy for (H, c1, c2) when it is major for H and c1, c2 are
/// distant with respect to it. Heavy vertices necessarily lie in the
/// separator. Returns false for vertices on the hole.
bool is_heavy(const Graph& g, const Hole& h, int c1, int c2, int v);

/// Number of heavy vertices of a canonical hole realized from f alone
/// (via the restricted graph and its strong-vertex set, as in the
/// reconstruction pipeline). Throws when no hole realizes f.
int potential(const Graph& g, const Frame& f);

/// Same count, realized inside known sides L, R.
int potential_within(const Graph& g, const Frame& f, const VertexSet& l,
                     const VertexSet& r);

/// Side-restricted realization: completes both arcs with shortest paths
/// whose interiors avoid the closed neighborhoods of the four unprimed
/// anchors; absent when a side admits no completion.
std::optional<FramedHole> realize_frame_within(const Graph& g, const Frame& f,
                                               const VertexSet& l, const VertexSet& r);

/// Completes one arc c1-a1-(a1p..a2p)-a2-c2, interior restricted to
/// `allowed_interior`, honoring the collapsed slot patterns; absent when
/// the slots are inconsistent or no connecting path exists.
std::optional<std::vector<int>> complete_frame_arc(const Graph& g, int c1, int c2,
                                                   int a1, int a1p, int a2, int a2p,
                                                   const VertexSet& allowed_interior);

/// True when both arcs are induced, mutually anticomplete except at the
/// shared ends, and read back exactly the given frame.
bool framed_hole_matches(const Graph& g, const FramedHole& h, const Frame& f);

/// All frames over (c1, c2) realizable inside L and R, sorted by tuple.
std::vector<Frame> enumerate_feasible_frames(const Graph& g, const VertexSet& c,
                                             const VertexSet& l, const VertexSet& r,
                                             int c1, int c2);

/// Rich: the maximum-potential feasible long frame (lexicographic
/// tie-break). Poor: the canonical-hole frame of the farthest pair.
Frame optimal_frame(const Graph& g, const VertexSet& c);

struct Butterfly {
  int center = -1;
  Path left_wing;   // center first
  Path right_wing;  // center first
  bool l_end = false;
  bool l_adjacent = false;
  bool r_end = false;
  bool r_adjacent = false;
  bool central = false;
};

/// Shortest wings from a light separator vertex c3 into both hole-side
/// interiors, plus its position classification (existence-based; END and
/// ADJACENT coincide with wing lengths 0 and 1).
Butterfly build_butterfly(const Graph& g, const VertexSet& c, const VertexSet& l,
                          const VertexSet& r, const FramedHole& h, int c3);

}  // namespace seplab

#endif
