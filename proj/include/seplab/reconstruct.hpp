#ifndef SEPLAB_RECONSTRUCT_HPP
#define SEPLAB_RECONSTRUCT_HPP

#include <cstdint>
#include <vector>

#include "seplab/frames.hpp"
#include "seplab/graph.hpp"

namespace seplab {

/// Raised when an inclusion-minimal hitting or reachability set exceeds
/// two vertices, which cannot happen on class members.
class ClassViolation : public std::runtime_error {
 public:
  ClassViolation(const std::string& msg, std::vector<int> blocking)
      : std::runtime_error(msg), blockers(std::move(blocking)) {}
  std::vector<int> blockers;
};

/// Vertex set of G_F: everything except the neighbors of the six frame
/// anchors, the four primed slots excepted.
VertexSet restricted_universe(const Graph& g, const Frame& f);

/// G_F as a relabeled induced subgraph.
InducedSubgraph restricted_graph(const Graph& g, const Frame& f);

/// v is (c1,c2)-strong when c1 and c2 land in different components of
/// G \ N[v]; false whenever either end lies in N[v].
bool is_strong(const Graph& g, int v, int c1, int c2);
bool is_strong_within(const Graph& g, const VertexSet& universe, int v, int c1,
                      int c2);

/// W(F): two rounds of strong-vertex extraction inside G_F. Contains every
/// heavy vertex of the frame that avoids the six anchors, and only
/// separator vertices. Empty when the frame pins a hole of length <= 6.
VertexSet candidate_heavy_W(const Graph& g, const Frame& f);

/// Rebuilds a hole with frame f: both arcs completed by shortest paths
/// through G_F \ W avoiding the frame vertices. The result is validated
/// against f; failure raises an error naming the cause.
FramedHole construct_F_hole(const Graph& g, const Frame& f, const VertexSet& w);

/// Hitting slots: up to two vertices per side (ascending), possibly empty.
struct M1 {
  std::vector<int> x;  // in L, covering the L-adjacent light vertices
  std::vector<int> y;  // in R, covering the R-adjacent light vertices
};

/// Reachability slots: up to two targets per side (ascending).
struct M2 {
  std::vector<int> l;  // in C_L n L, reachable from (C_R \ C_L) n C through D
  std::vector<int> r;  // in C_R n R, reachable from (C_L \ C_R) n C through D
};

/// Inclusion-minimal hitting sets (greedy removal in ascending id) for the
/// L-adjacent and R-adjacent light separator vertices, classified against
/// the constructed hole h.
M1 compute_M1(const Graph& g, const VertexSet& c, const VertexSet& l,
              const VertexSet& r, const FramedHole& h, const Frame& f);

struct SideSets {
  VertexSet c_l;     // N(H_L* u {x1,x2})
  VertexSet c_r;     // N(H_R* u {y1,y2})
  VertexSet c1_set;  // C_L n C_R
  VertexSet d;       // V \ (H u C_L u C_R)
};

SideSets side_sets(const Graph& g, const FramedHole& h, const M1& m1);

/// Inclusion-minimal target sets through D for the one-sided separator
/// vertices (verification mode: C known).
M2 compute_M2(const Graph& g, const VertexSet& c, const VertexSet& c_l,
              const VertexSet& c_r, const VertexSet& d);

struct ReconstructionTrace {
  Frame frame{};
  VertexSet w;
  FramedHole hole;
  M1 m1;
  M2 m2;
  SideSets sides;
  VertexSet c2_set;
  VertexSet c3_set;
  VertexSet result;
};

/// C(F, M1, M2) = C1 u C2 u C3, rebuilt from the tuple alone.
VertexSet reconstruct_separator(const Graph& g, const Frame& f, const M1& m1,
                                const M2& m2);
ReconstructionTrace reconstruct_with_trace(const Graph& g, const Frame& f,
                                           const M1& m1, const M2& m2);

struct RoundtripReport {
  bool equal = false;
  VertexSet expected;
  ReconstructionTrace trace;
};

/// Computes the optimal frame of C, derives M1(C) and M2(C), reconstructs,
/// and compares. C must be a proper separator.
RoundtripReport verify_roundtrip(const Graph& g, const VertexSet& c);

enum class EnumMode { FullTuples, VerifiedRoundtrip, Budgeted };

struct EnumOptions {
  EnumMode mode = EnumMode::VerifiedRoundtrip;
  int n_cap = 5;             // FullTuples refusal threshold
  long sample_count = 10000;  // Budgeted
  uint64_t seed = 0;          // Budgeted
};

/// Clique minimal separators plus the proper separators produced by the
/// chosen mode. FullTuples sweeps every frame/M1/M2 combination and keeps
/// the candidates that test minimal; VerifiedRoundtrip re-derives each
/// proper separator from its own tuple and insists on equality; Budgeted
/// samples tuples deterministically from the seed.
std::vector<VertexSet> enumerate_all(const Graph& g, const EnumOptions& options);

}  // namespace seplab

#endif
