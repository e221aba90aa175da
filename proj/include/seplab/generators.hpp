#ifndef SEPLAB_GENERATORS_HPP
#define SEPLAB_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seplab/graph.hpp"

namespace seplab {

// Deterministic constructors for the named graph families. Vertex layouts
// are documented per generator and are part of the fixture contract.

/// Hub vertices a=0, b=k+1; spokes a_i=1..k, b_i=k+2..2k+1; edges a-a_i,
/// b-b_i, a_i-b_i.
Graph k_theta(int k);

/// Apex a=0; a_i=1..k; b_i=k+1..2k forming a clique; edges a-a_i, a_i-b_i.
Graph k_pyramid(int k);

/// Cliques {0..k-1} and {k..2k-1} joined by the matching i <-> k+i.
Graph k_prism(int k);

/// Two a-b paths forming a hole, plus k center pairs (x_i, y_i); x_i sees
/// the i-th consecutive interior triple of the first path, y_i of the
/// second, and x_i y_i is an edge. Attachment triples are disjoint and
/// ordered from a, so centers are nested. extra1/extra2 append additional
/// interior vertices after the triples of each path.
/// Layout: a=0, first path interior 1..3k+extra1, b=3k+extra1+1, second
/// path interior follows, then x_1..x_k, y_1..y_k.
Graph k_turtle(int k, int extra1 = 0, int extra2 = 0);

/// Ladder of k triangle rungs, transcribed vertex-by-vertex from its
/// drawing: bottom rail b0-b1-b2; rung i has a path L_i-M_i-R_i ending in
/// a triangle R_i-T_i-U_i; T_1 hangs from b2 and T_{i+1} from U_i; the
/// left column chains L_i-I_i-L_{i+1} through one intermediate; a top rail
/// t0-t1-t2 closes L_k and U_k.
Graph k_ladder(int k);

/// The 3-regular 8-vertex graph: hexagon 0..5 plus 6 adj {0,2,4} and
/// 7 adj {1,3,5}.
Graph cube();

Graph cycle(int n);
Graph complete(int n);

Graph min_theta();    // K_{2,3}
Graph min_pyramid();  // 6 vertices, one one-edge leg
Graph min_prism();    // = k_prism(3)
Graph min_turtle();   // 6-hole plus the two centers

/// Twin-cap gadget: 8-cycle 0..7 plus x=8 adj {1,0}, y=9 adj {7,0},
/// c3=10 adj {x,y}.
Graph g_tc();

/// 10-cycle 0..9 plus the hub w=10 adj {2,3,7,8}.
Graph g_hub();

/// Erdos-Renyi sample; pair (u,v), u<v, scanned in ascending order, one
/// 32-bit draw per pair, edge iff draw < p * 2^32. Deterministic per seed.
Graph random_graph(int n, double p, uint64_t seed);

/// First graph among `attempts` samples (attempt t uses seed + t) whose
/// class membership verifies exhaustively; absent if none does.
std::optional<Graph> random_class_member(int n, double p, uint64_t seed,
                                         int attempts, int cap = 14);

struct FamilySpec {
  std::string family;
  int k = 0;
  std::vector<int> extras;
};

Graph generate(const FamilySpec& spec);

}  // namespace seplab

#endif
