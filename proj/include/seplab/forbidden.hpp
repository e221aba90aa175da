#ifndef SEPLAB_FORBIDDEN_HPP
#define SEPLAB_FORBIDDEN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seplab/graph.hpp"

namespace seplab {

enum class StructureKind {
  Theta,
  Pyramid,
  Prism,
  Turtle,
  Cube,
  Creature3,
  ImmatureCreature,
};

std::string kind_name(StructureKind kind);

/// Certificate for a detected structure: the vertex set plus named roles
/// (endpoints, apex and triangle, centers, side sets, ...). The induced
/// subgraph on `vertices` is exactly a structure of `kind`, re-checkable
/// with recognize_structure.
struct ForbiddenWitness {
  StructureKind kind;
  VertexSet vertices;
  std::map<std::string, std::vector<int>> roles;
};

/// Decides whether the whole graph h IS a structure of the given kind and
/// returns the role annotation, or absent.
std::optional<ForbiddenWitness> recognize_structure(const Graph& h, StructureKind kind);

struct SearchResult {
  std::optional<ForbiddenWitness> witness;
  bool exhaustive = false;
};

/// Exact induced-substructure search. Theta, pyramid, prism, and turtle
/// are anchored on enumerated holes (a hole plus an attachment pattern is
/// exactly one structure), so the search is exhaustive whenever hole
/// enumeration completes within hole_budget. The cube is found by scanning
/// 8-vertex subsets. First witness in scan order is returned.
SearchResult find_structure(const Graph& g, StructureKind kind,
                            long hole_budget = 200000);

enum class MemberStatus { Member, NonMember, Unknown };

struct MemberVerdict {
  MemberStatus status = MemberStatus::Unknown;
  std::optional<ForbiddenWitness> witness;  // set for NonMember
  bool exhaustive = false;
};

/// Conjunction of the four structure searches; Unknown when every search
/// came back empty but at least one was not exhaustive.
MemberVerdict is_class_member(const Graph& g, long hole_budget = 200000);

/// Searches for an induced 3-creature: six matched attachment vertices
/// plus two connected, mutually anticomplete side sets. Exhaustive for
/// n <= cap; beyond that only small side sets are tried.
SearchResult find_3creature(const Graph& g, int cap = 14);

/// Searches for an induced immature k-creature: 2k vertices split into
/// halves whose cross edges are exactly a perfect matching.
SearchResult find_immature_kcreature(const Graph& g, int k);

}  // namespace seplab

#endif
