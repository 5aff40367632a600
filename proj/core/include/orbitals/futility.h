#ifndef ORBITALS_FUTILITY_H_
#define ORBITALS_FUTILITY_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "orbitals/orbital_graph.h"
#include "orbitals/partition.h"
#include "orbitals/perm_group.h"
#include "orbitals/permutation.h"
#include "orbitals/types.h"

namespace orbitals {

// An orbital graph is futile when the stabilizer G_P of the ordered orbit
// partition P of H acts on it by graph automorphisms. Such a graph cannot
// refine P any further.

enum class FutilityShape {
  kCompleteOnOrbit,
  kCompleteBipartite,
  kNotFutile,
};

std::string_view ToString(FutilityShape shape);

// A generator of G_P together with an arc it sends to a non-arc.
struct FutilityWitness {
  Permutation permutation;
  Arc violated_arc;
  Arc image;
};

struct FutilityVerdict {
  bool futile = false;
  FutilityShape shape = FutilityShape::kNotFutile;
  // Vertex set of the unique component of size >= 2, when futile.
  PointSet component;
  // Start and end sets of a complete bipartite component.
  PointSet start_vertices;
  PointSet end_vertices;
  // Only set when not futile.
  std::optional<FutilityWitness> witness;
};

// Decides futility from orbit lengths alone:
//   beta in alpha^H:     |beta^(H_alpha)| == |alpha^H| - 1
//   beta not in alpha^H: |beta^(H_alpha)| == |beta^H|
bool IsFutileFast(const PermGroup& group, Point alpha, Point beta);

// Decides futility from the shape of a built graph: exactly one weak
// component with two or more vertices, and that component is a complete
// digraph or a complete bipartite digraph S x E. A non-futile verdict carries
// a witness from the generators of G_P.
FutilityVerdict IsFutileStructural(const OrbitalGraph& graph,
                                   const PermGroup& group);

// Decides futility by definition: every generator of G_P must map the arc
// set onto itself.
bool IsFutileOracle(const OrbitalGraph& graph, const PermGroup& group);

// First arc violation over the generators of the orbit-partition stabilizer:
// cells in partition order, transpositions ascending, arcs lexicographic.
std::optional<FutilityWitness> FindFutilityWitness(const OrbitalGraph& graph,
                                                   const PermGroup& group);

// For beta outside alpha^H: true iff H_alpha is transitive on beta^H.
// Throws DomainError if beta lies in alpha^H.
bool FutilityByStabilizerTransitivity(const PermGroup& group, Point alpha,
                                      Point beta);

struct ArcCountBounds {
  // n(n-2) if beta in alpha^H, else min(n(m-1), m(n-1)), with
  // n = |alpha^H|, m = |beta^H|.
  std::int64_t threshold = 0;
  std::uint64_t arc_count = 0;
  // arc_count > threshold; sufficient for futility, not necessary.
  bool exceeds = false;
};

ArcCountBounds ComputeArcCountBounds(const PermGroup& group, Point alpha,
                                     Point beta);

// For a transitive group: true iff it is 2-transitive, in which case every
// orbital graph is futile; otherwise none is. Throws DomainError if the
// group is not transitive.
bool TransitiveGroupFutility(const PermGroup& group);

}  // namespace orbitals

#endif  // ORBITALS_FUTILITY_H_
