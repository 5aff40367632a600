#ifndef ORBITALS_REFINE_H_
#define ORBITALS_REFINE_H_

#include <cstddef>
#include <vector>

#include "orbitals/orbital_graph.h"
#include "orbitals/partition.h"
#include "orbitals/perm_group.h"
#include "orbitals/types.h"

namespace orbitals {

struct RefinementTrace {
  OrderedPartition input;
  BasePair base_pair;
  OrderedPartition output;
  // Signature passes run, including the final one that found a fixpoint.
  std::size_t rounds = 0;
  // output.size() - input.size()
  std::size_t split_count = 0;
};

// Moves `point` into a singleton cell placed just before the rest of its old
// cell. Returns the partition unchanged when `point` is already alone.
// Throws DomainError if `point` is outside 1..degree.
OrderedPartition IndividualizePoint(const OrderedPartition& partition,
                                    Point point);

// Splits cells by vertex signature until nothing changes. The signature of v
// is, for every current cell C, the pair (arcs from v into C, arcs from C
// into v). A split cell is replaced in place by its pieces, ordered by
// signature lexicographically. Throws DomainError on degree mismatch.
RefinementTrace RefineByGraph(const OrderedPartition& partition,
                              const OrbitalGraph& graph);

// Orbital graphs of the enumerated base-pairs that the fast test does not
// reject as futile, in base-pair order. Futile graphs are never built.
std::vector<OrbitalGraph> SelectUsefulGraphs(const PermGroup& group);

}  // namespace orbitals

#endif  // ORBITALS_REFINE_H_
