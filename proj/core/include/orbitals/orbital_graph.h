#ifndef ORBITALS_ORBITAL_GRAPH_H_
#define ORBITALS_ORBITAL_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orbitals/partition.h"
#include "orbitals/perm_group.h"
#include "orbitals/types.h"

namespace orbitals {

// The orbital graph of a group H with base-pair (alpha, beta): vertex set
// {1, ..., degree}, arc set {(alpha^h, beta^h) : h in H}.
//
// Arcs are kept sorted lexicographically, without duplicates or loops, next
// to per-vertex sorted out- and in-neighbour lists.
class OrbitalGraph {
 public:
  // Closure of {(alpha, beta)} under the generators of `group`, breadth first
  // over pairs. Throws DomainError if alpha == beta or either is out of range.
  static OrbitalGraph Build(const PermGroup& group, Point alpha, Point beta);

  // Wraps an explicit arc list, e.g. one read back from JSON. The arcs are
  // sorted; duplicates, loops, out-of-range points, or a base-pair missing
  // from the arcs throw DomainError. No group closure is checked.
  static OrbitalGraph FromArcs(std::size_t degree, BasePair base_pair,
                               std::vector<Arc> arcs);

  std::size_t degree() const { return degree_; }
  BasePair base_pair() const { return base_pair_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  const std::vector<Point>& OutNeighbours(Point v) const {
    return out_adj_[v - 1];
  }
  const std::vector<Point>& InNeighbours(Point v) const {
    return in_adj_[v - 1];
  }
  std::size_t OutDegree(Point v) const { return out_adj_[v - 1].size(); }
  std::size_t InDegree(Point v) const { return in_adj_[v - 1].size(); }

  bool HasArc(Point from, Point to) const;
  bool HasArc(Arc arc) const { return HasArc(arc.from, arc.to); }

 private:
  OrbitalGraph(std::size_t degree, BasePair base_pair, std::vector<Arc> arcs);

  std::size_t degree_ = 0;
  BasePair base_pair_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Point>> out_adj_;
  std::vector<std::vector<Point>> in_adj_;
  // Row-major degree x degree arc indicator.
  std::vector<std::uint8_t> matrix_;
};

// |alpha^H| * |beta^(H_alpha)|, without building the graph.
std::uint64_t ArcCountFormula(const PermGroup& group, Point alpha, Point beta);

// True iff (beta, alpha) is an arc, equivalently every arc's reverse is one.
bool IsSelfPaired(const OrbitalGraph& graph);

// Vertices with neither outgoing nor incoming arcs.
PointSet IsolatedVertices(const OrbitalGraph& graph);

// Weakly connected components. Cells with two or more vertices come first,
// ordered by minimal element, followed by the isolated vertices as ascending
// singletons.
OrderedPartition WeakComponents(const OrbitalGraph& graph);

// An element of `group` carrying the component that contains the base-pair
// onto `component` (which must be a component of `graph` with at least two
// vertices), found by tracing the base-pair to the component's
// lexicographically first arc through a stabilizer chain. The returned
// element is checked to map vertices and arcs bijectively; nullopt if the
// trace or the check fails.
std::optional<Permutation> ComponentMapping(const OrbitalGraph& graph,
                                            const PermGroup& group,
                                            const PointSet& component);

// True iff ComponentMapping succeeds for every component of size >= 2.
// Throws DomainError when `graph` is not an orbital graph of `group`
// (different degree, or an arc set not closed under the generators).
bool ComponentsPairwiseIsomorphic(const OrbitalGraph& graph,
                                  const PermGroup& group);

// One base-pair (alpha, beta) per H_alpha-orbit beta^(H_alpha) != {alpha},
// for every H-orbit representative alpha. Representatives are minimal
// points; output is sorted.
std::vector<BasePair> EnumerateBasePairs(const PermGroup& group);

// EnumerateBasePairs with later pairs dropped when their arc set equals the
// arc set of an earlier pair.
std::vector<BasePair> EnumerateDistinctBasePairs(const PermGroup& group);

// Arc-set equality. Throws DomainError on degree mismatch.
bool GraphsEqual(const OrbitalGraph& a, const OrbitalGraph& b);

// Throws DomainError unless `graph` has the degree of `group` and its arc
// set is mapped into itself by every generator.
void CheckGraphOfGroup(const OrbitalGraph& graph, const PermGroup& group);

}  // namespace orbitals

#endif  // ORBITALS_ORBITAL_GRAPH_H_
