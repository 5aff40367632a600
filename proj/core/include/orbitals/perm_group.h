#ifndef ORBITALS_PERM_GROUP_H_
#define ORBITALS_PERM_GROUP_H_

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "orbitals/partition.h"
#include "orbitals/permutation.h"
#include "orbitals/stabilizer_chain.h"
#include "orbitals/types.h"

namespace orbitals {

// A permutation group on {1, ..., degree}, given by generators.
//
// The stabilizer chain is built on first use. PermGroup is a cheap-to-copy
// value: copies share the cached chain, and the first access is guarded by
// std::call_once so concurrent readers are safe.
class PermGroup {
 public:
  // An empty generator list denotes the trivial group; the identity is then
  // stored as the sole generator so generators() is never empty.
  // Throws DomainError if degree is 0 or a generator has another degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup Trivial(std::size_t degree);
  // Natural action of Sym(degree), generated by (1,2) and (1,2,...,n).
  static PermGroup Symmetric(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabilizerChain& chain() const;
  BigInt Order() const;
  bool Contains(const Permutation& element) const;

  // A fresh (uncached) chain whose base begins with `base_prefix`.
  StabilizerChain ChainWithBase(std::span<const Point> base_prefix) const;

 private:
  struct ChainCache {
    std::once_flag once;
    std::optional<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

// alpha^H, sorted. Breadth-first closure under the generators.
PointSet Orbit(const PermGroup& group, Point point);

// The H-orbits, cells ordered by their minimal element.
OrderedPartition OrbitPartition(const PermGroup& group);

bool IsTransitive(const PermGroup& group);

// H_point, read off a stabilizer chain whose base starts at `point`.
PermGroup PointStabilizer(const PermGroup& group, Point point);

BigInt GroupOrder(const PermGroup& group);

// Largest k such that the group is k-transitive on its domain; 0 when it is
// not transitive. The natural Sym(n) has transitivity degree n.
std::size_t TransitivityDegree(const PermGroup& group);

// Some h in H with from[i]^h == to[i] for every i, or nullopt when no such
// element exists. Both tuples must have equal length and distinct entries.
std::optional<Permutation> FindElementMapping(const PermGroup& group,
                                              std::span<const Point> from,
                                              std::span<const Point> to);

}  // namespace orbitals

#endif  // ORBITALS_PERM_GROUP_H_
