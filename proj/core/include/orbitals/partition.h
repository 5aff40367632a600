#ifndef ORBITALS_PARTITION_H_
#define ORBITALS_PARTITION_H_

#include <cstddef>
#include <string>
#include <vector>

#include "orbitals/permutation.h"
#include "orbitals/types.h"

namespace orbitals {

// An ordered partition of {1, ..., degree}: nonempty, pairwise disjoint
// cells covering the domain. Points inside each cell are kept sorted; the
// order of the cells themselves is whatever the producer chose.
class OrderedPartition {
 public:
  OrderedPartition() = default;

  // Sorts each cell and validates. Throws DomainError on empty cells,
  // overlapping cells, points out of range or an incomplete cover.
  OrderedPartition(std::size_t degree, std::vector<PointSet> cells);

  // A single cell holding every point.
  static OrderedPartition Unit(std::size_t degree);
  // One singleton cell per point, ascending.
  static OrderedPartition Discrete(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<PointSet>& cells() const { return cells_; }
  const PointSet& cell(std::size_t index) const { return cells_[index]; }

  // Index of the cell containing `point`.
  std::size_t CellIndexOf(Point point) const { return cell_of_[point - 1]; }

  // True if every cell of *this lies inside some cell of `coarser`.
  bool IsRefinementOf(const OrderedPartition& coarser) const;

  // "[1,2,3|4,5]"
  std::string ToString() const;

  friend bool operator==(const OrderedPartition& a,
                         const OrderedPartition& b) {
    return a.degree_ == b.degree_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t degree_ = 0;
  std::vector<PointSet> cells_;
  std::vector<std::size_t> cell_of_;
};

// Generators of the stabilizer of `partition` in Sym(degree): for every cell
// c1 < c2 < ... < ck the adjacent transpositions (c1,c2), ..., (c(k-1),ck).
// Cells are visited in partition order. Empty for the discrete partition.
std::vector<Permutation> PartitionStabilizerGenerators(
    const OrderedPartition& partition);

}  // namespace orbitals

#endif  // ORBITALS_PARTITION_H_
