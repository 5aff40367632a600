#include "orbitals/partition.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "orbitals/errors.h"

namespace orbitals {

namespace {
constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
}  // namespace

OrderedPartition::OrderedPartition(std::size_t degree,
                                   std::vector<PointSet> cells)
    : degree_(degree), cells_(std::move(cells)), cell_of_(degree, kUnassigned) {
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    PointSet& cell = cells_[c];
    if (cell.empty()) ThrowDomainError("partition has an empty cell");
    std::sort(cell.begin(), cell.end());
    for (Point p : cell) {
      if (p < 1 || p > degree_) {
        ThrowDomainError("partition point " + std::to_string(p) +
                         " outside 1.." + std::to_string(degree_));
      }
      if (cell_of_[p - 1] != kUnassigned) {
        ThrowDomainError("point " + std::to_string(p) +
                         " lies in two partition cells");
      }
      cell_of_[p - 1] = c;
    }
  }
  for (std::size_t i = 0; i < degree_; ++i) {
    if (cell_of_[i] == kUnassigned) {
      ThrowDomainError("point " + std::to_string(i + 1) +
                       " is not covered by the partition");
    }
  }
}

OrderedPartition OrderedPartition::Unit(std::size_t degree) {
  PointSet all(degree);
  for (std::size_t i = 0; i < degree; ++i) all[i] = static_cast<Point>(i + 1);
  return OrderedPartition(degree, {std::move(all)});
}

OrderedPartition OrderedPartition::Discrete(std::size_t degree) {
  std::vector<PointSet> cells;
  cells.reserve(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    cells.push_back({static_cast<Point>(i + 1)});
  }
  return OrderedPartition(degree, std::move(cells));
}

bool OrderedPartition::IsRefinementOf(const OrderedPartition& coarser) const {
  if (coarser.degree_ != degree_) return false;
  for (const PointSet& cell : cells_) {
    const std::size_t target = coarser.CellIndexOf(cell.front());
    for (Point p : cell) {
      if (coarser.CellIndexOf(p) != target) return false;
    }
  }
  return true;
}

std::string OrderedPartition::ToString() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (c > 0) out << '|';
    for (std::size_t i = 0; i < cells_[c].size(); ++i) {
      if (i > 0) out << ',';
      out << cells_[c][i];
    }
  }
  out << ']';
  return out.str();
}

std::vector<Permutation> PartitionStabilizerGenerators(
    const OrderedPartition& partition) {
  std::vector<Permutation> generators;
  for (const PointSet& cell : partition.cells()) {
    for (std::size_t i = 1; i < cell.size(); ++i) {
      generators.push_back(Permutation::Transposition(partition.degree(),
                                                      cell[i - 1], cell[i]));
    }
  }
  return generators;
}

}  // namespace orbitals
