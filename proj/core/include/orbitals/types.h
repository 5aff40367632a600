#ifndef ORBITALS_TYPES_H_
#define ORBITALS_TYPES_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace orbitals {

// Points of the permutation domain are 1-based: {1, ..., degree}.
using Point = std::uint32_t;

// An ordered pair of points. Used both for arcs of a digraph and for the
// base-pair an orbital graph is generated from.
struct Arc {
  Point from = 0;
  Point to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

using BasePair = Arc;

// A sorted, duplicate-free set of points.
using PointSet = std::vector<Point>;

}  // namespace orbitals

#endif  // ORBITALS_TYPES_H_
