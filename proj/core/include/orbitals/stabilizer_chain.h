#ifndef ORBITALS_STABILIZER_CHAIN_H_
#define ORBITALS_STABILIZER_CHAIN_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbitals/permutation.h"
#include "orbitals/types.h"

namespace orbitals {

using BigInt = boost::multiprecision::cpp_int;

// A base and strong generating set with explicit transversals, built by the
// deterministic Schreier-Sims algorithm.
//
// Level i describes G^(i), the pointwise stabilizer of base points
// b_0, ..., b_(i-1). Its strong generators are those fixing all earlier base
// points; its fundamental orbit is b_i^(G^(i)).
class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    // Fundamental orbit in discovery order (breadth first).
    std::vector<Point> orbit;
    // transversal[x - 1] maps base_point to x, when x is in the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };

  // Builds a chain for <generators> acting on `degree` points. The base
  // starts with `base_prefix` verbatim (redundant points are kept so callers
  // can read stabilizer levels for them); further base points are the
  // smallest points moved by whichever generator or sifted residue first
  // needs one.
  static StabilizerChain Build(std::size_t degree,
                               std::span<const Permutation> generators,
                               std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const std::vector<Level>& levels() const { return levels_; }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> Base() const;

  // Product of fundamental orbit lengths.
  BigInt Order() const;

  // Sifts `element` through the chain; true iff the residue is the identity.
  bool Contains(const Permutation& element) const;

  // Generators of G^(i). For i == depth() this is the trivial group and the
  // result is empty.
  std::vector<Permutation> StabilizerGenerators(std::size_t i) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace orbitals

#endif  // ORBITALS_STABILIZER_CHAIN_H_
