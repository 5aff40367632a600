#ifndef ORBITALS_PERMUTATION_H_
#define ORBITALS_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitals/types.h"

namespace orbitals {

// A bijection of {1, ..., degree}, stored as its image table.
//
// Groups act on the right: Apply(p * q, x) == Apply(q, Apply(p, x)), i.e.
// x^(pq) = (x^p)^q.
class Permutation {
 public:
  // The identity of degree 0. Mostly useful as a placeholder.
  Permutation() = default;

  static Permutation Identity(std::size_t degree);

  // `images[i]` is the image of point i + 1. Throws DomainError unless the
  // table is a bijection of {1, ..., images.size()}.
  static Permutation FromImages(std::vector<Point> images);

  // Transposition (a, b) on `degree` points.
  static Permutation Transposition(std::size_t degree, Point a, Point b);

  std::size_t degree() const { return images_.size(); }
  std::span<const Point> images() const { return images_; }

  // Image of `point` (1-based). Throws DomainError if out of range.
  Point Apply(Point point) const;
  Point operator[](Point point) const { return images_[point - 1]; }

  Permutation Inverse() const;
  bool IsIdentity() const;
  bool Fixes(Point point) const { return (*this)[point] == point; }

  // Smallest point not fixed, if any.
  std::optional<Point> FirstMovedPoint() const;

  // Disjoint-cycle notation with comma separated points, fixed points
  // omitted: "(1,2)(3,4)"; the identity prints as "()".
  std::string ToCycleString() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images)
      : images_(std::move(images)) {}

  std::vector<Point> images_;
};

// Product under the right action: first `p`, then `q`.
Permutation Compose(const Permutation& p, const Permutation& q);
Permutation Inverse(const Permutation& p);
Point Apply(const Permutation& p, Point point);

// Parses a product of disjoint cycles such as "(1,2)(3,4)" or "()".
// Whitespace is ignored. A cycle written without commas, "(123)", is read
// digit by digit and is only accepted when degree < 10.
// Throws ParseError on malformed text, repeated points or points outside
// {1, ..., degree}.
Permutation ParseCycles(std::string_view text, std::size_t degree);

}  // namespace orbitals

#endif  // ORBITALS_PERMUTATION_H_
