#include "orbitals/perm_group.h"

#include <algorithm>
#include <numeric>

#include "orbitals/errors.h"

namespace orbitals {

namespace {

void CheckPoint(const PermGroup& group, Point point) {
  if (point < 1 || point > group.degree()) {
    ThrowDomainError("point " + std::to_string(point) + " outside 1.." +
                     std::to_string(group.degree()));
  }
}

// Points reachable from `start` under `generators`, in discovery order.
std::vector<Point> OrbitClosure(std::size_t degree,
                                const std::vector<Permutation>& generators,
                                Point start) {
  std::vector<bool> seen(degree + 1, false);
  std::vector<Point> orbit{start};
  seen[start] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const Permutation& g : generators) {
      const Point y = g[orbit[head]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree),
      generators_(std::move(generators)),
      cache_(std::make_shared<ChainCache>()) {
  if (degree_ == 0) ThrowDomainError("group degree must be positive");
  for (const Permutation& g : generators_) {
    if (g.degree() != degree_) {
      ThrowDomainError("generator " + g.ToCycleString() + " has degree " +
                       std::to_string(g.degree()) + ", expected " +
                       std::to_string(degree_));
    }
  }
  if (generators_.empty()) generators_.push_back(Permutation::Identity(degree));
}

PermGroup PermGroup::Trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::Symmetric(std::size_t degree) {
  std::vector<Permutation> generators;
  if (degree >= 2) {
    generators.push_back(Permutation::Transposition(degree, 1, 2));
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<Point>((i + 1) % degree + 1);
    }
    if (degree > 2) {
      generators.push_back(Permutation::FromImages(std::move(images)));
    }
  }
  return PermGroup(degree, std::move(generators));
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = StabilizerChain::Build(degree_, generators_);
  });
  return *cache_->chain;
}

BigInt PermGroup::Order() const { return chain().Order(); }

bool PermGroup::Contains(const Permutation& element) const {
  return chain().Contains(element);
}

StabilizerChain PermGroup::ChainWithBase(
    std::span<const Point> base_prefix) const {
  return StabilizerChain::Build(degree_, generators_, base_prefix);
}

PointSet Orbit(const PermGroup& group, Point point) {
  CheckPoint(group, point);
  PointSet orbit = OrbitClosure(group.degree(), group.generators(), point);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

OrderedPartition OrbitPartition(const PermGroup& group) {
  std::vector<bool> covered(group.degree() + 1, false);
  std::vector<PointSet> cells;
  for (Point p = 1; p <= group.degree(); ++p) {
    if (covered[p]) continue;
    PointSet orbit = Orbit(group, p);
    for (Point q : orbit) covered[q] = true;
    cells.push_back(std::move(orbit));
  }
  return OrderedPartition(group.degree(), std::move(cells));
}

bool IsTransitive(const PermGroup& group) {
  return Orbit(group, 1).size() == group.degree();
}

PermGroup PointStabilizer(const PermGroup& group, Point point) {
  CheckPoint(group, point);
  const Point prefix[] = {point};
  StabilizerChain chain = group.ChainWithBase(prefix);
  return PermGroup(group.degree(), chain.StabilizerGenerators(1));
}

BigInt GroupOrder(const PermGroup& group) { return group.Order(); }

std::size_t TransitivityDegree(const PermGroup& group) {
  PointSet remaining(group.degree());
  std::iota(remaining.begin(), remaining.end(), Point{1});
  PermGroup current = group;
  std::size_t k = 0;
  while (!remaining.empty()) {
    const Point alpha = remaining.front();
    if (Orbit(current, alpha) != remaining) break;
    ++k;
    remaining.erase(remaining.begin());
    if (remaining.empty()) break;
    current = PointStabilizer(current, alpha);
  }
  return k;
}

std::optional<Permutation> FindElementMapping(const PermGroup& group,
                                              std::span<const Point> from,
                                              std::span<const Point> to) {
  if (from.size() != to.size()) {
    ThrowDomainError("FindElementMapping: tuples of different length");
  }
  for (Point p : from) CheckPoint(group, p);
  for (Point p : to) CheckPoint(group, p);

  const StabilizerChain chain = group.ChainWithBase(from);
  // h = u_(k-1) ... u_1 u_0 with u_l taken from level l; `right` holds the
  // part already chosen, so level l must reach to[l] pulled back through it.
  Permutation right = Permutation::Identity(group.degree());
  for (std::size_t l = 0; l < from.size(); ++l) {
    const Point target = right.Inverse()[to[l]];
    const auto& u = chain.level(l).transversal[target - 1];
    if (!u) return std::nullopt;
    right = *u * right;
  }
  return right;
}

}  // namespace orbitals
