#include "orbitals/futility.h"

#include <algorithm>

#include "orbitals/errors.h"

namespace orbitals {

std::string_view ToString(FutilityShape shape) {
  switch (shape) {
    case FutilityShape::kCompleteOnOrbit:
      return "complete-on-orbit";
    case FutilityShape::kCompleteBipartite:
      return "complete-bipartite";
    case FutilityShape::kNotFutile:
      return "not-futile";
  }
  return "unknown";
}

namespace {

void CheckDistinct(Point alpha, Point beta) {
  if (alpha == beta) {
    ThrowDomainError("base-pair points must differ, got (" +
                     std::to_string(alpha) + "," + std::to_string(beta) + ")");
  }
}

bool Contains(const PointSet& set, Point p) {
  return std::binary_search(set.begin(), set.end(), p);
}

}  // namespace

bool IsFutileFast(const PermGroup& group, Point alpha, Point beta) {
  CheckDistinct(alpha, beta);
  const PointSet alpha_orbit = Orbit(group, alpha);
  const std::size_t beta_under_stabilizer =
      Orbit(PointStabilizer(group, alpha), beta).size();
  if (Contains(alpha_orbit, beta)) {
    // beta^(H_alpha) sits inside alpha^H \ {alpha}, so the graph is complete
    // on alpha^H exactly when it fills all of that.
    return beta_under_stabilizer + 1 == alpha_orbit.size();
  }
  return beta_under_stabilizer == Orbit(group, beta).size();
}

std::optional<FutilityWitness> FindFutilityWitness(const OrbitalGraph& graph,
                                                   const PermGroup& group) {
  for (const Permutation& g :
       PartitionStabilizerGenerators(OrbitPartition(group))) {
    for (const Arc& a : graph.arcs()) {
      const Arc image{g[a.from], g[a.to]};
      if (!graph.HasArc(image)) return FutilityWitness{g, a, image};
    }
  }
  return std::nullopt;
}

FutilityVerdict IsFutileStructural(const OrbitalGraph& graph,
                                   const PermGroup& group) {
  CheckGraphOfGroup(graph, group);
  FutilityVerdict verdict;

  const OrderedPartition components = WeakComponents(graph);
  std::vector<const PointSet*> large;
  for (const PointSet& cell : components.cells()) {
    if (cell.size() >= 2) large.push_back(&cell);
  }

  if (large.size() == 1) {
    const PointSet& delta = *large.front();
    // With a unique nontrivial component every arc lies inside delta.
    const std::size_t k = delta.size();
    bool complete = graph.arc_count() == k * (k - 1);
    for (std::size_t i = 0; complete && i < k; ++i) {
      for (std::size_t j = 0; complete && j < k; ++j) {
        if (i != j && !graph.HasArc(delta[i], delta[j])) complete = false;
      }
    }
    if (complete) {
      verdict.futile = true;
      verdict.shape = FutilityShape::kCompleteOnOrbit;
      verdict.component = delta;
      return verdict;
    }

    PointSet starts;
    PointSet ends;
    bool split = true;
    for (Point v : delta) {
      const bool out = graph.OutDegree(v) > 0;
      const bool in = graph.InDegree(v) > 0;
      if (out && in) split = false;
      (out ? starts : ends).push_back(v);
    }
    if (split && graph.arc_count() == starts.size() * ends.size()) {
      bool bipartite = true;
      for (Point s : starts) {
        for (Point e : ends) {
          if (!graph.HasArc(s, e)) bipartite = false;
        }
      }
      if (bipartite) {
        verdict.futile = true;
        verdict.shape = FutilityShape::kCompleteBipartite;
        verdict.component = delta;
        verdict.start_vertices = std::move(starts);
        verdict.end_vertices = std::move(ends);
        return verdict;
      }
    }
  }

  verdict.futile = false;
  verdict.shape = FutilityShape::kNotFutile;
  verdict.witness = FindFutilityWitness(graph, group);
  return verdict;
}

bool IsFutileOracle(const OrbitalGraph& graph, const PermGroup& group) {
  CheckGraphOfGroup(graph, group);
  // Preserving the arc set is closed under products and inverses, so
  // checking the generators of G_P decides it for all of G_P. Each generator
  // is a bijection on pairs, so mapping A into A means mapping A onto A.
  const std::vector<Permutation> generators =
      PartitionStabilizerGenerators(OrbitPartition(group));
  for (const Permutation& g : generators) {
    for (Point x = 1; x <= graph.degree(); ++x) {
      for (Point y = 1; y <= graph.degree(); ++y) {
        if (graph.HasArc(x, y) != graph.HasArc(g[x], g[y])) return false;
      }
    }
  }
  return true;
}

bool FutilityByStabilizerTransitivity(const PermGroup& group, Point alpha,
                                      Point beta) {
  CheckDistinct(alpha, beta);
  const PointSet alpha_orbit = Orbit(group, alpha);
  if (Contains(alpha_orbit, beta)) {
    ThrowDomainError("beta " + std::to_string(beta) +
                     " lies in the orbit of alpha " + std::to_string(alpha));
  }
  return Orbit(PointStabilizer(group, alpha), beta) == Orbit(group, beta);
}

ArcCountBounds ComputeArcCountBounds(const PermGroup& group, Point alpha,
                                     Point beta) {
  CheckDistinct(alpha, beta);
  const PointSet alpha_orbit = Orbit(group, alpha);
  const auto n = static_cast<std::int64_t>(alpha_orbit.size());
  ArcCountBounds bounds;
  if (Contains(alpha_orbit, beta)) {
    bounds.threshold = n * (n - 2);
  } else {
    const auto m = static_cast<std::int64_t>(Orbit(group, beta).size());
    bounds.threshold = std::min(n * (m - 1), m * (n - 1));
  }
  bounds.arc_count = ArcCountFormula(group, alpha, beta);
  bounds.exceeds =
      static_cast<std::int64_t>(bounds.arc_count) > bounds.threshold;
  return bounds;
}

bool TransitiveGroupFutility(const PermGroup& group) {
  if (!IsTransitive(group)) {
    ThrowDomainError("TransitiveGroupFutility needs a transitive group");
  }
  return TransitivityDegree(group) >= 2;
}

}  // namespace orbitals
