#include "orbitals/orbital_graph.h"

#include <algorithm>
#include <set>

#include "orbitals/errors.h"

namespace orbitals {

namespace {

void CheckPair(std::size_t degree, Point alpha, Point beta) {
  if (alpha < 1 || alpha > degree || beta < 1 || beta > degree) {
    ThrowDomainError("base-pair (" + std::to_string(alpha) + "," +
                     std::to_string(beta) + ") outside 1.." +
                     std::to_string(degree));
  }
  if (alpha == beta) {
    ThrowDomainError("base-pair points must differ, got (" +
                     std::to_string(alpha) + "," + std::to_string(beta) + ")");
  }
}

}  // namespace

OrbitalGraph::OrbitalGraph(std::size_t degree, BasePair base_pair,
                           std::vector<Arc> arcs)
    : degree_(degree),
      base_pair_(base_pair),
      arcs_(std::move(arcs)),
      out_adj_(degree),
      in_adj_(degree),
      matrix_(degree * degree, 0) {
  std::sort(arcs_.begin(), arcs_.end());
  for (const Arc& a : arcs_) {
    out_adj_[a.from - 1].push_back(a.to);
    in_adj_[a.to - 1].push_back(a.from);
    matrix_[(a.from - 1) * degree_ + (a.to - 1)] = 1;
  }
  // Out lists are already sorted by the arc order; in lists need it.
  for (auto& preds : in_adj_) std::sort(preds.begin(), preds.end());
}

OrbitalGraph OrbitalGraph::Build(const PermGroup& group, Point alpha,
                                 Point beta) {
  const std::size_t n = group.degree();
  CheckPair(n, alpha, beta);
  std::vector<std::uint8_t> visited(n * n, 0);
  std::vector<Arc> arcs{{alpha, beta}};
  visited[(alpha - 1) * n + (beta - 1)] = 1;
  for (std::size_t head = 0; head < arcs.size(); ++head) {
    const Arc current = arcs[head];
    for (const Permutation& g : group.generators()) {
      const Arc image{g[current.from], g[current.to]};
      std::uint8_t& mark = visited[(image.from - 1) * n + (image.to - 1)];
      if (!mark) {
        mark = 1;
        arcs.push_back(image);
      }
    }
  }
  return OrbitalGraph(n, {alpha, beta}, std::move(arcs));
}

OrbitalGraph OrbitalGraph::FromArcs(std::size_t degree, BasePair base_pair,
                                    std::vector<Arc> arcs) {
  if (degree == 0) ThrowDomainError("graph degree must be positive");
  CheckPair(degree, base_pair.from, base_pair.to);
  for (const Arc& a : arcs) CheckPair(degree, a.from, a.to);
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
    ThrowDomainError("duplicate arc in arc list");
  }
  if (!std::binary_search(arcs.begin(), arcs.end(), base_pair)) {
    ThrowDomainError("base-pair is not among the arcs");
  }
  return OrbitalGraph(degree, base_pair, std::move(arcs));
}

bool OrbitalGraph::HasArc(Point from, Point to) const {
  if (from < 1 || from > degree_ || to < 1 || to > degree_) return false;
  return matrix_[(from - 1) * degree_ + (to - 1)] != 0;
}

std::uint64_t ArcCountFormula(const PermGroup& group, Point alpha,
                              Point beta) {
  CheckPair(group.degree(), alpha, beta);
  const std::uint64_t alpha_orbit = Orbit(group, alpha).size();
  const std::uint64_t beta_under_stabilizer =
      Orbit(PointStabilizer(group, alpha), beta).size();
  return alpha_orbit * beta_under_stabilizer;
}

bool IsSelfPaired(const OrbitalGraph& graph) {
  const BasePair pair = graph.base_pair();
  return graph.HasArc(pair.to, pair.from);
}

PointSet IsolatedVertices(const OrbitalGraph& graph) {
  PointSet isolated;
  for (Point v = 1; v <= graph.degree(); ++v) {
    if (graph.OutDegree(v) == 0 && graph.InDegree(v) == 0) {
      isolated.push_back(v);
    }
  }
  return isolated;
}

OrderedPartition WeakComponents(const OrbitalGraph& graph) {
  const std::size_t n = graph.degree();
  std::vector<bool> seen(n + 1, false);
  std::vector<PointSet> components;
  std::vector<PointSet> singletons;
  for (Point start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    PointSet component{start};
    seen[start] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      const Point v = component[head];
      for (const auto* neighbours :
           {&graph.OutNeighbours(v), &graph.InNeighbours(v)}) {
        for (Point w : *neighbours) {
          if (!seen[w]) {
            seen[w] = true;
            component.push_back(w);
          }
        }
      }
    }
    std::sort(component.begin(), component.end());
    (component.size() >= 2 ? components : singletons)
        .push_back(std::move(component));
  }
  components.insert(components.end(),
                    std::make_move_iterator(singletons.begin()),
                    std::make_move_iterator(singletons.end()));
  return OrderedPartition(n, std::move(components));
}

void CheckGraphOfGroup(const OrbitalGraph& graph, const PermGroup& group) {
  if (graph.degree() != group.degree()) {
    ThrowDomainError("graph of degree " + std::to_string(graph.degree()) +
                     " does not belong to a group of degree " +
                     std::to_string(group.degree()));
  }
  for (const Permutation& g : group.generators()) {
    for (const Arc& a : graph.arcs()) {
      if (!graph.HasArc(g[a.from], g[a.to])) {
        ThrowDomainError("arc set is not invariant under generator " +
                         g.ToCycleString());
      }
    }
  }
}

std::optional<Permutation> ComponentMapping(const OrbitalGraph& graph,
                                            const PermGroup& group,
                                            const PointSet& component) {
  const OrderedPartition components = WeakComponents(graph);
  const BasePair pair = graph.base_pair();
  const PointSet& base_component =
      components.cell(components.CellIndexOf(pair.from));

  std::optional<Arc> first_arc;
  for (Point v : component) {
    if (!graph.OutNeighbours(v).empty()) {
      const Arc candidate{v, graph.OutNeighbours(v).front()};
      if (!first_arc || candidate < *first_arc) first_arc = candidate;
    }
  }
  if (!first_arc) return std::nullopt;

  const Point from[] = {pair.from, pair.to};
  const Point to[] = {first_arc->from, first_arc->to};
  std::optional<Permutation> h = FindElementMapping(group, from, to);
  if (!h) return std::nullopt;

  PointSet image;
  image.reserve(base_component.size());
  for (Point v : base_component) image.push_back((*h)[v]);
  std::sort(image.begin(), image.end());
  if (image != component) return std::nullopt;

  std::size_t base_arcs = 0;
  std::size_t target_arcs = 0;
  for (const Arc& a : graph.arcs()) {
    if (components.CellIndexOf(a.from) == components.CellIndexOf(pair.from)) {
      ++base_arcs;
      if (!graph.HasArc((*h)[a.from], (*h)[a.to])) return std::nullopt;
    }
    if (std::binary_search(component.begin(), component.end(), a.from)) {
      ++target_arcs;
    }
  }
  if (base_arcs != target_arcs) return std::nullopt;
  return h;
}

bool ComponentsPairwiseIsomorphic(const OrbitalGraph& graph,
                                  const PermGroup& group) {
  CheckGraphOfGroup(graph, group);
  const OrderedPartition components = WeakComponents(graph);
  for (const PointSet& component : components.cells()) {
    if (component.size() < 2) continue;
    if (!ComponentMapping(graph, group, component)) return false;
  }
  return true;
}

std::vector<BasePair> EnumerateBasePairs(const PermGroup& group) {
  std::vector<BasePair> pairs;
  const OrderedPartition orbits = OrbitPartition(group);
  for (const PointSet& orbit : orbits.cells()) {
    const Point alpha = orbit.front();
    const PermGroup stabilizer = PointStabilizer(group, alpha);
    const OrderedPartition suborbits = OrbitPartition(stabilizer);
    for (const PointSet& suborbit : suborbits.cells()) {
      if (suborbit.front() == alpha) continue;
      pairs.push_back({alpha, suborbit.front()});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<BasePair> EnumerateDistinctBasePairs(const PermGroup& group) {
  std::vector<BasePair> distinct;
  std::set<std::vector<Arc>> seen;
  for (const BasePair& pair : EnumerateBasePairs(group)) {
    OrbitalGraph graph = OrbitalGraph::Build(group, pair.from, pair.to);
    if (seen.insert(graph.arcs()).second) distinct.push_back(pair);
  }
  return distinct;
}

bool GraphsEqual(const OrbitalGraph& a, const OrbitalGraph& b) {
  if (a.degree() != b.degree()) {
    ThrowDomainError("cannot compare graphs of degree " +
                     std::to_string(a.degree()) + " and " +
                     std::to_string(b.degree()));
  }
  return a.arcs() == b.arcs();
}

}  // namespace orbitals
