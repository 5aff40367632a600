#include "orbitals/refine.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <utility>

#include "orbitals/errors.h"
#include "orbitals/futility.h"

namespace orbitals {

namespace {

using Signature = std::vector<std::pair<std::size_t, std::size_t>>;

Signature VertexSignature(const OrbitalGraph& graph,
                          const OrderedPartition& partition, Point v) {
  Signature signature(partition.size(), {0, 0});
  for (Point w : graph.OutNeighbours(v)) {
    ++signature[partition.CellIndexOf(w)].first;
  }
  for (Point w : graph.InNeighbours(v)) {
    ++signature[partition.CellIndexOf(w)].second;
  }
  return signature;
}

}  // namespace

OrderedPartition IndividualizePoint(const OrderedPartition& partition,
                                    Point point) {
  if (point < 1 || point > partition.degree()) {
    ThrowDomainError("point " + std::to_string(point) +
                     " outside 1.." + std::to_string(partition.degree()));
  }
  std::vector<PointSet> cells;
  cells.reserve(partition.size() + 1);
  for (const PointSet& cell : partition.cells()) {
    if (cell.size() > 1 && std::find(cell.begin(), cell.end(), point) != cell.end()) {
      cells.push_back({point});
      PointSet rest;
      std::copy_if(cell.begin(), cell.end(), std::back_inserter(rest),
                   [point](Point v) { return v != point; });
      cells.push_back(std::move(rest));
    } else {
      cells.push_back(cell);
    }
  }
  return OrderedPartition(partition.degree(), std::move(cells));
}

RefinementTrace RefineByGraph(const OrderedPartition& partition,
                              const OrbitalGraph& graph) {
  if (partition.degree() != graph.degree()) {
    ThrowDomainError("partition of degree " +
                     std::to_string(partition.degree()) +
                     " cannot be refined by a graph of degree " +
                     std::to_string(graph.degree()));
  }
  RefinementTrace trace;
  trace.input = partition;
  trace.base_pair = graph.base_pair();

  OrderedPartition current = partition;
  while (true) {
    ++trace.rounds;
    std::vector<PointSet> next;
    bool split = false;
    for (const PointSet& cell : current.cells()) {
      std::map<Signature, PointSet> pieces;
      for (Point v : cell) {
        pieces[VertexSignature(graph, current, v)].push_back(v);
      }
      split = split || pieces.size() > 1;
      for (auto& [signature, piece] : pieces) next.push_back(std::move(piece));
    }
    if (!split) break;
    current = OrderedPartition(current.degree(), std::move(next));
  }
  trace.split_count = current.size() - partition.size();
  trace.output = std::move(current);
  return trace;
}

std::vector<OrbitalGraph> SelectUsefulGraphs(const PermGroup& group) {
  std::vector<OrbitalGraph> useful;
  for (const BasePair& pair : EnumerateBasePairs(group)) {
    if (IsFutileFast(group, pair.from, pair.to)) continue;
    useful.push_back(OrbitalGraph::Build(group, pair.from, pair.to));
  }
  return useful;
}

}  // namespace orbitals
