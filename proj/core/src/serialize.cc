#include "orbitals/serialize.h"

#include <sstream>

#include "orbitals/errors.h"

namespace orbitals {

using nlohmann::json;

std::string ToDot(const OrbitalGraph& graph) {
  std::ostringstream out;
  out << "digraph orbital {\n";
  for (Point v : IsolatedVertices(graph)) out << "  " << v << ";\n";
  for (const Arc& a : graph.arcs()) {
    out << "  " << a.from << " -> " << a.to << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

json ArcToJson(const Arc& arc) { return json::array({arc.from, arc.to}); }

Arc ArcFromJson(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() ||
      !j[1].is_number_unsigned()) {
    throw ParseError("expected a pair [x, y] of positive integers, got " +
                     j.dump());
  }
  return {j[0].get<Point>(), j[1].get<Point>()};
}

}  // namespace

json GraphToJson(const OrbitalGraph& graph) {
  json arcs = json::array();
  for (const Arc& a : graph.arcs()) arcs.push_back(ArcToJson(a));
  return json{{"degree", graph.degree()},
              {"base_pair", ArcToJson(graph.base_pair())},
              {"arcs", std::move(arcs)},
              {"isolated", IsolatedVertices(graph)}};
}

OrbitalGraph GraphFromJson(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("base_pair") ||
      !j.contains("arcs")) {
    throw ParseError("graph JSON needs degree, base_pair and arcs");
  }
  if (!j["degree"].is_number_unsigned() || !j["arcs"].is_array()) {
    throw ParseError("graph JSON has a malformed degree or arcs field");
  }
  std::vector<Arc> arcs;
  for (const json& a : j["arcs"]) arcs.push_back(ArcFromJson(a));
  try {
    OrbitalGraph graph = OrbitalGraph::FromArcs(
        j["degree"].get<std::size_t>(), ArcFromJson(j["base_pair"]),
        std::move(arcs));
    if (j.contains("isolated") &&
        j["isolated"] != json(IsolatedVertices(graph))) {
      throw ParseError("isolated field disagrees with the arc set");
    }
    return graph;
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what());
  }
}

std::string_view ToString(FutilityMethod method) {
  switch (method) {
    case FutilityMethod::kFast:
      return "fast";
    case FutilityMethod::kStructural:
      return "structural";
    case FutilityMethod::kOracle:
      return "oracle";
  }
  return "unknown";
}

std::optional<FutilityMethod> ParseFutilityMethod(std::string_view name) {
  if (name == "fast") return FutilityMethod::kFast;
  if (name == "structural") return FutilityMethod::kStructural;
  if (name == "oracle") return FutilityMethod::kOracle;
  return std::nullopt;
}

json VerdictToJson(BasePair pair, const FutilityVerdict& verdict,
                   FutilityMethod method, const ArcCountBounds& bounds) {
  json witness = nullptr;
  if (verdict.witness) {
    witness = json{
        {"permutation_cycles", verdict.witness->permutation.ToCycleString()},
        {"violated_arc", ArcToJson(verdict.witness->violated_arc)},
        {"image", ArcToJson(verdict.witness->image)}};
  }
  return json{{"base_pair", ArcToJson(pair)},
              {"futile", verdict.futile},
              {"shape", std::string(ToString(verdict.shape))},
              {"method", std::string(ToString(method))},
              {"witness", std::move(witness)},
              {"arc_count", bounds.arc_count},
              {"thresholds",
               {{"threshold", bounds.threshold}, {"exceeds", bounds.exceeds}}}};
}

json PartitionToJson(const OrderedPartition& partition) {
  return json(partition.cells());
}

json TraceToJson(const RefinementTrace& trace) {
  return json{{"base_pair", ArcToJson(trace.base_pair)},
              {"rounds", trace.rounds},
              {"split_count", trace.split_count},
              {"cells_before", PartitionToJson(trace.input)},
              {"cells_after", PartitionToJson(trace.output)}};
}

}  // namespace orbitals
