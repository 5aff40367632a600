#ifndef ORBITALS_SERIALIZE_H_
#define ORBITALS_SERIALIZE_H_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "orbitals/futility.h"
#include "orbitals/orbital_graph.h"
#include "orbitals/refine.h"

namespace orbitals {

// digraph orbital {
//   5;          <- isolated vertices, ascending
//   1 -> 7;     <- arcs, lexicographic
// }
std::string ToDot(const OrbitalGraph& graph);

// {"degree", "base_pair": [a,b], "arcs": [[x,y],...], "isolated": [...]}
nlohmann::json GraphToJson(const OrbitalGraph& graph);
// Throws ParseError on a document that does not follow the schema above.
OrbitalGraph GraphFromJson(const nlohmann::json& json);

enum class FutilityMethod { kFast, kStructural, kOracle };

std::string_view ToString(FutilityMethod method);
std::optional<FutilityMethod> ParseFutilityMethod(std::string_view name);

// {"base_pair", "futile", "shape", "method", "witness", "arc_count",
//  "thresholds"}; witness is {"permutation_cycles", "violated_arc"} or null.
nlohmann::json VerdictToJson(BasePair pair, const FutilityVerdict& verdict,
                             FutilityMethod method,
                             const ArcCountBounds& bounds);

// {"base_pair", "rounds", "split_count", "cells_before", "cells_after"}
nlohmann::json TraceToJson(const RefinementTrace& trace);

nlohmann::json PartitionToJson(const OrderedPartition& partition);

}  // namespace orbitals

#endif  // ORBITALS_SERIALIZE_H_
