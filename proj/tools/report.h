#ifndef ORBITALS_TOOLS_REPORT_H_
#define ORBITALS_TOOLS_REPORT_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orbitals/futility.h"
#include "orbitals/perm_group.h"

namespace orbitals::cli {

struct ReportRow {
  BasePair pair;
  std::uint64_t arc_count = 0;
  bool self_paired = false;
  bool fast = false;
  bool structural = false;
  bool oracle = false;
  FutilityShape shape = FutilityShape::kNotFutile;
  // Sizes of the weak components with two or more vertices.
  std::vector<std::size_t> component_sizes;
};

struct AnalysisReport {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  BigInt order;
  OrderedPartition orbits;
  std::size_t transitivity_degree = 0;
  std::vector<ReportRow> rows;
};

// One row per enumerated base-pair (or per distinct graph with `dedup`).
// Rows are computed on up to `jobs` threads and kept in base-pair order.
AnalysisReport BuildAnalysisReport(const PermGroup& group, bool dedup,
                                   std::size_t jobs = 1);

ReportRow AnalyzePair(const PermGroup& group, BasePair pair);

// A message naming the first row whose three futility verdicts differ.
std::optional<std::string> FindDisagreement(const AnalysisReport& report);

void PrintGroupSummary(std::ostream& out, const AnalysisReport& report);
void PrintReportTable(std::ostream& out, const AnalysisReport& report);

}  // namespace orbitals::cli

#endif  // ORBITALS_TOOLS_REPORT_H_
