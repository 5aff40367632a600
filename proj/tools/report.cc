#include "report.h"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace orbitals::cli {

namespace {

std::string PairString(BasePair p) {
  return "(" + std::to_string(p.from) + "," + std::to_string(p.to) + ")";
}

const char* YesNo(bool b) { return b ? "yes" : "no"; }

}  // namespace

ReportRow AnalyzePair(const PermGroup& group, BasePair pair) {
  const OrbitalGraph graph = OrbitalGraph::Build(group, pair.from, pair.to);
  const FutilityVerdict verdict = IsFutileStructural(graph, group);
  ReportRow row;
  row.pair = pair;
  row.arc_count = graph.arc_count();
  row.self_paired = IsSelfPaired(graph);
  row.fast = IsFutileFast(group, pair.from, pair.to);
  row.structural = verdict.futile;
  row.oracle = IsFutileOracle(graph, group);
  row.shape = verdict.shape;
  const OrderedPartition components = WeakComponents(graph);
  for (const PointSet& cell : components.cells()) {
    if (cell.size() >= 2) row.component_sizes.push_back(cell.size());
  }
  return row;
}

AnalysisReport BuildAnalysisReport(const PermGroup& group, bool dedup,
                                   std::size_t jobs) {
  AnalysisReport report;
  report.degree = group.degree();
  report.generators = group.generators();
  report.order = group.Order();
  report.orbits = OrbitPartition(group);
  report.transitivity_degree = TransitivityDegree(group);

  const std::vector<BasePair> pairs =
      dedup ? EnumerateDistinctBasePairs(group) : EnumerateBasePairs(group);
  report.rows.resize(pairs.size());

  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(pairs.size(), 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        report.rows[i] = AnalyzePair(group, pairs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

std::optional<std::string> FindDisagreement(const AnalysisReport& report) {
  for (const ReportRow& row : report.rows) {
    if (row.fast != row.structural || row.fast != row.oracle) {
      std::ostringstream msg;
      msg << "futility verdicts disagree for base-pair " << PairString(row.pair)
          << ": fast=" << YesNo(row.fast)
          << " structural=" << YesNo(row.structural)
          << " oracle=" << YesNo(row.oracle);
      return msg.str();
    }
  }
  return std::nullopt;
}

void PrintGroupSummary(std::ostream& out, const AnalysisReport& report) {
  out << "degree: " << report.degree << '\n';
  out << "generators:";
  for (const Permutation& g : report.generators) out << ' ' << g.ToCycleString();
  out << '\n';
  out << "order: " << report.order << '\n';
  out << "orbits: " << report.orbits.ToString() << '\n';
  out << "transitivity degree: " << report.transitivity_degree << '\n';
}

void PrintReportTable(std::ostream& out, const AnalysisReport& report) {
  out << std::left << std::setw(10) << "pair" << std::setw(7) << "arcs"
      << std::setw(13) << "self-paired" << std::setw(6) << "fast"
      << std::setw(12) << "structural" << std::setw(8) << "oracle"
      << std::setw(20) << "shape" << "components" << '\n';
  for (const ReportRow& row : report.rows) {
    std::string sizes;
    for (std::size_t s : row.component_sizes) {
      if (!sizes.empty()) sizes += ',';
      sizes += std::to_string(s);
    }
    out << std::left << std::setw(10) << PairString(row.pair) << std::setw(7)
        << row.arc_count << std::setw(13) << YesNo(row.self_paired)
        << std::setw(6) << YesNo(row.fast) << std::setw(12)
        << YesNo(row.structural) << std::setw(8) << YesNo(row.oracle)
        << std::setw(20) << ToString(row.shape) << sizes << '\n';
  }
}

}  // namespace orbitals::cli
