#include "cli.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "orbitals/errors.h"
#include "orbitals/futility.h"
#include "orbitals/group_io.h"
#include "orbitals/orbital_graph.h"
#include "orbitals/refine.h"
#include "orbitals/serialize.h"
#include "report.h"

namespace orbitals::cli {

namespace {

using nlohmann::json;

// Thrown for usage problems detected after CLI11 accepted the arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerdictDisagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PermGroup LoadGroup(const std::string& source) {
  // A literal group description may be passed in place of a file name.
  if (source.rfind("degree:", 0) == 0) return ParseGroup(source);
  return ReadGroupFile(source);
}

BasePair ParsePair(const std::string& text, const PermGroup& group) {
  const std::size_t comma = text.find(',');
  auto parse = [&](std::string_view s) -> Point {
    Point value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("--pair expects 'a,b', got '" + text + "'");
    }
    return value;
  };
  if (comma == std::string::npos) {
    throw UsageError("--pair expects 'a,b', got '" + text + "'");
  }
  const std::string_view view(text);
  const BasePair pair{parse(view.substr(0, comma)), parse(view.substr(comma + 1))};
  if (pair.from < 1 || pair.from > group.degree() || pair.to < 1 ||
      pair.to > group.degree()) {
    throw DomainError("pair " + text + " outside 1.." +
                      std::to_string(group.degree()));
  }
  if (pair.from == pair.to) {
    throw DomainError("pair " + text + " needs two distinct points");
  }
  return pair;
}

std::string PairString(BasePair p) {
  return "(" + std::to_string(p.from) + "," + std::to_string(p.to) + ")";
}

std::string ArcList(const std::vector<Arc>& arcs) {
  std::string text;
  for (const Arc& a : arcs) {
    if (!text.empty()) text += ' ';
    text += PairString(a);
  }
  return text;
}

struct Options {
  std::string file;
  std::string pair;
  bool dot = false;
  bool as_json = false;
  bool dedup = false;
  std::string method = "all";
  std::string partition = "orbit";
  std::size_t jobs = 1;
};

int RunOrbits(const Options& opt, std::ostream& out) {
  const PermGroup group = LoadGroup(opt.file);
  AnalysisReport report;
  report.degree = group.degree();
  report.generators = group.generators();
  report.order = group.Order();
  report.orbits = OrbitPartition(group);
  report.transitivity_degree = TransitivityDegree(group);
  PrintGroupSummary(out, report);
  return kOk;
}

int RunGraph(const Options& opt, std::ostream& out) {
  const PermGroup group = LoadGroup(opt.file);
  const BasePair pair = ParsePair(opt.pair, group);
  const OrbitalGraph graph = OrbitalGraph::Build(group, pair.from, pair.to);
  if (opt.dot) {
    out << ToDot(graph);
  } else if (opt.as_json) {
    out << GraphToJson(graph).dump() << '\n';
  } else {
    const PointSet isolated = IsolatedVertices(graph);
    out << "base-pair: " << PairString(pair) << '\n';
    out << "arcs (" << graph.arc_count() << "): " << ArcList(graph.arcs()) << '\n';
    out << "isolated:";
    for (Point v : isolated) out << ' ' << v;
    out << '\n';
    out << "components: " << WeakComponents(graph).ToString() << '\n';
    out << "self-paired: " << (IsSelfPaired(graph) ? "yes" : "no") << '\n';
  }
  return kOk;
}

int RunBasePairs(const Options& opt, std::ostream& out) {
  const PermGroup group = LoadGroup(opt.file);
  const AnalysisReport report = BuildAnalysisReport(group, opt.dedup, opt.jobs);
  if (const auto message = FindDisagreement(report)) {
    throw VerdictDisagreement(*message);
  }
  PrintGroupSummary(out, report);
  out << '\n';
  PrintReportTable(out, report);
  return kOk;
}

FutilityVerdict VerdictFor(FutilityMethod method, const PermGroup& group,
                           BasePair pair) {
  if (method == FutilityMethod::kFast) {
    FutilityVerdict v;
    v.futile = IsFutileFast(group, pair.from, pair.to);
    if (v.futile) {
      const PointSet alpha_orbit = Orbit(group, pair.from);
      v.shape = std::binary_search(alpha_orbit.begin(), alpha_orbit.end(), pair.to)
                    ? FutilityShape::kCompleteOnOrbit
                    : FutilityShape::kCompleteBipartite;
    }
    return v;
  }
  const OrbitalGraph graph = OrbitalGraph::Build(group, pair.from, pair.to);
  if (method == FutilityMethod::kStructural) return IsFutileStructural(graph, group);
  FutilityVerdict v;
  v.futile = IsFutileOracle(graph, group);
  if (v.futile) {
    v.shape = IsSelfPaired(graph) ? FutilityShape::kCompleteOnOrbit
                                  : FutilityShape::kCompleteBipartite;
  } else {
    v.witness = FindFutilityWitness(graph, group);
  }
  return v;
}

int RunFutility(const Options& opt, std::ostream& out) {
  const PermGroup group = LoadGroup(opt.file);
  std::vector<FutilityMethod> methods;
  if (opt.method == "all") {
    methods = {FutilityMethod::kFast, FutilityMethod::kStructural,
               FutilityMethod::kOracle};
  } else {
    methods = {*ParseFutilityMethod(opt.method)};
  }
  const std::vector<BasePair> pairs =
      opt.pair.empty() ? EnumerateBasePairs(group)
                       : std::vector<BasePair>{ParsePair(opt.pair, group)};

  json verdicts = json::array();
  std::ostringstream text;
  for (const BasePair& pair : pairs) {
    const ArcCountBounds bounds = ComputeArcCountBounds(group, pair.from, pair.to);
    std::optional<bool> first;
    for (FutilityMethod method : methods) {
      const FutilityVerdict v = VerdictFor(method, group, pair);
      if (first && *first != v.futile) {
        throw VerdictDisagreement("futility verdicts disagree for base-pair " +
                                  PairString(pair) + " (method " +
                                  std::string(ToString(method)) + ")");
      }
      first = v.futile;
      verdicts.push_back(VerdictToJson(pair, v, method, bounds));
      text << PairString(pair) << ' ' << ToString(method) << ": "
           << (v.futile ? "futile" : "not futile") << " [" << ToString(v.shape)
           << ']';
      if (v.witness) {
        text << " witness " << v.witness->permutation.ToCycleString()
             << " maps arc " << PairString(v.witness->violated_arc)
             << " to non-arc " << PairString(v.witness->image);
      }
      text << '\n';
    }
    text << PairString(pair) << " arcs: " << bounds.arc_count
         << ", bound: " << bounds.threshold
         << (bounds.exceeds ? " (exceeded)" : "") << '\n';
  }
  if (opt.as_json) {
    out << verdicts.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return kOk;
}

int RunRefine(const Options& opt, std::ostream& out) {
  const PermGroup group = LoadGroup(opt.file);
  const BasePair pair = ParsePair(opt.pair, group);
  const OrderedPartition start = opt.partition == "unit"
                                     ? OrderedPartition::Unit(group.degree())
                                     : OrbitPartition(group);
  const RefinementTrace trace =
      RefineByGraph(start, OrbitalGraph::Build(group, pair.from, pair.to));
  if (opt.as_json) {
    out << TraceToJson(trace).dump() << '\n';
  } else {
    out << "base-pair: " << PairString(trace.base_pair) << '\n'
        << "before: " << trace.input.ToString() << '\n'
        << "after: " << trace.output.ToString() << '\n'
        << "rounds: " << trace.rounds << '\n'
        << "split count: " << trace.split_count << '\n';
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Orbital graphs of permutation groups and their futility",
               "orbitals"};
  app.require_subcommand(1);
  Options opt;

  const std::string file_help =
      "group file ('degree: n' then one cycle-notation generator per line), "
      "or the description itself with ';' between lines";

  auto* orbits = app.add_subcommand("orbits", "orbits, order and transitivity");
  orbits->add_option("file", opt.file, file_help)->required();

  auto* graph = app.add_subcommand("graph", "build one orbital graph");
  graph->add_option("file", opt.file, file_help)->required();
  graph->add_option("--pair", opt.pair, "base-pair a,b")->required();
  auto* dot = graph->add_flag("--dot", opt.dot, "emit Graphviz DOT");
  auto* as_json = graph->add_flag("--json", opt.as_json, "emit JSON");
  dot->excludes(as_json);

  auto* base_pairs =
      app.add_subcommand("base-pairs", "one base-pair per orbital graph");
  base_pairs->add_option("file", opt.file, file_help)->required();
  base_pairs->add_flag("--dedup", opt.dedup, "drop pairs with equal arc sets");
  base_pairs->add_option("--jobs", opt.jobs, "worker threads")
      ->check(CLI::Range(1, 256));

  auto* futility = app.add_subcommand("futility", "decide futility");
  futility->add_option("file", opt.file, file_help)->required();
  futility->add_option("--pair", opt.pair, "base-pair a,b (default: all)");
  futility->add_option("--method", opt.method, "fast|structural|oracle|all")
      ->check(CLI::IsMember({"fast", "structural", "oracle", "all"}));
  futility->add_flag("--json", opt.as_json, "emit JSON verdicts");

  auto* refine = app.add_subcommand("refine", "refine a partition by a graph");
  refine->add_option("file", opt.file, file_help)->required();
  refine->add_option("--pair", opt.pair, "base-pair a,b")->required();
  refine->add_option("--partition", opt.partition, "unit|orbit")
      ->check(CLI::IsMember({"unit", "orbit"}));
  refine->add_flag("--json", opt.as_json, "emit the trace as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (orbits->parsed()) return RunOrbits(opt, out);
    if (graph->parsed()) return RunGraph(opt, out);
    if (base_pairs->parsed()) return RunBasePairs(opt, out);
    if (futility->parsed()) return RunFutility(opt, out);
    if (refine->parsed()) return RunRefine(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const VerdictDisagreement& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerdictDisagreement;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace orbitals::cli
