// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbitals/futility.h"
#include "orbitals/orbital_graph.h"
#include "orbitals/perm_group.h"
#include "orbitals/refine.h"
#include "support/corpus.h"

namespace orbitals {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects check outcomes; keeps the first failure message for the report.
class Tally {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_failure_ = what;
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  bool ok() const { return failures_ == 0; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

std::string Describe(const PermGroup& h) {
  std::ostringstream out;
  out << "degree " << h.degree() << " <";
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    out << (i ? "," : "") << h.generators()[i].ToCycleString();
  }
  out << ">";
  return out.str();
}

std::string Describe(const PermGroup& h, Point a, Point b) {
  return Describe(h) + " pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool Report(int number, const std::string& title, bool pass,
            const std::string& detail) {
  std::cout << "criterion " << number << ": " << (pass ? "PASS" : "FAIL") << "  "
            << title << " (" << detail << ")" << std::endl;
  return pass;
}

std::string Summary(const Tally& tally, double seconds) {
  std::ostringstream out;
  out << tally.checks() << " checks, " << tally.failures() << " failures, "
      << std::fixed << std::setprecision(2) << seconds << " s";
  if (!tally.ok()) out << "; first: " << tally.first_failure();
  return out.str();
}

std::set<Point> StartPoints(const OrbitalGraph& g) {
  std::set<Point> s;
  for (const Arc& a : g.arcs()) s.insert(a.from);
  return s;
}

std::set<Point> EndPoints(const OrbitalGraph& g) {
  std::set<Point> s;
  for (const Arc& a : g.arcs()) s.insert(a.to);
  return s;
}

std::set<Point> AsSet(const PointSet& points) {
  return {points.begin(), points.end()};
}

bool ValidWitness(const FutilityWitness& w, const OrbitalGraph& g,
                  const PermGroup& h) {
  const OrderedPartition orbits = OrbitPartition(h);
  for (Point x = 1; x <= h.degree(); ++x) {
    if (orbits.CellIndexOf(w.permutation[x]) != orbits.CellIndexOf(x)) return false;
  }
  const Arc image{w.permutation[w.violated_arc.from], w.permutation[w.violated_arc.to]};
  return g.HasArc(w.violated_arc) && image == w.image && !g.HasArc(image);
}

// Every orbital graph of a group, keyed by its ordered base-pair.
using GraphTable = std::map<BasePair, OrbitalGraph>;

GraphTable AllGraphs(const PermGroup& h) {
  GraphTable table;
  for (Point a = 1; a <= h.degree(); ++a) {
    for (Point b = 1; b <= h.degree(); ++b) {
      if (a != b) table.emplace(BasePair{a, b}, OrbitalGraph::Build(h, a, b));
    }
  }
  return table;
}

bool WorkedExamples() {
  const auto start = Clock::now();
  Tally t;

  const PermGroup h = testing::TwoTransposition();
  const OrbitalGraph g17 = OrbitalGraph::Build(h, 1, 7);
  t.Expect(g17.arcs() == std::vector<Arc>{{1, 7}}, "(1,7) arcs");
  t.Expect(IsolatedVertices(g17) == PointSet{2, 3, 4, 5, 6}, "(1,7) isolated");
  t.Expect(OrbitalGraph::Build(h, 1, 3).arcs() == std::vector<Arc>{{1, 2}, {1, 3}},
           "(1,3) arcs");
  t.Expect(OrbitalGraph::Build(h, 3, 4).arcs() ==
               std::vector<Arc>{{2, 4}, {2, 6}, {3, 4}, {3, 6}},
           "(3,4) arcs");

  const PermGroup k = testing::TwoTriangles();
  const OrbitalGraph g = OrbitalGraph::Build(k, 1, 2);
  t.Expect(WeakComponents(g).cells() ==
               std::vector<PointSet>{{1, 2, 3}, {4, 5, 6}, {7}, {8}, {9}},
           "two triangles components");
  for (const PointSet& c : {PointSet{1, 2, 3}, PointSet{4, 5, 6}}) {
    std::size_t inside = 0;
    for (Point x : c) {
      for (Point y : c) inside += x != y && g.HasArc({x, y});
    }
    t.Expect(inside == 6, "two triangles component not complete");
  }
  t.Expect(g.arc_count() == 12, "two triangles arc count");
  t.Expect(IsolatedVertices(g) == PointSet{7, 8, 9}, "two triangles isolated");
  t.Expect(!IsFutileFast(k, 1, 2), "two triangles fast verdict");
  const FutilityVerdict structural = IsFutileStructural(g, k);
  t.Expect(!structural.futile && structural.witness &&
               ValidWitness(*structural.witness, g, k),
           "two triangles structural verdict or witness");
  t.Expect(!IsFutileOracle(g, k), "two triangles oracle verdict");
  const std::optional<FutilityWitness> oracle_witness = FindFutilityWitness(g, k);
  t.Expect(oracle_witness && ValidWitness(*oracle_witness, g, k),
           "two triangles oracle witness");

  const PermGroup d8 = testing::Dihedral8();
  const OrbitalGraph g8 = OrbitalGraph::Build(d8, 1, 2);
  t.Expect(g8.arcs() == std::vector<Arc>{{1, 2}, {1, 3}, {2, 1}, {2, 4},
                                         {3, 1}, {3, 4}, {4, 2}, {4, 3}},
           "dihedral arcs");
  const ArcCountBounds b8 = ComputeArcCountBounds(d8, 1, 2);
  t.Expect(b8.threshold == 4 * (4 - 2) && b8.arc_count == 8 && !b8.exceeds,
           "dihedral bound equality");

  const PermGroup s3 = testing::SixPointS3();
  const OrbitalGraph g6 = OrbitalGraph::Build(s3, 1, 4);
  t.Expect(g6.arcs() == std::vector<Arc>{{1, 4}, {1, 6}, {2, 4}, {2, 5}, {3, 5}, {3, 6}},
           "six-point arcs");
  const ArcCountBounds b6 = ComputeArcCountBounds(s3, 1, 4);
  t.Expect(b6.threshold == 3 * (3 - 1) && b6.arc_count == 6 && !b6.exceeds,
           "six-point bound equality");

  const double seconds = SecondsSince(start);
  t.Expect(seconds < 1.0, "over 1 s");
  return Report(1, "fixtures match exactly", t.ok(), Summary(t, seconds));
}

bool ThreeWayAgreement(const std::vector<PermGroup>& corpus) {
  const auto start = Clock::now();
  Tally t;
  std::size_t pairs = 0;
  std::size_t futile = 0;
  for (const PermGroup& h : corpus) {
    for (Point a = 1; a <= h.degree(); ++a) {
      for (Point b = 1; b <= h.degree(); ++b) {
        if (a == b) continue;
        const OrbitalGraph g = OrbitalGraph::Build(h, a, b);
        const bool fast = IsFutileFast(h, a, b);
        const bool structural = IsFutileStructural(g, h).futile;
        const bool oracle = IsFutileOracle(g, h);
        t.Expect(fast == structural && structural == oracle, Describe(h, a, b));
        ++pairs;
        futile += oracle;
      }
    }
  }
  const double seconds = SecondsSince(start);
  t.Expect(seconds <= 60.0, "over 60 s");
  std::ostringstream detail;
  detail << corpus.size() << " groups, " << pairs << " pairs, " << futile
         << " futile; " << Summary(t, seconds);
  return Report(2, "fast, structural and oracle futility agree", t.ok(),
                detail.str());
}

bool ArcCountIdentity(const std::vector<PermGroup>& corpus) {
  const auto start = Clock::now();
  Tally t;
  for (const PermGroup& h : corpus) {
    for (Point a = 1; a <= h.degree(); ++a) {
      const std::size_t orbit = Orbit(h, a).size();
      const PermGroup stabilizer = PointStabilizer(h, a);
      for (Point b = 1; b <= h.degree(); ++b) {
        if (a == b) continue;
        const std::uint64_t expected = orbit * Orbit(stabilizer, b).size();
        t.Expect(OrbitalGraph::Build(h, a, b).arc_count() == expected &&
                     ArcCountFormula(h, a, b) == expected,
                 Describe(h, a, b));
      }
    }
  }
  return Report(3, "arc count equals orbit length times stabilizer orbit length",
                t.ok(), Summary(t, SecondsSince(start)));
}

bool TransitiveDichotomy(const std::vector<PermGroup>& corpus) {
  const auto start = Clock::now();
  Tally t;
  std::size_t transitive = 0;
  std::size_t all_futile = 0;
  for (const PermGroup& h : corpus) {
    if (!IsTransitive(h)) continue;
    ++transitive;
    const bool predicted = TransitiveGroupFutility(h);
    all_futile += predicted;
    t.Expect(predicted == (TransitivityDegree(h) >= 2), Describe(h));
    for (const BasePair& p : EnumerateBasePairs(h)) {
      const OrbitalGraph g = OrbitalGraph::Build(h, p.from, p.to);
      t.Expect(IsFutileOracle(g, h) == predicted, Describe(h, p.from, p.to));
    }
  }
  std::ostringstream detail;
  detail << transitive << " transitive groups, " << all_futile
         << " with every graph futile; " << Summary(t, SecondsSince(start));
  return Report(4, "transitive groups are all futile or none futile", t.ok(),
                detail.str());
}

bool EnumerationCompleteness(const std::vector<PermGroup>& corpus) {
  const auto start = Clock::now();
  Tally t;
  std::size_t groups = 0;
  for (const PermGroup& h : corpus) {
    if (h.degree() > 7) continue;
    ++groups;
    std::set<std::vector<Arc>> every;
    for (Point a = 1; a <= h.degree(); ++a) {
      for (Point b = 1; b <= h.degree(); ++b) {
        if (a != b) every.insert(OrbitalGraph::Build(h, a, b).arcs());
      }
    }
    std::set<std::vector<Arc>> enumerated;
    for (const BasePair& p : EnumerateBasePairs(h)) {
      enumerated.insert(OrbitalGraph::Build(h, p.from, p.to).arcs());
    }
    t.Expect(every == enumerated, Describe(h));
  }
  std::ostringstream detail;
  detail << groups << " groups of degree <= 7; " << Summary(t, SecondsSince(start));
  return Report(5, "enumerated base-pairs reach every orbital graph", t.ok(),
                detail.str());
}

bool StructuralProperties(const std::vector<PermGroup>& corpus) {
  const auto start = Clock::now();
  Tally t;
  std::size_t bipartite_cases = 0;
  std::size_t mapped_components = 0;
  for (const PermGroup& h : corpus) {
    const std::size_t n = h.degree();
    const GraphTable graphs = AllGraphs(h);
    const bool transitive = IsTransitive(h);
    for (const auto& [pair, g] : graphs) {
      const Point a = pair.from;
      const Point b = pair.to;
      const std::string where = Describe(h, a, b);
      const std::set<Point> alpha_orbit = AsSet(Orbit(h, a));
      const std::set<Point> beta_orbit = AsSet(Orbit(h, b));

      // A pair is an arc exactly when it regenerates the same graph.
      for (const auto& [other, og] : graphs) {
        t.Expect(g.HasArc(other) == GraphsEqual(g, og), "arc regeneration " + where);
      }

      const Point ab[] = {a, b};
      const Point ba[] = {b, a};
      t.Expect(IsSelfPaired(g) == FindElementMapping(h, ab, ba).has_value(),
               "self-paired " + where);

      t.Expect(StartPoints(g) == alpha_orbit, "start points " + where);
      t.Expect(EndPoints(g) == beta_orbit, "end points " + where);

      t.Expect(g.OutDegree(a) == Orbit(PointStabilizer(h, a), b).size() &&
                   g.InDegree(b) == Orbit(PointStabilizer(h, b), a).size(),
               "local degrees " + where);

      std::set<Point> covered = alpha_orbit;
      covered.insert(beta_orbit.begin(), beta_orbit.end());
      const bool covers = covered.size() == n;
      t.Expect(IsolatedVertices(g).empty() == covers, "isolated vertices " + where);

      if (transitive) {
        t.Expect(IsolatedVertices(g).empty(), "transitive isolated " + where);
      } else if (covers) {
        ++bipartite_cases;
        bool across = true;
        for (const Arc& arc : g.arcs()) {
          across = across && alpha_orbit.count(arc.from) && beta_orbit.count(arc.to);
        }
        std::set<Point> both;
        std::set_intersection(alpha_orbit.begin(), alpha_orbit.end(),
                              beta_orbit.begin(), beta_orbit.end(),
                              std::inserter(both, both.end()));
        t.Expect(across && both.empty() && IsolatedVertices(g).empty(),
                 "bipartite " + where);
      }

      for (const Permutation& s : h.generators()) {
        bool preserved = true;
        for (const Arc& arc : g.arcs()) {
          preserved = preserved && g.HasArc({s[arc.from], s[arc.to]});
        }
        t.Expect(preserved, "generator automorphism " + where);
      }

      const OrderedPartition components = WeakComponents(g);
      const PointSet& home = components.cell(components.CellIndexOf(a));
      for (const PointSet& c : components.cells()) {
        if (c.size() < 2) continue;
        const std::optional<Permutation> m = ComponentMapping(g, h, c);
        bool ok = m.has_value() && h.Contains(*m) && home.size() == c.size();
        if (ok) {
          PointSet image;
          for (Point x : home) image.push_back((*m)[x]);
          std::sort(image.begin(), image.end());
          ok = image == c;
          for (const Arc& arc : g.arcs()) {
            const bool inside = std::binary_search(home.begin(), home.end(), arc.from);
            if (inside) ok = ok && g.HasArc({(*m)[arc.from], (*m)[arc.to]});
          }
        }
        mapped_components += ok;
        t.Expect(ok, "component mapping " + where);
      }
    }
  }
  std::ostringstream detail;
  detail << bipartite_cases << " bipartite cases, " << mapped_components
         << " components mapped; " << Summary(t, SecondsSince(start));
  return Report(6, "structural properties hold on every orbital graph", t.ok(),
                detail.str());
}

bool FutileGraphsNeverRefine(const std::vector<PermGroup>& corpus) {
  const auto start = Clock::now();
  Tally t;
  std::size_t futile = 0;
  std::size_t useful = 0;
  std::size_t useful_splitting = 0;
  std::size_t useful_splitting_individualized = 0;
  for (const PermGroup& h : corpus) {
    const OrderedPartition orbits = OrbitPartition(h);
    for (const BasePair& p : EnumerateBasePairs(h)) {
      const OrbitalGraph g = OrbitalGraph::Build(h, p.from, p.to);
      const RefinementTrace trace = RefineByGraph(orbits, g);
      if (IsFutileOracle(g, h)) {
        ++futile;
        t.Expect(trace.split_count == 0, Describe(h, p.from, p.to));
      } else {
        ++useful;
        useful_splitting += trace.split_count >= 1;
        const OrderedPartition individualized = IndividualizePoint(orbits, p.from);
        useful_splitting_individualized +=
            RefineByGraph(individualized, g).split_count >= 1;
      }
    }
  }
  t.Expect(useful_splitting >= 1,
           "no non-futile graph splits the orbit partition");
  std::ostringstream detail;
  detail << futile << " futile graphs; " << useful_splitting << " of " << useful
         << " non-futile graphs split the orbit partition, "
         << useful_splitting_individualized
         << " split it once the base point is individualized; "
         << Summary(t, SecondsSince(start));
  return Report(7, "futile graphs never refine the orbit partition", t.ok(),
                detail.str());
}

int Main() {
  const std::vector<PermGroup> corpus = testing::RandomGroupCorpus();
  bool ok = WorkedExamples();
  ok = ThreeWayAgreement(corpus) && ok;
  ok = ArcCountIdentity(corpus) && ok;
  ok = TransitiveDichotomy(corpus) && ok;
  ok = EnumerationCompleteness(corpus) && ok;
  ok = StructuralProperties(corpus) && ok;
  ok = FutileGraphsNeverRefine(corpus) && ok;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}

}  // namespace
}  // namespace orbitals

int main() { return orbitals::Main(); }
