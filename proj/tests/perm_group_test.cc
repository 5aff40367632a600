#include "orbitals/perm_group.h"

#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "orbitals/errors.h"
#include "support/brute_force.h"
#include "support/corpus.h"

namespace orbitals {
namespace {

using testing::BruteOrbit;
using testing::BruteStabilizer;
using testing::BruteTransitivityDegree;
using testing::EnumerateElements;

TEST(OrbitTest, FixedPointHasSingletonOrbit) {
  EXPECT_EQ(Orbit(testing::TwoTransposition(), 1), (PointSet{1}));
}

TEST(OrbitTest, ClosureUnderOneGenerator) {
  EXPECT_EQ(Orbit(testing::TwoTransposition(), 3), (PointSet{2, 3}));
}

TEST(OrbitTest, TwoTrianglesFirstOrbit) {
  EXPECT_EQ(Orbit(testing::TwoTriangles(), 1), (PointSet{1, 2, 3, 4, 5, 6}));
}

TEST(OrbitTest, OutOfRange) {
  EXPECT_THROW(Orbit(testing::TwoTransposition(), 8), DomainError);
  EXPECT_THROW(Orbit(testing::TwoTransposition(), 0), DomainError);
}

TEST(OrbitPartitionTest, Examples) {
  EXPECT_EQ(OrbitPartition(testing::TwoTriangles()).cells(),
            (std::vector<PointSet>{{1, 2, 3, 4, 5, 6}, {7, 8, 9}}));
  EXPECT_EQ(OrbitPartition(PermGroup::Trivial(3)).cells(),
            (std::vector<PointSet>{{1}, {2}, {3}}));
  EXPECT_EQ(OrbitPartition(testing::TwoTransposition()).cells(),
            (std::vector<PointSet>{{1}, {2, 3}, {4, 6}, {5}, {7}}));
}

TEST(PointStabilizerTest, FixedPointStabilizerIsWholeGroup) {
  const PermGroup h = testing::TwoTransposition();
  const PermGroup stab = PointStabilizer(h, 1);
  EXPECT_EQ(stab.Order(), h.Order());
  for (const Permutation& g : h.generators()) EXPECT_TRUE(stab.Contains(g));
}

TEST(PointStabilizerTest, TwoTrianglesStabilizerOfOne) {
  EXPECT_EQ(Orbit(PointStabilizer(testing::TwoTriangles(), 1), 2),
            (PointSet{2, 3}));
}

TEST(PointStabilizerTest, Dihedral) {
  const PermGroup d8 = testing::Dihedral8();
  EXPECT_EQ(d8.Order(), 8);
  EXPECT_EQ(PointStabilizer(d8, 1).Order(), 2);
}

TEST(PointStabilizerTest, TrivialStabilizerStillHasAGenerator) {
  const PermGroup c3(3, {ParseCycles("(1,2,3)", 3)});
  const PermGroup stab = PointStabilizer(c3, 2);
  EXPECT_EQ(stab.Order(), 1);
  EXPECT_FALSE(stab.generators().empty());
}

TEST(GroupOrderTest, Examples) {
  EXPECT_EQ(GroupOrder(PermGroup::Trivial(5)), 1);
  EXPECT_EQ(GroupOrder(testing::Dihedral8()), 8);
  EXPECT_EQ(GroupOrder(testing::SixPointS3()), 6);
  EXPECT_EQ(GroupOrder(testing::TwoTriangles()), 216);
}

TEST(GroupOrderTest, LargeSymmetricGroupNeedsBigIntegers) {
  BigInt factorial = 1;
  for (int i = 2; i <= 30; ++i) factorial *= i;
  EXPECT_EQ(GroupOrder(PermGroup::Symmetric(30)), factorial);
  EXPECT_GT(factorial, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(GroupOrderTest, PartitionStabilizerOrder) {
  const OrderedPartition p(9, {{1, 2, 3, 4, 5, 6}, {7, 8, 9}});
  const auto gens = PartitionStabilizerGenerators(p);
  EXPECT_EQ(gens.size(), 7u);
  EXPECT_EQ(PermGroup(9, gens).Order(), 4320);
  EXPECT_EQ(PermGroup(5, PartitionStabilizerGenerators(
                             OrderedPartition::Discrete(5)))
                .Order(),
            1);
}

TEST(TransitivityDegreeTest, Examples) {
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(TransitivityDegree(PermGroup::Symmetric(n)), n) << "n=" << n;
  }
  EXPECT_EQ(TransitivityDegree(testing::Dihedral8()), 1u);
  EXPECT_EQ(TransitivityDegree(testing::TwoTransposition()), 0u);
  // A_5 is 3-transitive.
  const PermGroup a5(5, {ParseCycles("(1,2,3)", 5), ParseCycles("(1,2,3,4,5)", 5)});
  EXPECT_EQ(a5.Order(), 60);
  EXPECT_EQ(TransitivityDegree(a5), 3u);
}

TEST(StabilizerChainTest, BaseStartsWithFirstMovedPoint) {
  const PermGroup h(6, {ParseCycles("(4,5,6)", 6), ParseCycles("(2,3)", 6)});
  EXPECT_EQ(h.chain().Base().front(), 4u);
}

TEST(StabilizerChainTest, RejectsNonMembers) {
  const PermGroup d8 = testing::Dihedral8();
  EXPECT_FALSE(d8.Contains(ParseCycles("(1,2)", 4)));
  EXPECT_TRUE(d8.Contains(ParseCycles("(2,3)", 4)));
  EXPECT_FALSE(d8.Contains(Permutation::Identity(5)));
}

TEST(FindElementMappingTest, MapsPairs) {
  const PermGroup d8 = testing::Dihedral8();
  const Point from[] = {1, 2};
  const Point to[] = {4, 3};
  const auto h = FindElementMapping(d8, from, to);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ((*h)[1], 4u);
  EXPECT_EQ((*h)[2], 3u);
  EXPECT_TRUE(d8.Contains(*h));
  const Point unreachable[] = {1, 4};
  EXPECT_FALSE(FindElementMapping(d8, from, unreachable).has_value());
}

TEST(PermGroupTest, RejectsGeneratorOfWrongDegree) {
  EXPECT_THROW(PermGroup(4, {Permutation::Identity(5)}), DomainError);
  EXPECT_THROW(PermGroup(0, {}), DomainError);
}

TEST(PermGroupTest, ConcurrentFirstAccessBuildsOneChain) {
  const PermGroup group = PermGroup::Symmetric(9);
  std::vector<BigInt> orders(8);
  {
    std::vector<std::jthread> workers;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      workers.emplace_back([&, i] { orders[i] = group.Order(); });
    }
  }
  for (const BigInt& order : orders) EXPECT_EQ(order, 362880);
}

// Property checks against exhaustive element lists.
class CorpusTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    corpus_ = new std::vector<PermGroup>(
        testing::RandomGroupCorpus({.seed = 7, .count = 200}));
  }
  static void TearDownTestSuite() { delete corpus_; }
  static std::vector<PermGroup>* corpus_;
};

std::vector<PermGroup>* CorpusTest::corpus_ = nullptr;

TEST_F(CorpusTest, ChainOrderMatchesElementCount) {
  std::size_t checked = 0;
  for (const PermGroup& h : *corpus_) {
    const auto elements =
        EnumerateElements(h.degree(), h.generators(), 10000);
    if (!elements) continue;
    ++checked;
    EXPECT_EQ(h.Order(), elements->size());
  }
  EXPECT_GT(checked, 100u);
}

TEST_F(CorpusTest, OrbitStabilizer) {
  for (const PermGroup& h : *corpus_) {
    for (Point a = 1; a <= h.degree(); ++a) {
      EXPECT_EQ(Orbit(h, a).size() * PointStabilizer(h, a).Order(), h.Order());
    }
  }
}

TEST_F(CorpusTest, OrbitsAndStabilizersMatchBruteForce) {
  for (const PermGroup& h : *corpus_) {
    const auto elements = EnumerateElements(h.degree(), h.generators(), 6000);
    if (!elements) continue;
    for (Point a = 1; a <= h.degree(); ++a) {
      EXPECT_EQ(Orbit(h, a), BruteOrbit(*elements, a));
      const PermGroup stab = PointStabilizer(h, a);
      const auto brute_stab = BruteStabilizer(*elements, a);
      EXPECT_EQ(stab.Order(), brute_stab.size());
      for (const Permutation& g : stab.generators()) EXPECT_TRUE(g.Fixes(a));
      for (Point b = 1; b <= h.degree(); ++b) {
        EXPECT_EQ(Orbit(stab, b), BruteOrbit(brute_stab, b));
      }
    }
  }
}

TEST_F(CorpusTest, OrbitPartitionCellsAreInvariant) {
  for (const PermGroup& h : *corpus_) {
    const OrderedPartition p = OrbitPartition(h);
    for (const Permutation& g : h.generators()) {
      for (const PointSet& cell : p.cells()) {
        PointSet image;
        for (Point x : cell) image.push_back(g[x]);
        std::sort(image.begin(), image.end());
        EXPECT_EQ(image, cell);
      }
    }
    for (std::size_t c = 1; c < p.size(); ++c) {
      EXPECT_LT(p.cell(c - 1).front(), p.cell(c).front());
    }
  }
}

TEST_F(CorpusTest, MembershipOfRandomWords) {
  std::mt19937_64 rng(99);
  for (const PermGroup& h : *corpus_) {
    for (const Permutation& g : h.generators()) EXPECT_TRUE(h.Contains(g));
    Permutation word = Permutation::Identity(h.degree());
    for (int step = 0; step < 20; ++step) {
      const Permutation& g = h.generators()[rng() % h.generators().size()];
      word = (rng() % 2 == 0) ? word * g : word * g.Inverse();
      EXPECT_TRUE(h.Contains(word));
    }
  }
}

TEST_F(CorpusTest, TransitivityDegreeMatchesTupleCount) {
  for (const PermGroup& h : *corpus_) {
    const auto elements = EnumerateElements(h.degree(), h.generators(), 6000);
    if (!elements) continue;
    EXPECT_EQ(TransitivityDegree(h),
              BruteTransitivityDegree(*elements, h.degree()));
  }
}

TEST_F(CorpusTest, TwoTransitiveIffTransitiveWithTransitiveStabilizer) {
  for (const PermGroup& h : *corpus_) {
    const Point alpha = 1;
    bool restated = IsTransitive(h);
    if (restated && h.degree() > 1) {
      const PermGroup stab = PointStabilizer(h, alpha);
      restated = Orbit(stab, 2).size() == h.degree() - 1;
    }
    EXPECT_EQ(TransitivityDegree(h) >= 2, restated);
  }
}

}  // namespace
}  // namespace orbitals
