#include "actree/sssp.hpp"

#include "actree/ac_tree.hpp"
#include "actree/error.hpp"
#include "actree/generators.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace actree {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kMalformedLine;
}

ShortestPathResult Recursive(const Graph& g) { return RecursiveDijkstra(g, BuildAcTree(g)); }

TEST(DijkstraTest, Diamond) {
  const ShortestPathResult r = Dijkstra(testing::Diamond());
  EXPECT_EQ(r.dist, (std::vector<Weight>{0, 1, 4, 3}));
  EXPECT_EQ(r.parent, (std::vector<NodeId>{kNoNode, 0, 0, 1}));
  EXPECT_EQ(r.stats.pops, 4u);
  EXPECT_TRUE(VerifySpt(testing::Diamond(), r));
}

TEST(DijkstraTest, SingleNodeAndZeroCycle) {
  const ShortestPathResult one = Dijkstra(testing::SingleNode());
  EXPECT_EQ(one.dist, (std::vector<Weight>{0}));
  EXPECT_EQ(one.stats.pops, 1u);
  const ShortestPathResult zero = Dijkstra(testing::Cycle3(0.0));
  EXPECT_EQ(zero.dist, (std::vector<Weight>{0, 0, 0}));
  EXPECT_TRUE(VerifySpt(testing::Cycle3(0.0), zero));
}

TEST(DijkstraTest, MatchesPathEnumeration) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = testing::RandomSmallDigraph(1 + seed % 8, seed);
    const std::vector<Weight> expect = testing::ExhaustivePathDistances(g);
    const ShortestPathResult r = Dijkstra(g);
    for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_DOUBLE_EQ(r.dist[v], expect[v]);
  }
}

TEST(DagShortestPathsTest, Examples) {
  EXPECT_EQ(DagShortestPaths(testing::Diamond()).dist, Dijkstra(testing::Diamond()).dist);
  const std::vector<ArcRecord> path = {{0, 1, 2.0}, {1, 2, 3.0}};
  EXPECT_EQ(DagShortestPaths(Graph(3, 0, path)).dist, (std::vector<Weight>{0, 2, 5}));
  EXPECT_EQ(CodeOf([] { DagShortestPaths(testing::Cycle3()); }), ErrorCode::kCycleDetected);
  const std::vector<ArcRecord> loop = {{0, 1, 2.0}, {1, 1, 1.0}};
  EXPECT_EQ(DagShortestPaths(Graph(2, 0, loop)).dist, (std::vector<Weight>{0, 2}));
}

TEST(DagShortestPathsTest, AgreesWithDijkstra) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = GenRandomDag(2 + seed % 80, 3 * (2 + seed % 80), seed);
    const ShortestPathResult a = DagShortestPaths(g);
    const ShortestPathResult b = Dijkstra(g);
    EXPECT_EQ(a.dist, b.dist);
    EXPECT_TRUE(VerifySpt(g, a));
  }
}

TEST(RecursiveDijkstraTest, Examples) {
  const ShortestPathResult d = Recursive(testing::Diamond());
  EXPECT_EQ(d.dist, (std::vector<Weight>{0, 1, 4, 3}));
  EXPECT_EQ(d.stats.max_queue_len, 1u);

  const ShortestPathResult k = Recursive(testing::Complete3());
  EXPECT_EQ(k.dist, (std::vector<Weight>{0, 1, 1}));
  EXPECT_LE(k.stats.max_queue_len, 2u);

  const Graph layered = GenLayered(50, 4);
  EXPECT_LE(Recursive(layered).stats.max_queue_len, 1u);
  EXPECT_EQ(Recursive(layered).dist, Dijkstra(layered).dist);

  EXPECT_EQ(Recursive(testing::SingleNode()).dist, (std::vector<Weight>{0}));
}

// Exact agreement with Dijkstra, one pop per node, at most one decrease per
// arc, and no queue longer than width - 1.
TEST(RecursiveDijkstraTest, Properties) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 1 + seed % 100;
    const Graph g = GenRandomDigraph(n, (seed % 5) * n, seed, {0.0, 10.0});
    const AcTree ac = BuildAcTree(g);
    const ShortestPathResult r = RecursiveDijkstra(g, ac);
    EXPECT_EQ(r.dist, Dijkstra(g).dist) << seed;
    EXPECT_EQ(r.stats.pops, n);
    EXPECT_LE(r.stats.key_decreases, g.arc_count());
    EXPECT_LE(r.stats.max_queue_len, ac.width() - 1);
    EXPECT_EQ(r.stats.component_count, ac.component_count());
    EXPECT_TRUE(VerifySpt(g, r));
  }
}

TEST(RecursiveDijkstraTest, RejectsMismatchedTree) {
  const AcTree other = BuildAcTree(testing::Cycle3());
  EXPECT_EQ(CodeOf([&] { RecursiveDijkstra(testing::Diamond(), other); }),
            ErrorCode::kInconsistentInput);
  // Same node count, different structure: the path tree puts 2 under 1.
  const std::vector<ArcRecord> path = {{0, 1, 1.0}, {1, 2, 1.0}};
  const std::vector<ArcRecord> detour = {{0, 2, 1.0}, {2, 1, 1.0}};
  const AcTree path_tree = BuildAcTree(Graph(3, 0, path));
  EXPECT_EQ(CodeOf([&] { RecursiveDijkstra(Graph(3, 0, detour), path_tree); }),
            ErrorCode::kInconsistentInput);
}

TEST(SearchTest, UnreachableRejected) {
  const std::vector<ArcRecord> arcs = {{0, 1, 1.0}};
  const Graph g(3, 0, arcs);
  EXPECT_EQ(CodeOf([&] { Dijkstra(g); }), ErrorCode::kUnreachableNode);
  EXPECT_EQ(CodeOf([&] { DagShortestPaths(g); }), ErrorCode::kUnreachableNode);
}

TEST(VerifySptTest, DetectsInjectedFaults) {
  const Graph g = testing::Diamond();
  const ShortestPathResult good = Dijkstra(g);
  ASSERT_TRUE(VerifySpt(g, good));

  ShortestPathResult too_high = good;
  too_high.dist[3] += 1.0;
  EXPECT_FALSE(VerifySpt(g, too_high));

  ShortestPathResult too_low = good;
  too_low.dist[2] = 0.5;
  EXPECT_FALSE(VerifySpt(g, too_low));

  ShortestPathResult slack_parent = good;
  slack_parent.parent[3] = 2;  // 4 + 1 != 3
  EXPECT_FALSE(VerifySpt(g, slack_parent));

  ShortestPathResult bad_source = good;
  bad_source.dist[0] = 1.0;
  EXPECT_FALSE(VerifySpt(g, bad_source));

  ShortestPathResult missing_parent = good;
  missing_parent.parent[1] = kNoNode;
  EXPECT_FALSE(VerifySpt(g, missing_parent));

  // Tight arcs everywhere but the parents form a loop away from the source.
  const Graph zero = testing::Cycle3(0.0);
  ShortestPathResult loop = Dijkstra(zero);
  loop.parent[1] = 2;
  loop.parent[2] = 1;
  EXPECT_FALSE(VerifySpt(zero, loop));

  ShortestPathResult short_vectors = good;
  short_vectors.dist.pop_back();
  EXPECT_FALSE(VerifySpt(g, short_vectors));
}

TEST(VerifySptTest, ReportsViolations) {
  const Graph g = testing::Diamond();
  ShortestPathResult r = Dijkstra(g);
  r.dist[3] = 10.0;
  const SptReport report = VerifySpt(g, r);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.violations.empty());
}

}  // namespace
}  // namespace actree
