#ifndef ACTREE_TESTS_TEST_SUPPORT_HPP_
#define ACTREE_TESTS_TEST_SUPPORT_HPP_

// Fixtures and independent oracles shared by the test binaries. Nothing here
// may call into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "actree/ac_tree.hpp"
#include "actree/dominators.hpp"
#include "actree/generators.hpp"
#include "actree/graph.hpp"

namespace actree::testing {

// s=0, a=1, b=2, t=3: s->a:1, s->b:4, a->t:2, b->t:1.
inline Graph Diamond() {
  const std::vector<ArcRecord> arcs = {{0, 1, 1.0}, {0, 2, 4.0}, {1, 3, 2.0}, {2, 3, 1.0}};
  return Graph(4, 0, arcs);
}

// s=0 -> a=1 -> b=2 -> s.
inline Graph Cycle3(Weight w = 1.0) {
  const std::vector<ArcRecord> arcs = {{0, 1, w}, {1, 2, w}, {2, 0, w}};
  return Graph(3, 0, arcs);
}

inline Graph SingleNode() { return Graph(1, 0, std::vector<ArcRecord>{}); }

inline Graph Complete3() { return GenCompleteDigraph(3, 0, kUnitWeights); }

// Small random digraph with every node reachable and an arc count drawn from
// [n - 1, n * n].
inline Graph RandomSmallDigraph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + n);
  const std::size_t lo = n - 1;
  const std::size_t hi = n * n;
  const std::size_t e = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  return GenRandomDigraph(n, e, rng(), {0.0, 1.0});
}

// Arbitrary random arcs over n nodes; reachability not guaranteed.
inline Graph RandomRawDigraph(std::size_t n, std::size_t e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  std::vector<ArcRecord> arcs;
  for (std::size_t i = 0; i < e; ++i) arcs.push_back({node(rng), node(rng), 1.0});
  return Graph(n, 0, arcs);
}

// D(u) straight from the definition of dominance.
inline std::vector<bool> BruteDescendants(const Graph& g, NodeId u) {
  std::vector<bool> d(g.node_count(), false);
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = BruteForceDominates(g, u, v);
  return d;
}

// G_a built directly from its definition: for children u != v of a, an arc
// u -> v iff some arc of G goes from D(u) to D(v). Descendant sets come from
// brute-force dominance; only the child lists are taken from `tree`.
inline DominanceGraph NaiveDominanceGraph(const Graph& g, const DominatorTree& tree, NodeId a) {
  DominanceGraph dg;
  dg.owner = a;
  const auto kids = tree.children(a);
  dg.nodes.assign(kids.begin(), kids.end());
  std::vector<std::vector<bool>> desc;
  for (NodeId u : dg.nodes) desc.push_back(BruteDescendants(g, u));
  for (std::size_t i = 0; i < dg.nodes.size(); ++i) {
    for (std::size_t j = 0; j < dg.nodes.size(); ++j) {
      if (i == j) continue;
      bool linked = false;
      for (NodeId x = 0; x < g.node_count() && !linked; ++x) {
        if (!desc[i][x]) continue;
        for (const Arc& arc : g.OutArcs(x)) {
          if (desc[j][arc.head]) {
            linked = true;
            break;
          }
        }
      }
      if (linked) dg.arcs.emplace_back(dg.nodes[i], dg.nodes[j]);
    }
  }
  std::sort(dg.arcs.begin(), dg.arcs.end());
  return dg;
}

// Shortest distances by enumerating every simple path from the source.
inline std::vector<Weight> ExhaustivePathDistances(const Graph& g) {
  std::vector<Weight> best(g.node_count(), kInfinity);
  std::vector<bool> on_path(g.node_count(), false);
  std::function<void(NodeId, Weight)> walk = [&](NodeId v, Weight d) {
    best[v] = std::min(best[v], d);
    on_path[v] = true;
    for (const Arc& a : g.OutArcs(v)) {
      if (!on_path[a.head]) walk(a.head, d + a.weight);
    }
    on_path[v] = false;
  };
  walk(g.source(), 0.0);
  return best;
}

}  // namespace actree::testing

#endif  // ACTREE_TESTS_TEST_SUPPORT_HPP_
