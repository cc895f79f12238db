#ifndef ACTREE_SSSP_HPP_
#define ACTREE_SSSP_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "actree/ac_tree.hpp"
#include "actree/graph.hpp"

namespace actree {

struct SearchStats {
  std::size_t pops = 0;
  // Successful relaxations (first insertion counts as one).
  std::size_t key_decreases = 0;
  // Most entries ever held by a single queue at once.
  std::size_t max_queue_len = 0;
  std::size_t component_count = 0;
  std::size_t max_component_size = 0;
};

struct ShortestPathResult {
  std::vector<Weight> dist;
  std::vector<NodeId> parent;  // kNoNode at the source
  SearchStats stats;
};

// All three engines require every node to be reachable from the source and
// throw Error(kUnreachableNode) otherwise.

// Binary-heap Dijkstra over the whole graph; equal keys pop in node-id order.
ShortestPathResult Dijkstra(const Graph& g);

// Relaxation in topological order, no priority queue. Self-loops are
// ignored; any longer cycle throws Error(kCycleDetected).
ShortestPathResult DagShortestPaths(const Graph& g);

// Dijkstra run separately on every A-C component, components of a node in
// their topological order, descending into a node's own components as soon
// as the node is settled. Out-arcs of a settled node are relaxed before the
// descent. Throws Error(kInconsistentInput) if `ac` does not match `g`.
ShortestPathResult RecursiveDijkstra(const Graph& g, const AcTree& ac);

struct SptReport {
  bool ok = true;
  std::vector<std::string> violations;

  explicit operator bool() const { return ok; }
};

// Bellman certificate: dist[source] = 0, every other node has a parent whose
// arc is tight, parent links lead back to the source, and no arc improves a
// distance. O(n + e).
SptReport VerifySpt(const Graph& g, const ShortestPathResult& r);

}  // namespace actree

#endif  // ACTREE_SSSP_HPP_
